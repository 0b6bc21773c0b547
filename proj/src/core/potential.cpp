#include "potential.hpp"

#include <cmath>

namespace semwave {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw_error(ErrorCode::invalid_parameter, std::string(what) + " must be finite");
}

} // namespace

PotentialSpec PotentialSpec::free_particle() {
    PotentialSpec p;
    p.kind_ = PotentialKind::free;
    return p;
}

PotentialSpec PotentialSpec::harmonic(double mass, double omega) {
    require_finite(mass, "harmonic mass");
    require_finite(omega, "harmonic omega");
    if (!(mass > 0.0) || !(omega > 0.0))
        throw_error(ErrorCode::invalid_parameter, "harmonic potential needs mass > 0 and omega > 0");
    PotentialSpec p;
    p.kind_ = PotentialKind::harmonic;
    p.mass_ = mass;
    p.omega_ = omega;
    return p;
}

PotentialSpec PotentialSpec::double_well(double a, double b) {
    require_finite(a, "double-well a");
    require_finite(b, "double-well b");
    if (!(a > 0.0) || !(b > 0.0))
        throw_error(ErrorCode::invalid_parameter, "double-well potential needs a > 0 and b > 0");
    PotentialSpec p;
    p.kind_ = PotentialKind::double_well;
    p.a_ = a;
    p.b_ = b;
    return p;
}

PotentialSpec PotentialSpec::cubic_nonlinear(double gamma) {
    require_finite(gamma, "cubic coupling gamma");
    PotentialSpec p;
    p.kind_ = PotentialKind::cubic_nonlinear;
    p.gamma_ = gamma;
    return p;
}

PotentialSpec PotentialSpec::mexican_hat(double mu2, double lambda) {
    require_finite(mu2, "mexican-hat mu2");
    require_finite(lambda, "mexican-hat lambda");
    if (!(lambda > 0.0))
        throw_error(ErrorCode::invalid_parameter,
                    "mexican-hat potential needs lambda > 0 to be bounded below");
    PotentialSpec p;
    p.kind_ = PotentialKind::mexican_hat;
    p.mu2_ = mu2;
    p.lambda_ = lambda;
    return p;
}

double PotentialSpec::spring_constant() const {
    if (kind_ != PotentialKind::harmonic)
        throw_error(ErrorCode::invalid_parameter, "spring constant is defined for harmonic only");
    return mass_ * omega_ * omega_;
}

double PotentialSpec::evaluate(double x, double psi_abs2) const {
    if (state_dependent() && psi_abs2 < 0.0)
        throw_error(ErrorCode::invalid_parameter, "|psi|^2 cannot be negative");
    switch (kind_) {
        case PotentialKind::free:
            return 0.0;
        case PotentialKind::harmonic:
            return 0.5 * mass_ * omega_ * omega_ * x * x;
        case PotentialKind::double_well: {
            const double u = x * x - b_ * b_;
            return a_ * u * u;
        }
        case PotentialKind::cubic_nonlinear:
            return gamma_ * psi_abs2;
        case PotentialKind::mexican_hat:
            return -mu2_ * psi_abs2 + lambda_ * psi_abs2 * psi_abs2;
    }
    throw_error(ErrorCode::internal, "unhandled potential kind");
}

double PotentialSpec::energy_density(double x, double psi_abs2) const {
    if (kind_ == PotentialKind::cubic_nonlinear)
        return 0.5 * gamma_ * psi_abs2 * psi_abs2;
    return evaluate(x, psi_abs2) * psi_abs2;
}

std::string PotentialSpec::name() const {
    switch (kind_) {
        case PotentialKind::free: return "free";
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::double_well: return "double_well";
        case PotentialKind::cubic_nonlinear: return "cubic_nonlinear";
        case PotentialKind::mexican_hat: return "mexican_hat";
    }
    return "unknown";
}

std::vector<double> potential_profile(const PotentialSpec& spec, const SpatialGrid& grid,
                                      const WaveFunction* psi) {
    if (spec.state_dependent()) {
        if (psi == nullptr)
            throw_error(ErrorCode::invalid_parameter,
                        spec.name() + " potential needs a state to be profiled");
        require_same_grid(grid, psi->grid, "potential_profile");
    }
    std::vector<double> out(static_cast<size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) {
        const double rho =
            psi ? std::norm(psi->amplitudes[static_cast<size_t>(i)]) : 0.0;
        out[static_cast<size_t>(i)] = spec.evaluate(grid.x(i), rho);
    }
    return out;
}

} // namespace semwave
