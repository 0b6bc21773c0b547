#include "wavefunction.hpp"

#include <cmath>
#include <limits>

namespace semwave {

WaveFunction make_wavefunction(const SpatialGrid& grid, std::vector<cplx> amplitudes) {
    if (static_cast<int>(amplitudes.size()) != grid.n_points)
        throw_error(ErrorCode::invalid_parameter,
                    "amplitude count " + std::to_string(amplitudes.size()) +
                        " does not match grid with " + std::to_string(grid.n_points) +
                        " points");
    for (const cplx& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw_error(ErrorCode::invalid_parameter, "non-finite amplitude");
    }
    return WaveFunction{grid, std::move(amplitudes)};
}

WaveFunction make_gaussian(const SpatialGrid& grid, double center, double width,
                           double momentum) {
    if (!(width > 0.0) || !std::isfinite(width))
        throw_error(ErrorCode::invalid_parameter, "gaussian width must be positive");
    if (!(center >= grid.x_min && center <= grid.x_max) || !std::isfinite(center))
        throw_error(ErrorCode::invalid_parameter,
                    "gaussian center " + std::to_string(center) + " outside grid [" +
                        std::to_string(grid.x_min) + ", " + std::to_string(grid.x_max) + "]");
    if (!std::isfinite(momentum))
        throw_error(ErrorCode::invalid_parameter, "gaussian momentum must be finite");

    std::vector<cplx> amp(static_cast<size_t>(grid.n_points));
    const double inv4w2 = 1.0 / (4.0 * width * width);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        const double d = x - center;
        const double envelope = std::exp(-d * d * inv4w2);
        amp[static_cast<size_t>(i)] = envelope * std::polar(1.0, momentum * x);
    }
    return normalize(WaveFunction{grid, std::move(amp)});
}

WaveFunction make_plane_wave(const SpatialGrid& grid, double k) {
    std::vector<cplx> amp(static_cast<size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i)
        amp[static_cast<size_t>(i)] = std::polar(1.0, k * grid.x(i));
    return normalize(WaveFunction{grid, std::move(amp)});
}

double norm_squared(const WaveFunction& psi) {
    double s = 0.0;
    for (const cplx& a : psi.amplitudes) s += std::norm(a);
    return s * psi.grid.dx();
}

double norm(const WaveFunction& psi) { return std::sqrt(norm_squared(psi)); }

WaveFunction normalize(const WaveFunction& psi) {
    const double n2 = norm_squared(psi);
    if (!(n2 > std::numeric_limits<double>::min()))
        throw_error(ErrorCode::degenerate_state, "cannot normalize a zero-norm state");
    const double inv = 1.0 / std::sqrt(n2);
    WaveFunction out{psi.grid, psi.amplitudes};
    for (cplx& a : out.amplitudes) a *= inv;
    return out;
}

cplx inner_product(const WaveFunction& bra, const WaveFunction& ket) {
    require_same_grid(bra.grid, ket.grid, "inner_product");
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < bra.amplitudes.size(); ++i)
        s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
    return s * bra.grid.dx();
}

WaveFunction superpose_raw(const std::vector<SuperpositionTerm>& terms) {
    if (terms.empty())
        throw_error(ErrorCode::invalid_parameter, "superposition needs at least one component");
    const SpatialGrid& grid = terms.front().state->grid;
    for (const SuperpositionTerm& t : terms) {
        require_same_grid(grid, t.state->grid, "superpose");
        if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
            throw_error(ErrorCode::invalid_parameter, "non-finite superposition coefficient");
    }
    std::vector<cplx> amp(static_cast<size_t>(grid.n_points), cplx{0.0, 0.0});
    for (const SuperpositionTerm& t : terms)
        for (size_t i = 0; i < amp.size(); ++i)
            amp[i] += t.coefficient * t.state->amplitudes[i];
    return WaveFunction{grid, std::move(amp)};
}

WaveFunction superpose(const std::vector<SuperpositionTerm>& terms) {
    WaveFunction combined = superpose_raw(terms);
    const double n2 = norm_squared(combined);
    if (!(n2 > std::numeric_limits<double>::min()))
        throw_error(ErrorCode::degenerate_state,
                    "superposition interfered destructively to the zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : combined.amplitudes) a *= inv;
    return combined;
}

std::vector<double> embedding_projection(const WaveFunction& psi) {
    std::vector<double> out(psi.amplitudes.size());
    for (size_t i = 0; i < psi.amplitudes.size(); ++i) out[i] = std::abs(psi.amplitudes[i]);
    return out;
}

double position_expectation(const WaveFunction& psi) {
    double weighted = 0.0;
    double total = 0.0;
    for (int i = 0; i < psi.size(); ++i) {
        const double p = std::norm(psi.amplitudes[static_cast<size_t>(i)]);
        weighted += psi.grid.x(i) * p;
        total += p;
    }
    if (total <= 0.0)
        throw_error(ErrorCode::degenerate_state, "position expectation of a zero state");
    return weighted / total;
}

WaveFunction scale(const WaveFunction& psi, cplx factor) {
    WaveFunction out{psi.grid, psi.amplitudes};
    for (cplx& a : out.amplitudes) a *= factor;
    return out;
}

} // namespace semwave
