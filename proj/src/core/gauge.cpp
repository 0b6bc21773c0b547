#include "gauge.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "spectral.hpp"

namespace semwave {

namespace {

void require_profile(const SpatialGrid& grid, const std::vector<double>& f, const char* what) {
    if (static_cast<int>(f.size()) != grid.n_points)
        throw_error(ErrorCode::invalid_parameter,
                    std::string(what) + ": profile length does not match grid");
    for (double v : f)
        if (!std::isfinite(v))
            throw_error(ErrorCode::invalid_parameter, std::string(what) + ": non-finite entry");
}

} // namespace

GaugeField make_gauge_field(const SpatialGrid& grid, std::vector<double> a0,
                            std::vector<double> a1, double charge) {
    require_profile(grid, a0, "gauge field a0");
    require_profile(grid, a1, "gauge field a1");
    if (charge == 0.0 || !std::isfinite(charge))
        throw_error(ErrorCode::invalid_parameter, "semantic charge q must be nonzero and finite");
    return GaugeField{grid, std::move(a0), std::move(a1), charge};
}

GaugeField make_zero_gauge_field(const SpatialGrid& grid, double charge) {
    std::vector<double> zeros(static_cast<size_t>(grid.n_points), 0.0);
    return make_gauge_field(grid, zeros, zeros, charge);
}

std::pair<WaveFunction, GaugeField> apply_gauge_transform(const WaveFunction& psi,
                                                          const GaugeField& field,
                                                          const GaugeTransform& g) {
    require_same_grid(psi.grid, field.grid, "apply_gauge_transform");
    require_profile(psi.grid, g.theta, "gauge transform theta");
    if (!g.theta_dot.empty()) require_profile(psi.grid, g.theta_dot, "gauge transform theta_dot");

    WaveFunction psi_out{psi.grid, psi.amplitudes};
    for (int i = 0; i < psi.grid.n_points; ++i)
        psi_out.amplitudes[static_cast<size_t>(i)] *=
            std::polar(1.0, g.theta[static_cast<size_t>(i)]);

    const std::vector<double> dtheta_dx = derivative(g.theta, psi.grid);
    GaugeField field_out = field;
    const double inv_q = 1.0 / field.charge;
    for (int i = 0; i < psi.grid.n_points; ++i) {
        field_out.a1[static_cast<size_t>(i)] += inv_q * dtheta_dx[static_cast<size_t>(i)];
        if (!g.theta_dot.empty())
            field_out.a0[static_cast<size_t>(i)] += inv_q * g.theta_dot[static_cast<size_t>(i)];
    }
    return {std::move(psi_out), std::move(field_out)};
}

std::vector<cplx> covariant_derivative_space(const WaveFunction& psi, const GaugeField& field) {
    require_same_grid(psi.grid, field.grid, "covariant_derivative");
    std::vector<cplx> d = derivative(psi.amplitudes, psi.grid);
    for (int i = 0; i < psi.grid.n_points; ++i)
        d[static_cast<size_t>(i)] -= cplx{0.0, field.charge * field.a1[static_cast<size_t>(i)]} *
                                     psi.amplitudes[static_cast<size_t>(i)];
    return d;
}

std::vector<cplx> covariant_derivative_time(const WaveFunction& psi, const GaugeField& field,
                                            const std::vector<cplx>& dpsi_dt) {
    require_same_grid(psi.grid, field.grid, "covariant_derivative");
    if (static_cast<int>(dpsi_dt.size()) != psi.grid.n_points)
        throw_error(ErrorCode::invalid_parameter,
                    "time covariant derivative needs dpsi_dt matching the grid");
    std::vector<cplx> d = dpsi_dt;
    for (int i = 0; i < psi.grid.n_points; ++i)
        d[static_cast<size_t>(i)] -= cplx{0.0, field.charge * field.a0[static_cast<size_t>(i)]} *
                                     psi.amplitudes[static_cast<size_t>(i)];
    return d;
}

std::vector<double> field_strength(const GaugeField& before, const GaugeField& after,
                                   double dt) {
    require_same_grid(before.grid, after.grid, "field_strength");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw_error(ErrorCode::invalid_parameter, "field_strength needs dt > 0");
    const int n = before.grid.n_points;
    std::vector<double> a0_mid(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        a0_mid[static_cast<size_t>(i)] = 0.5 * (before.a0[static_cast<size_t>(i)] +
                                                after.a0[static_cast<size_t>(i)]);
    const std::vector<double> da0_dx = derivative(a0_mid, before.grid);
    std::vector<double> f(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        f[static_cast<size_t>(i)] =
            (after.a1[static_cast<size_t>(i)] - before.a1[static_cast<size_t>(i)]) / dt -
            da0_dx[static_cast<size_t>(i)];
    return f;
}

std::vector<double> lagrangian_density(const WaveFunction& psi,
                                       const std::vector<cplx>& dpsi_dt,
                                       const GaugeField& field,
                                       const std::vector<double>& f01,
                                       const Nonlinearity& nonlinearity, double hbar,
                                       double mass) {
    require_same_grid(psi.grid, field.grid, "lagrangian_density");
    const int n = psi.grid.n_points;
    if (static_cast<int>(dpsi_dt.size()) != n || static_cast<int>(f01.size()) != n)
        throw_error(ErrorCode::invalid_parameter,
                    "lagrangian_density: dpsi_dt and f01 must match the grid");
    if (!(hbar > 0.0) || !(mass > 0.0))
        throw_error(ErrorCode::invalid_parameter, "hbar and mass must be positive");

    const std::vector<cplx> d0 = covariant_derivative_time(psi, field, dpsi_dt);
    const std::vector<cplx> dx = covariant_derivative_space(psi, field);
    const double half_inv_q2 = 0.5 / (field.charge * field.charge);

    std::vector<double> lag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        const double rho = std::norm(psi.amplitudes[u]);
        // (i hbar/2)(psi* D0 psi - c.c.) = -hbar Im(psi* D0 psi)
        const double time_term = -hbar * std::imag(std::conj(psi.amplitudes[u]) * d0[u]);
        const double grad_term = -0.5 * hbar * hbar / mass * std::norm(dx[u]);
        double nonlinear_term = 0.0;
        switch (nonlinearity.kind) {
            case NonlinearityKind::none: break;
            case NonlinearityKind::cubic:
                nonlinear_term = -0.5 * nonlinearity.gamma * rho * rho;
                break;
            case NonlinearityKind::mexican_hat:
                nonlinear_term = nonlinearity.mu2 * rho - nonlinearity.lambda * rho * rho;
                break;
        }
        lag[u] = half_inv_q2 * f01[u] * f01[u] + time_term + grad_term + nonlinear_term;
    }
    return lag;
}

double euler_lagrange_residual(const Trajectory& traj, const PotentialSpec& spec,
                               const EvolutionConfig& cfg) {
    if (traj.size() < 3)
        throw_error(ErrorCode::invalid_parameter,
                    "residual check needs at least 3 recorded states");
    if (traj.config.record_every != 1)
        throw_error(ErrorCode::invalid_parameter,
                    "residual check needs a trajectory recorded every step");
    if (spec.state_dependent())
        throw_error(ErrorCode::wrong_method, "residual check covers state-independent potentials");

    const SpatialGrid& grid = traj.states.front().grid;
    const std::vector<double> v = potential_profile(spec, grid);
    const double dt = cfg.dt;
    const double kin_pref = 0.5 * cfg.hbar * cfg.hbar / cfg.mass;
    const bool spectral = cfg.method == Method::split_step_spectral;

    std::optional<Fft> fft;
    std::vector<double> k2;
    if (spectral) {
        fft.emplace(grid.n_points);
        const std::vector<double> k = fft_wavenumbers(grid);
        k2.resize(k.size());
        for (size_t j = 0; j < k.size(); ++j) k2[j] = k[j] * k[j];
    }

    double max_residual = 0.0;
    for (size_t t = 1; t + 1 < traj.size(); ++t) {
        const WaveFunction& psi = traj.states[t];
        std::vector<cplx> lap;
        if (spectral) {
            lap = psi.amplitudes;
            fft->forward(lap);
            for (size_t j = 0; j < lap.size(); ++j) lap[j] *= -k2[j];
            fft->inverse(lap);
        } else {
            lap = second_difference(psi.amplitudes, grid);
        }
        for (int i = 0; i < grid.n_points; ++i) {
            const size_t u = static_cast<size_t>(i);
            const cplx dpsi_dt =
                (traj.states[t + 1].amplitudes[u] - traj.states[t - 1].amplitudes[u]) /
                (2.0 * dt);
            const cplx h_psi = -kin_pref * lap[u] + v[u] * psi.amplitudes[u];
            const cplx r = cplx{0.0, cfg.hbar} * dpsi_dt - h_psi;
            max_residual = std::max(max_residual, std::abs(r));
        }
    }
    return max_residual;
}

NoetherRecord noether(const WaveFunction& psi, const GaugeField& field, double hbar,
                      double mass) {
    require_same_grid(psi.grid, field.grid, "noether");
    if (!(hbar > 0.0) || !(mass > 0.0))
        throw_error(ErrorCode::invalid_parameter, "hbar and mass must be positive");
    const int n = psi.grid.n_points;
    const std::vector<cplx> dx = covariant_derivative_space(psi, field);
    NoetherRecord rec;
    rec.j0.resize(static_cast<size_t>(n));
    rec.j1.resize(static_cast<size_t>(n));
    double q_total = 0.0;
    for (int i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        rec.j0[u] = std::norm(psi.amplitudes[u]);
        rec.j1[u] = hbar / mass * std::imag(std::conj(psi.amplitudes[u]) * dx[u]);
        q_total += rec.j0[u];
    }
    rec.charge = q_total * psi.grid.dx();
    return rec;
}

GaugeCheckReport gauge_check(const WaveFunction& psi, const GaugeField& field,
                             const std::vector<double>& theta, double hbar, double mass,
                             const std::string& theta_description) {
    require_same_grid(psi.grid, field.grid, "gauge_check");
    require_profile(psi.grid, theta, "gauge_check theta");

    const int n = psi.grid.n_points;
    GaugeTransform g{theta, {}};
    auto [psi2, field2] = apply_gauge_transform(psi, field, g);

    GaugeCheckReport report;
    report.theta_description = theta_description;

    const std::vector<double> mod1 = embedding_projection(psi);
    const std::vector<double> mod2 = embedding_projection(psi2);
    for (int i = 0; i < n; ++i)
        report.max_abs_density_diff =
            std::max(report.max_abs_density_diff,
                     std::abs(mod2[static_cast<size_t>(i)] - mod1[static_cast<size_t>(i)]));

    const std::vector<cplx> dx1 = covariant_derivative_space(psi, field);
    const std::vector<cplx> dx2 = covariant_derivative_space(psi2, field2);
    for (int i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        const cplx expected = std::polar(1.0, theta[u]) * dx1[u];
        report.max_covariance_residual =
            std::max(report.max_covariance_residual, std::abs(dx2[u] - expected));
    }

    // A consistent time derivative for the static check: free-particle
    // Schrodinger right-hand side; it transforms with the same local phase.
    std::vector<cplx> lap = second_difference(psi.amplitudes, psi.grid);
    std::vector<cplx> dpsi_dt(static_cast<size_t>(n));
    const double kin_pref = 0.5 * hbar * hbar / mass;
    for (int i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        dpsi_dt[u] = cplx{0.0, -1.0 / hbar} * (-kin_pref * lap[u]);
    }
    std::vector<cplx> dpsi_dt2(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const size_t u = static_cast<size_t>(i);
        dpsi_dt2[u] = std::polar(1.0, theta[u]) * dpsi_dt[u];
    }

    const std::vector<double> f1 = field_strength(field, field, 1.0);
    const std::vector<double> f2 = field_strength(field2, field2, 1.0);
    const std::vector<double> lag1 =
        lagrangian_density(psi, dpsi_dt, field, f1, Nonlinearity::none(), hbar, mass);
    const std::vector<double> lag2 =
        lagrangian_density(psi2, dpsi_dt2, field2, f2, Nonlinearity::none(), hbar, mass);
    for (int i = 0; i < n; ++i)
        report.max_lagrangian_density_diff =
            std::max(report.max_lagrangian_density_diff,
                     std::abs(lag2[static_cast<size_t>(i)] - lag1[static_cast<size_t>(i)]));

    report.charge_before = noether(psi, field, hbar, mass).charge;
    report.charge_after = noether(psi2, field2, hbar, mass).charge;
    return report;
}

} // namespace semwave
