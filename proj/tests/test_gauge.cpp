#include <doctest.h>

#include <cmath>

#include "core/gauge.hpp"
#include "core/spectral.hpp"
#include "helpers.hpp"

using namespace semwave;
using test_helpers::random_smooth_profile;
using test_helpers::random_state;

namespace {

const double kPi = 3.14159265358979323846;
const SpatialGrid kGrid = make_grid(256, -10.0, 10.0, Boundary::periodic);

GaugeField smooth_background(const SpatialGrid& grid, double q) {
    std::vector<double> a0(static_cast<size_t>(grid.n_points));
    std::vector<double> a1(static_cast<size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) {
        const double u = 2.0 * kPi * (grid.x(i) - grid.x_min) / grid.length();
        a0[static_cast<size_t>(i)] = 0.3 * std::sin(u);
        a1[static_cast<size_t>(i)] = 0.2 * std::cos(2.0 * u);
    }
    return make_gauge_field(grid, a0, a1, q);
}

std::vector<double> zeros(const SpatialGrid& grid) {
    return std::vector<double>(static_cast<size_t>(grid.n_points), 0.0);
}

} // namespace

TEST_CASE("zero transform leaves everything unchanged") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    const auto [psi2, field2] = apply_gauge_transform(psi, field, GaugeTransform{zeros(kGrid), {}});
    CHECK(test_helpers::max_abs_diff(psi.amplitudes, psi2.amplitudes) == 0.0);
    CHECK(test_helpers::max_abs_diff(field.a0, field2.a0) == 0.0);
    CHECK(test_helpers::max_abs_diff(field.a1, field2.a1) < 1e-14);
}

TEST_CASE("constant theta is a global phase") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    const double c = 0.9;
    std::vector<double> theta(static_cast<size_t>(kGrid.n_points), c);
    const auto [psi2, field2] = apply_gauge_transform(psi, field, GaugeTransform{theta, {}});
    const cplx phase = std::polar(1.0, c);
    for (size_t i = 0; i < psi.amplitudes.size(); ++i)
        CHECK(std::abs(psi2.amplitudes[i] - phase * psi.amplitudes[i]) < 1e-14);
    CHECK(test_helpers::max_abs_diff(field.a0, field2.a0) == 0.0);
    CHECK(test_helpers::max_abs_diff(field.a1, field2.a1) < 1e-13);
}

TEST_CASE("a local phase never shows up in the density") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    std::vector<double> theta(static_cast<size_t>(kGrid.n_points));
    for (int i = 0; i < kGrid.n_points; ++i)
        theta[static_cast<size_t>(i)] = std::sin(2.0 * kPi * kGrid.x(i) / kGrid.length());
    const auto [psi2, _] = apply_gauge_transform(psi, field, GaugeTransform{theta, {}});
    CHECK(test_helpers::max_abs_diff(embedding_projection(psi), embedding_projection(psi2)) <
          1e-14);
}

TEST_CASE("transform grids must match") {
    const SpatialGrid other = make_grid(256, -10.0, 10.0, Boundary::reflecting);
    const WaveFunction psi = make_gaussian(other, 0.0, 1.0, 0.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    CHECK_ERROR_CODE(apply_gauge_transform(psi, field, GaugeTransform{zeros(other), {}}),
                     ErrorCode::incompatible_grids);
}

TEST_CASE("covariant derivative reduces to the plain derivative without a field") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = make_zero_gauge_field(kGrid, 0.7);
    const std::vector<cplx> dcov = covariant_derivative_space(psi, field);
    const std::vector<cplx> dplain = derivative(psi.amplitudes, kGrid);
    CHECK(test_helpers::max_abs_diff(dcov, dplain) < 1e-12);
}

TEST_CASE("covariant derivative transforms covariantly") {
    Rng rng(101);
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> theta = random_smooth_profile(kGrid, rng);
        const auto [psi2, field2] = apply_gauge_transform(psi, field, GaugeTransform{theta, {}});
        const std::vector<cplx> d1 = covariant_derivative_space(psi, field);
        const std::vector<cplx> d2 = covariant_derivative_space(psi2, field2);
        double residual = 0.0;
        for (size_t i = 0; i < d1.size(); ++i)
            residual = std::max(residual, std::abs(d2[i] - std::polar(1.0, theta[i]) * d1[i]));
        CHECK(residual < 1e-8);
    }
}

TEST_CASE("constant a1 = k/q cancels a plane wave's derivative") {
    const SpatialGrid grid = make_grid(256, -20.0, 20.0, Boundary::periodic);
    const double q = 0.7;
    const double k = 2.0 * kPi / grid.length() * 6.0;
    const WaveFunction psi = make_plane_wave(grid, k);
    std::vector<double> a1(static_cast<size_t>(grid.n_points), k / q);
    const GaugeField field = make_gauge_field(grid, zeros(grid), a1, q);
    const std::vector<cplx> d = covariant_derivative_space(psi, field);
    for (const cplx& v : d) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("time covariant derivative needs the caller's dpsi_dt") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    CHECK_ERROR_CODE(covariant_derivative_time(psi, field, std::vector<cplx>{}),
                     ErrorCode::invalid_parameter);
}

TEST_CASE("transform composition adds the phases") {
    Rng rng(103);
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    const std::vector<double> t1 = random_smooth_profile(kGrid, rng);
    const std::vector<double> t2 = random_smooth_profile(kGrid, rng);
    std::vector<double> sum(t1.size());
    for (size_t i = 0; i < t1.size(); ++i) sum[i] = t1[i] + t2[i];

    const auto [psi_a, field_a] = apply_gauge_transform(psi, field, GaugeTransform{t1, {}});
    const auto [psi_ab, field_ab] = apply_gauge_transform(psi_a, field_a, GaugeTransform{t2, {}});
    const auto [psi_s, field_s] = apply_gauge_transform(psi, field, GaugeTransform{sum, {}});

    CHECK(test_helpers::max_abs_diff(psi_ab.amplitudes, psi_s.amplitudes) < 1e-14);
    CHECK(test_helpers::max_abs_diff(field_ab.a1, field_s.a1) < 1e-13);
    CHECK(test_helpers::max_abs_diff(field_ab.a0, field_s.a0) < 1e-14);
}

TEST_CASE("pure gauge fields carry no field strength") {
    Rng rng(107);
    const std::vector<double> theta = random_smooth_profile(kGrid, rng);
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    const GaugeField zero = make_zero_gauge_field(kGrid, 0.7);
    const auto [_, pure_gauge] = apply_gauge_transform(psi, zero, GaugeTransform{theta, {}});
    const std::vector<double> f = field_strength(pure_gauge, pure_gauge, 1.0);
    for (double v : f) CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("linear scalar potential gives a constant field strength") {
    const SpatialGrid box = make_grid(128, -4.0, 4.0, Boundary::reflecting);
    const double c = 1.7;
    std::vector<double> a0(static_cast<size_t>(box.n_points));
    for (int i = 0; i < box.n_points; ++i) a0[static_cast<size_t>(i)] = c * box.x(i);
    const GaugeField field = make_gauge_field(box, a0, zeros(box), 0.7);
    const std::vector<double> f = field_strength(field, field, 1.0);
    for (double v : f) CHECK(std::abs(v - (-c)) < 1e-10);
}

TEST_CASE("zero field has zero strength") {
    const GaugeField field = make_zero_gauge_field(kGrid, 1.0);
    for (double v : field_strength(field, field, 0.5)) CHECK(v == 0.0);
}

TEST_CASE("matter-free lagrangian is the pure field term") {
    Rng rng(109);
    std::vector<cplx> amp(static_cast<size_t>(kGrid.n_points), cplx{0.0, 0.0});
    const WaveFunction vacuum{kGrid, amp};
    const GaugeField field = smooth_background(kGrid, 0.7);
    std::vector<double> f01(static_cast<size_t>(kGrid.n_points));
    for (double& v : f01) v = rng.uniform(-2.0, 2.0);
    const std::vector<cplx> dpsi_dt(static_cast<size_t>(kGrid.n_points), cplx{0.0, 0.0});
    const std::vector<double> lag =
        lagrangian_density(vacuum, dpsi_dt, field, f01, Nonlinearity::none(), 1.0, 1.0);
    for (size_t i = 0; i < lag.size(); ++i)
        CHECK(lag[i] == doctest::Approx(0.5 / (0.7 * 0.7) * f01[i] * f01[i]).epsilon(1e-14));
}

TEST_CASE("lagrangian and charge are gauge invariant") {
    Rng rng(113);
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 1.0);
    const GaugeField field = smooth_background(kGrid, 0.7);
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<double> theta = random_smooth_profile(kGrid, rng);
        const GaugeCheckReport report = gauge_check(psi, field, theta, 1.0, 1.0, "random smooth");
        CHECK(report.max_abs_density_diff <= 1e-14);
        CHECK(report.max_covariance_residual <= 1e-8);
        CHECK(report.max_lagrangian_density_diff <= 1e-8);
        CHECK(std::abs(report.charge_after - report.charge_before) <= 1e-12);
        CHECK(report.convention == "mostly-minus");
    }
}

TEST_CASE("stationary state has vanishing total action density") {
    const SpatialGrid grid = make_grid(512, -10.0, 10.0, Boundary::periodic);
    const PotentialSpec well = PotentialSpec::harmonic(1.0, 1.0);
    const EigenSolution sol = eigenstates(well, grid, 1, 1.0, 1.0);
    const WaveFunction& phi = sol.states[0];
    const double e0 = sol.energies[0];

    std::vector<cplx> dpsi_dt(phi.amplitudes.size());
    for (size_t i = 0; i < dpsi_dt.size(); ++i)
        dpsi_dt[i] = cplx{0.0, -e0} * phi.amplitudes[i]; // -i E0 psi / hbar

    const GaugeField zero = make_zero_gauge_field(grid, 1.0);
    const std::vector<double> f01(static_cast<size_t>(grid.n_points), 0.0);
    const std::vector<double> lag =
        lagrangian_density(phi, dpsi_dt, zero, f01, Nonlinearity::none(), 1.0, 1.0);

    // Adding the explicit potential term -V|psi|^2 completes the density;
    // its integral must cancel against E0 for the stationary state.
    double total = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        const double rho = std::norm(phi.amplitudes[static_cast<size_t>(i)]);
        total += lag[static_cast<size_t>(i)] - well.evaluate(grid.x(i)) * rho;
    }
    total *= grid.dx();
    CHECK(std::abs(total) < 1e-6);
}

TEST_CASE("schrodinger residual is small and shrinks at second order") {
    const PotentialSpec well = PotentialSpec::harmonic(1.0, 1.0);
    auto residual_at = [&](int n, double dt) {
        const SpatialGrid grid = make_grid(n, -10.0, 10.0, Boundary::periodic);
        const WaveFunction psi0 = make_gaussian(grid, 1.0, 0.8, 0.0);
        EvolutionConfig cfg;
        cfg.method = Method::crank_nicolson;
        cfg.dt = dt;
        cfg.n_steps = 200;
        cfg.record_every = 1;
        const Trajectory traj = evolve_linear(psi0, well, cfg);
        return euler_lagrange_residual(traj, well, cfg);
    };
    const double r1 = residual_at(512, 1e-3);
    CHECK(r1 < 1e-3);
    const double r2 = residual_at(1024, 5e-4);
    const double factor = r1 / r2;
    CHECK(factor > 3.0);
    CHECK(factor < 5.0);
}

TEST_CASE("analytic stationary phases solve the discrete equation") {
    const SpatialGrid grid = make_grid(512, -10.0, 10.0, Boundary::periodic);
    const PotentialSpec well = PotentialSpec::harmonic(1.0, 1.0);
    const EigenSolution sol = eigenstates(well, grid, 1, 1.0, 1.0);

    EvolutionConfig cfg;
    cfg.method = Method::split_step_spectral;
    cfg.dt = 1e-3;
    cfg.n_steps = 4;
    cfg.record_every = 1;

    Trajectory traj;
    traj.config = cfg;
    for (long s = 0; s <= cfg.n_steps; ++s) {
        const double t = static_cast<double>(s) * cfg.dt;
        traj.times.push_back(t);
        traj.states.push_back(scale(sol.states[0], std::polar(1.0, -sol.energies[0] * t)));
        traj.observables.push_back({});
    }
    CHECK(euler_lagrange_residual(traj, well, cfg) < 1e-6);
}

TEST_CASE("residual check rejects short or sparse trajectories") {
    const SpatialGrid grid = make_grid(64, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi = make_gaussian(grid, 0.0, 1.0, 0.0);
    const PotentialSpec free = PotentialSpec::free_particle();
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.n_steps = 1;
    cfg.record_every = 1;
    const Trajectory two_records = evolve_linear(psi, free, cfg);
    CHECK_ERROR_CODE(euler_lagrange_residual(two_records, free, cfg),
                     ErrorCode::invalid_parameter);

    cfg.n_steps = 10;
    cfg.record_every = 5;
    const Trajectory sparse = evolve_linear(psi, free, cfg);
    CHECK_ERROR_CODE(euler_lagrange_residual(sparse, free, cfg), ErrorCode::invalid_parameter);
}

TEST_CASE("noether charge of a normalized state is one") {
    Rng rng(127);
    const WaveFunction psi = random_state(kGrid, rng);
    const GaugeField zero = make_zero_gauge_field(kGrid, 0.7);
    const NoetherRecord rec = noether(psi, zero, 1.0, 1.0);
    CHECK(std::abs(rec.charge - 1.0) < 1e-12);
    for (size_t i = 0; i < rec.j0.size(); ++i)
        CHECK(rec.j0[i] == doctest::Approx(std::norm(psi.amplitudes[i])).epsilon(1e-14));
}

TEST_CASE("real states carry no current") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    const GaugeField zero = make_zero_gauge_field(kGrid, 1.0);
    const NoetherRecord rec = noether(psi, zero, 1.0, 1.0);
    for (double j : rec.j1) CHECK(std::abs(j) < 1e-12);
}

TEST_CASE("plane waves carry the analytic probability current") {
    const SpatialGrid grid = make_grid(256, -20.0, 20.0, Boundary::periodic);
    const double k = 2.0 * kPi / grid.length() * 5.0;
    const WaveFunction psi = make_plane_wave(grid, k);
    const GaugeField zero = make_zero_gauge_field(grid, 1.0);
    const NoetherRecord rec = noether(psi, zero, 1.0, 1.0);
    for (size_t i = 0; i < rec.j1.size(); ++i)
        CHECK(std::abs(rec.j1[i] - k * rec.j0[i]) < 1e-8);
}

TEST_CASE("charge is conserved along evolution and continuity holds in the mean") {
    const SpatialGrid grid = make_grid(256, -10.0, 10.0, Boundary::periodic);
    const PotentialSpec well = PotentialSpec::harmonic(1.0, 1.0);
    const WaveFunction psi0 = make_gaussian(grid, 1.0, 0.8, 0.5);
    EvolutionConfig cfg;
    cfg.method = Method::crank_nicolson;
    cfg.dt = 1e-3;
    cfg.n_steps = 200;
    cfg.record_every = 1;
    const Trajectory traj = evolve_linear(psi0, well, cfg);

    const double q0 = traj.observables.front().noether_charge;
    for (const ObservableRecord& r : traj.observables)
        CHECK(std::abs(r.noether_charge - q0) < 1e-8);

    const GaugeField zero = make_zero_gauge_field(grid, 1.0);
    for (size_t t = 1; t + 1 < traj.size(); ++t) {
        const NoetherRecord prev = noether(traj.states[t - 1], zero, 1.0, 1.0);
        const NoetherRecord here = noether(traj.states[t], zero, 1.0, 1.0);
        const NoetherRecord next = noether(traj.states[t + 1], zero, 1.0, 1.0);
        const std::vector<double> dj1_dx = derivative(here.j1, grid);
        double integral = 0.0;
        for (size_t i = 0; i < here.j0.size(); ++i)
            integral += (next.j0[i] - prev.j0[i]) / (2.0 * cfg.dt) + dj1_dx[i];
        integral *= grid.dx();
        CHECK(std::abs(integral) < 1e-8);
    }
}

TEST_CASE("gauge field construction validates inputs") {
    CHECK_ERROR_CODE(make_gauge_field(kGrid, zeros(kGrid), zeros(kGrid), 0.0),
                     ErrorCode::invalid_parameter);
    std::vector<double> short_profile(4, 0.0);
    CHECK_ERROR_CODE(make_gauge_field(kGrid, short_profile, zeros(kGrid), 1.0),
                     ErrorCode::invalid_parameter);
}
