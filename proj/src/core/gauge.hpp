#pragma once

#include <string>
#include <utility>
#include <vector>

#include "propagator.hpp"
#include "wavefunction.hpp"

namespace semwave {

// Prescribed U(1) background: scalar potential a0 and spatial component a1
// sampled on the grid, plus the semantic charge coupling q.
struct GaugeField {
    SpatialGrid grid;
    std::vector<double> a0;
    std::vector<double> a1;
    double charge = 1.0;
};

GaugeField make_gauge_field(const SpatialGrid& grid, std::vector<double> a0,
                            std::vector<double> a1, double charge);
GaugeField make_zero_gauge_field(const SpatialGrid& grid, double charge);

// Local phase rotation theta(x) with optional time derivative theta_dot(x)
// (empty means the transform is time-independent).
struct GaugeTransform {
    std::vector<double> theta;
    std::vector<double> theta_dot;
};

struct NoetherRecord {
    double charge = 0.0;          // Q = sum j0 dx
    std::vector<double> j0;       // |psi|^2
    std::vector<double> j1;       // (hbar/m) Im(psi* Dx psi)
};

enum class NonlinearityKind { none, cubic, mexican_hat };

struct Nonlinearity {
    NonlinearityKind kind = NonlinearityKind::none;
    double gamma = 0.0;
    double mu2 = 0.0;
    double lambda = 0.0;

    static Nonlinearity none() { return {}; }
    static Nonlinearity cubic(double gamma) {
        return Nonlinearity{NonlinearityKind::cubic, gamma, 0.0, 0.0};
    }
    static Nonlinearity mexican_hat(double mu2, double lambda) {
        return Nonlinearity{NonlinearityKind::mexican_hat, 0.0, mu2, lambda};
    }
};

// psi -> e^{i theta} psi, a1 -> a1 + (d theta/dx)/q, a0 -> a0 + theta_dot/q.
std::pair<WaveFunction, GaugeField> apply_gauge_transform(const WaveFunction& psi,
                                                          const GaugeField& field,
                                                          const GaugeTransform& g);

// Dx psi = d(psi)/dx - i q a1 psi.
std::vector<cplx> covariant_derivative_space(const WaveFunction& psi, const GaugeField& field);

// D0 psi = dpsi_dt - i q a0 psi; the time derivative comes from the caller
// (finite differences along a trajectory, or an analytic phase).
std::vector<cplx> covariant_derivative_time(const WaveFunction& psi, const GaugeField& field,
                                            const std::vector<cplx>& dpsi_dt);

// F01 = (a1_after - a1_before)/dt - d/dx[(a0_after + a0_before)/2].
std::vector<double> field_strength(const GaugeField& before, const GaugeField& after,
                                   double dt);

// Pointwise gauge-invariant Lagrangian density. The field term follows the
// mostly-minus metric, where -(1/4q^2) F_mu_nu F^mu_nu = +(1/2q^2) F01^2.
std::vector<double> lagrangian_density(const WaveFunction& psi,
                                       const std::vector<cplx>& dpsi_dt,
                                       const GaugeField& field,
                                       const std::vector<double>& f01,
                                       const Nonlinearity& nonlinearity, double hbar,
                                       double mass);

// Max over interior recorded times and grid points of the discrete
// Schrodinger residual |i hbar dpsi/dt - H psi| with centered time
// differences; H matches the integrator the trajectory was produced with.
double euler_lagrange_residual(const Trajectory& traj, const PotentialSpec& spec,
                               const EvolutionConfig& cfg);

NoetherRecord noether(const WaveFunction& psi, const GaugeField& field, double hbar,
                      double mass);

struct GaugeCheckReport {
    std::string theta_description;
    double max_abs_density_diff = 0.0;
    double max_covariance_residual = 0.0;
    double max_lagrangian_density_diff = 0.0;
    double charge_before = 0.0;
    double charge_after = 0.0;
    std::string convention = "mostly-minus";
};

// Full static-transform covariance suite over one (psi, field, theta)
// configuration.
GaugeCheckReport gauge_check(const WaveFunction& psi, const GaugeField& field,
                             const std::vector<double>& theta, double hbar, double mass,
                             const std::string& theta_description);

} // namespace semwave
