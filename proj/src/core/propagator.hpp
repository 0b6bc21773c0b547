#pragma once

#include <vector>

#include "potential.hpp"
#include "wavefunction.hpp"

namespace semwave {

enum class Method { crank_nicolson, split_step_spectral };

struct EvolutionConfig {
    double hbar = 1.0;
    double mass = 1.0;
    double dt = 1e-3;
    long n_steps = 1;
    Method method = Method::crank_nicolson;
    long record_every = 1;
};

void validate(const EvolutionConfig& cfg, bool require_positive_dt = false);

struct ObservableRecord {
    double norm = 0.0;       // sqrt of the total probability
    double energy = 0.0;     // discrete energy consistent with the scheme
    double x_expect = 0.0;
    double noether_charge = 0.0; // integral of |psi|^2
};

struct Trajectory {
    std::vector<double> times;
    std::vector<WaveFunction> states;
    std::vector<ObservableRecord> observables;
    EvolutionConfig config;

    size_t size() const { return times.size(); }
    const WaveFunction& initial() const { return states.front(); }
    const WaveFunction& final_state() const { return states.back(); }
};

struct EigenSolution {
    std::vector<double> energies;       // ascending
    std::vector<WaveFunction> states;   // matching, orthonormal w.r.t. sum |psi|^2 dx = 1
};

struct GroundStateResult {
    double energy = 0.0;
    WaveFunction state;
    long steps_taken = 0;
};

// Linear Schrodinger-like evolution under a state-independent potential.
// Crank-Nicolson works on both boundary types; the spectral split-step
// needs a periodic grid.
Trajectory evolve_linear(const WaveFunction& psi0, const PotentialSpec& spec,
                         const EvolutionConfig& cfg);

// Cubic NLSE via Strang splitting on a periodic grid; the pointwise
// nonlinear phase step is exact because it preserves |psi|.
Trajectory evolve_nlse(const WaveFunction& psi0, double gamma, const EvolutionConfig& cfg);

// k lowest eigenpairs of H = -(hbar^2/2m) Dxx + diag(V) assembled as a dense
// symmetric matrix (4th-order central-difference Laplacian honoring the
// boundary; see the node on accuracy in the implementation).
EigenSolution eigenstates(const PotentialSpec& spec, const SpatialGrid& grid, int k,
                          double hbar, double mass);

// Normalized diffusion flow d(psi)/d(tau) = -(H[psi]/hbar) psi, renormalized
// every step, until the energy change per step drops below tol. Supports
// state-dependent potentials.
GroundStateResult imaginary_time_ground_state(const PotentialSpec& spec,
                                              const SpatialGrid& grid,
                                              const WaveFunction& psi0,
                                              const EvolutionConfig& cfg, double tol);

// <psi|H|psi> with the kinetic term in gradient form: spectral derivative on
// periodic grids, forward differences with zero walls on reflecting grids.
// Cubic potentials contribute (gamma/2)|psi|^4 so the value matches the
// functional conserved by the nonlinear flow.
double energy(const WaveFunction& psi, const PotentialSpec& spec, double hbar, double mass);

// Superposition over eigenbasis indices; one coefficient per state in the
// solution, zero coefficients allowed.
WaveFunction superpose_eigenstates(const EigenSolution& solution,
                                   const std::vector<cplx>& coefficients);

const char* method_name(Method m);
Method method_from_name(const std::string& name);

} // namespace semwave
