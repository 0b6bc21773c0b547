#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavefunction.hpp"

namespace semwave {

enum class PotentialKind { free, harmonic, double_well, cubic_nonlinear, mexican_hat };

// Closed family of potential landscapes. State-independent members depend on
// the coordinate only; the nonlinear members depend on the local probability
// density |psi|^2.
class PotentialSpec {
public:
    static PotentialSpec free_particle();
    static PotentialSpec harmonic(double mass, double omega);
    static PotentialSpec double_well(double a, double b);
    static PotentialSpec cubic_nonlinear(double gamma);
    static PotentialSpec mexican_hat(double mu2, double lambda);

    PotentialKind kind() const { return kind_; }
    bool state_dependent() const {
        return kind_ == PotentialKind::cubic_nonlinear || kind_ == PotentialKind::mexican_hat;
    }

    double mass() const { return mass_; }
    double omega() const { return omega_; }
    // k = m*omega^2; derived, not stored.
    double spring_constant() const;
    double well_a() const { return a_; }
    double well_b() const { return b_; }
    double gamma() const { return gamma_; }
    double mu2() const { return mu2_; }
    double lambda() const { return lambda_; }

    // Potential value at x given the local density psi_abs2 = |psi(x)|^2
    // (ignored by state-independent members).
    double evaluate(double x, double psi_abs2 = 0.0) const;

    // Weight used when integrating the potential part of the energy
    // functional: cubic carries the 1/2 so that the integral matches the
    // conserved quantity of the corresponding nonlinear flow.
    double energy_density(double x, double psi_abs2) const;

    std::string name() const;

private:
    PotentialSpec() = default;
    PotentialKind kind_ = PotentialKind::free;
    double mass_ = 0.0, omega_ = 0.0;
    double a_ = 0.0, b_ = 0.0;
    double gamma_ = 0.0;
    double mu2_ = 0.0, lambda_ = 0.0;
};

// Potential sampled at every grid point; nonlinear members require psi.
std::vector<double> potential_profile(const PotentialSpec& spec, const SpatialGrid& grid,
                                      const WaveFunction* psi = nullptr);

} // namespace semwave
