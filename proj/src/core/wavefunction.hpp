#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "grid.hpp"

namespace semwave {

using cplx = std::complex<double>;

// Complex semantic state sampled on a SpatialGrid. Immutable by convention:
// every operation returns a fresh value.
struct WaveFunction {
    SpatialGrid grid;
    std::vector<cplx> amplitudes;

    int size() const { return grid.n_points; }
};

struct SuperpositionTerm {
    const WaveFunction* state;
    cplx coefficient;
};

WaveFunction make_wavefunction(const SpatialGrid& grid, std::vector<cplx> amplitudes);

// Normalized Gaussian packet centered at `center` with probability-density
// standard deviation `width` and carrier momentum `momentum` (hbar = 1).
WaveFunction make_gaussian(const SpatialGrid& grid, double center, double width,
                           double momentum);

// Plane wave exp(i k x), normalized. Periodic grids only; k should be an
// integer multiple of 2*pi/L for exact periodicity.
WaveFunction make_plane_wave(const SpatialGrid& grid, double k);

double norm_squared(const WaveFunction& psi);
double norm(const WaveFunction& psi);

WaveFunction normalize(const WaveFunction& psi);

cplx inner_product(const WaveFunction& bra, const WaveFunction& ket);

// Pointwise sum of coefficient*state without normalization.
WaveFunction superpose_raw(const std::vector<SuperpositionTerm>& terms);

// Pointwise sum followed by normalization.
WaveFunction superpose(const std::vector<SuperpositionTerm>& terms);

// |psi| per grid point: the projection back onto the real embedding axis.
std::vector<double> embedding_projection(const WaveFunction& psi);

double position_expectation(const WaveFunction& psi);

WaveFunction scale(const WaveFunction& psi, cplx factor);

} // namespace semwave
