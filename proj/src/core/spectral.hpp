#pragma once

#include <vector>

#include "grid.hpp"
#include "wavefunction.hpp"

namespace semwave {

// Complex-to-complex FFT pair for one transform size, wrapping FFTW with
// plans created once (FFTW_ESTIMATE keeps planning deterministic).
class Fft {
public:
    explicit Fft(int n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    int size() const { return n_; }

    // In-place, unnormalized forward transform.
    void forward(std::vector<cplx>& data) const;
    // In-place inverse transform, scaled by 1/n.
    void inverse(std::vector<cplx>& data) const;

private:
    int n_;
    void* plan_fwd_;
    void* plan_bwd_;
    mutable std::vector<cplx> work_;
};

// FFT wavenumbers 2*pi*j/L in the standard order (non-negative first,
// then negative).
std::vector<double> fft_wavenumbers(const SpatialGrid& grid);

// First derivative of a complex field: Fourier spectral on periodic grids,
// second-order central differences (one-sided at the edges) on reflecting
// grids.
std::vector<cplx> derivative(const std::vector<cplx>& f, const SpatialGrid& grid);
std::vector<double> derivative(const std::vector<double>& f, const SpatialGrid& grid);

// Second derivative with the 3-point stencil honoring the grid boundary
// (wrap-around when periodic, zero virtual points when reflecting).
std::vector<cplx> second_difference(const std::vector<cplx>& f, const SpatialGrid& grid);

} // namespace semwave
