#include "spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace semwave {

namespace {
// FFTW's planner is not thread-safe; executions on distinct buffers are.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
constexpr double kPi = 3.14159265358979323846;
} // namespace

Fft::Fft(int n) : n_(n), work_(static_cast<size_t>(n)) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_complex* buf = reinterpret_cast<fftw_complex*>(work_.data());
    plan_fwd_ = fftw_plan_dft_1d(n_, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(n_, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Fft::forward(std::vector<cplx>& data) const {
    work_ = data;
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                     reinterpret_cast<fftw_complex*>(work_.data()),
                     reinterpret_cast<fftw_complex*>(work_.data()));
    data = work_;
}

void Fft::inverse(std::vector<cplx>& data) const {
    work_ = data;
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                     reinterpret_cast<fftw_complex*>(work_.data()),
                     reinterpret_cast<fftw_complex*>(work_.data()));
    const double scale = 1.0 / static_cast<double>(n_);
    for (int i = 0; i < n_; ++i) data[static_cast<size_t>(i)] = work_[static_cast<size_t>(i)] * scale;
}

std::vector<double> fft_wavenumbers(const SpatialGrid& grid) {
    const int n = grid.n_points;
    const double dk = 2.0 * kPi / grid.length();
    std::vector<double> k(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int jj = (j <= n / 2) ? j : j - n;
        k[static_cast<size_t>(j)] = dk * static_cast<double>(jj);
    }
    return k;
}

namespace {

std::vector<cplx> spectral_derivative(const std::vector<cplx>& f, const SpatialGrid& grid) {
    Fft fft(grid.n_points);
    std::vector<cplx> hat = f;
    fft.forward(hat);
    const std::vector<double> k = fft_wavenumbers(grid);
    const int n = grid.n_points;
    for (int j = 0; j < n; ++j) hat[static_cast<size_t>(j)] *= cplx{0.0, k[static_cast<size_t>(j)]};
    // Odd derivative of the unpaired Nyquist mode is ill-defined; drop it.
    if (n % 2 == 0) hat[static_cast<size_t>(n / 2)] = cplx{0.0, 0.0};
    fft.inverse(hat);
    return hat;
}

std::vector<cplx> central_derivative(const std::vector<cplx>& f, const SpatialGrid& grid) {
    const int n = grid.n_points;
    const double inv2dx = 1.0 / (2.0 * grid.dx());
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int i = 1; i + 1 < n; ++i)
        out[static_cast<size_t>(i)] =
            (f[static_cast<size_t>(i + 1)] - f[static_cast<size_t>(i - 1)]) * inv2dx;
    // Second-order one-sided stencils at the walls.
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2dx;
    out[static_cast<size_t>(n - 1)] =
        (3.0 * f[static_cast<size_t>(n - 1)] - 4.0 * f[static_cast<size_t>(n - 2)] +
         f[static_cast<size_t>(n - 3)]) *
        inv2dx;
    return out;
}

} // namespace

std::vector<cplx> derivative(const std::vector<cplx>& f, const SpatialGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n_points)
        throw_error(ErrorCode::invalid_parameter, "derivative: field length does not match grid");
    if (grid.boundary == Boundary::periodic) return spectral_derivative(f, grid);
    return central_derivative(f, grid);
}

std::vector<double> derivative(const std::vector<double>& f, const SpatialGrid& grid) {
    std::vector<cplx> cf(f.size());
    for (size_t i = 0; i < f.size(); ++i) cf[i] = cplx{f[i], 0.0};
    std::vector<cplx> d = derivative(cf, grid);
    std::vector<double> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = d[i].real();
    return out;
}

std::vector<cplx> second_difference(const std::vector<cplx>& f, const SpatialGrid& grid) {
    const int n = grid.n_points;
    if (static_cast<int>(f.size()) != n)
        throw_error(ErrorCode::invalid_parameter, "second_difference: field length does not match grid");
    const double invdx2 = 1.0 / (grid.dx() * grid.dx());
    std::vector<cplx> out(static_cast<size_t>(n));
    const bool periodic = grid.boundary == Boundary::periodic;
    for (int i = 0; i < n; ++i) {
        const cplx left = (i > 0) ? f[static_cast<size_t>(i - 1)]
                                  : (periodic ? f[static_cast<size_t>(n - 1)] : cplx{0.0, 0.0});
        const cplx right = (i + 1 < n) ? f[static_cast<size_t>(i + 1)]
                                       : (periodic ? f[0] : cplx{0.0, 0.0});
        out[static_cast<size_t>(i)] = (left - 2.0 * f[static_cast<size_t>(i)] + right) * invdx2;
    }
    return out;
}

} // namespace semwave
