#pragma once

#include <doctest.h>

#include <complex>
#include <vector>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/wavefunction.hpp"

namespace test_helpers {

using semwave::cplx;

// Asserts that `expr` throws a semwave::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected_code)                                    \
    do {                                                                         \
        bool caught_ = false;                                                    \
        try {                                                                    \
            (void)(expr);                                                        \
        } catch (const semwave::Error& e_) {                                     \
            caught_ = true;                                                      \
            CHECK(e_.code() == (expected_code));                                 \
        }                                                                        \
        CHECK_MESSAGE(caught_, "expected an error from " #expr);                 \
    } while (0)

inline semwave::WaveFunction random_state(const semwave::SpatialGrid& grid, semwave::Rng& rng) {
    std::vector<cplx> amp(static_cast<size_t>(grid.n_points));
    for (cplx& a : amp) a = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return semwave::normalize(semwave::WaveFunction{grid, std::move(amp)});
}

// Smooth periodic profile from a handful of low Fourier modes.
inline std::vector<double> random_smooth_profile(const semwave::SpatialGrid& grid,
                                                 semwave::Rng& rng, int max_mode = 4,
                                                 double amplitude = 1.0) {
    std::vector<double> out(static_cast<size_t>(grid.n_points), 0.0);
    const double two_pi = 6.283185307179586477;
    for (int m = 1; m <= max_mode; ++m) {
        const double cs = rng.uniform(-amplitude, amplitude);
        const double cc = rng.uniform(-amplitude, amplitude);
        for (int i = 0; i < grid.n_points; ++i) {
            const double phase = two_pi * m * (grid.x(i) - grid.x_min) / grid.length();
            out[static_cast<size_t>(i)] += cs * std::sin(phase) + cc * std::cos(phase);
        }
    }
    return out;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace test_helpers
