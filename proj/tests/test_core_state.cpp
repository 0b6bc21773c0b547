#include <doctest.h>

#include <cmath>

#include "core/wavefunction.hpp"
#include "helpers.hpp"

using namespace semwave;
using test_helpers::random_state;

namespace {

const SpatialGrid kGrid = make_grid(256, -10.0, 10.0, Boundary::periodic);

// Independent quadrature, kept free of the library's expectation helper.
double quadrature_x_expectation(const WaveFunction& psi) {
    double s = 0.0;
    for (int i = 0; i < psi.size(); ++i)
        s += psi.grid.x(i) * std::norm(psi.amplitudes[static_cast<size_t>(i)]);
    return s * psi.grid.dx();
}

} // namespace

TEST_CASE("grid construction rejects bad parameters") {
    CHECK_ERROR_CODE(make_grid(4, -1.0, 1.0, Boundary::periodic), ErrorCode::invalid_parameter);
    CHECK_ERROR_CODE(make_grid(64, 1.0, 1.0, Boundary::periodic), ErrorCode::invalid_parameter);
    CHECK_ERROR_CODE(make_grid(64, 2.0, -2.0, Boundary::periodic), ErrorCode::invalid_parameter);
    const SpatialGrid g = make_grid(64, -2.0, 2.0, Boundary::reflecting);
    CHECK(g.dx() == doctest::Approx(4.0 / 64).epsilon(1e-15));
}

TEST_CASE("gaussian packet at rest is symmetric") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    for (int i = 1; i < kGrid.n_points; ++i) {
        // -x_i sits at index n-i on a symmetric periodic grid
        const cplx a = psi.amplitudes[static_cast<size_t>(i)];
        const cplx b = psi.amplitudes[static_cast<size_t>(kGrid.n_points - i)];
        CHECK(std::abs(a - b) < 1e-12);
        CHECK(a.imag() == 0.0);
    }
}

TEST_CASE("gaussian packet is normalized") {
    const WaveFunction psi = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    CHECK(std::abs(norm_squared(psi) - 1.0) < 1e-12);
}

TEST_CASE("gaussian center survives a momentum kick") {
    // high-resolution quadrature oracle
    const SpatialGrid fine = make_grid(4096, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi = make_gaussian(fine, 2.0, 0.5, 1.0);
    CHECK(quadrature_x_expectation(psi) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("gaussian rejects bad parameters") {
    CHECK_ERROR_CODE(make_gaussian(kGrid, 0.0, 0.0, 0.0), ErrorCode::invalid_parameter);
    CHECK_ERROR_CODE(make_gaussian(kGrid, 0.0, -1.0, 0.0), ErrorCode::invalid_parameter);
    CHECK_ERROR_CODE(make_gaussian(kGrid, 11.0, 1.0, 0.0), ErrorCode::invalid_parameter);
    CHECK_ERROR_CODE(make_gaussian(kGrid, -10.5, 1.0, 0.0), ErrorCode::invalid_parameter);
}

TEST_CASE("normalize rescales a uniform state") {
    const SpatialGrid g = make_grid(16, 0.0, 1.0, Boundary::periodic);
    std::vector<cplx> amp(16, cplx{2.0, 0.0});
    const WaveFunction psi = normalize(WaveFunction{g, amp});
    const double expected = 1.0 / std::sqrt(16.0 * g.dx());
    for (const cplx& a : psi.amplitudes) {
        CHECK(a.real() == doctest::Approx(expected).epsilon(1e-14));
        CHECK(a.imag() == 0.0);
    }
    CHECK(std::abs(norm_squared(psi) - 1.0) < 1e-13);
}

TEST_CASE("normalize is idempotent") {
    Rng rng(11);
    const WaveFunction psi = random_state(kGrid, rng);
    const WaveFunction again = normalize(psi);
    CHECK(test_helpers::max_abs_diff(psi.amplitudes, again.amplitudes) < 1e-14);
}

TEST_CASE("normalize rejects the zero state") {
    std::vector<cplx> zeros(static_cast<size_t>(kGrid.n_points), cplx{0.0, 0.0});
    CHECK_ERROR_CODE(normalize(WaveFunction{kGrid, zeros}), ErrorCode::degenerate_state);
}

TEST_CASE("inner product of a normalized state with itself is one") {
    Rng rng(3);
    const WaveFunction psi = random_state(kGrid, rng);
    const cplx v = inner_product(psi, psi);
    CHECK(std::abs(v - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("disjoint bumps are orthogonal") {
    const WaveFunction left = make_gaussian(kGrid, -5.0, 0.4, 0.0);
    const WaveFunction right = make_gaussian(kGrid, 5.0, 0.4, 0.0);
    CHECK(std::abs(inner_product(left, right)) < 1e-12);
}

TEST_CASE("phase factors pull out of the inner product") {
    Rng rng(5);
    const WaveFunction psi = random_state(kGrid, rng);
    const WaveFunction ipsi = scale(psi, cplx{0.0, 1.0});
    CHECK(std::abs(inner_product(psi, ipsi) - cplx{0.0, 1.0}) < 1e-12);
}

TEST_CASE("inner product is conjugate symmetric") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const WaveFunction psi = random_state(kGrid, rng);
        const WaveFunction phi = random_state(kGrid, rng);
        const cplx ab = inner_product(psi, phi);
        const cplx ba = inner_product(phi, psi);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    }
}

TEST_CASE("inner product requires a shared grid") {
    const SpatialGrid other = make_grid(256, -10.0, 10.0, Boundary::reflecting);
    const WaveFunction a = make_gaussian(kGrid, 0.0, 1.0, 0.0);
    const WaveFunction b = make_gaussian(other, 0.0, 1.0, 0.0);
    CHECK_ERROR_CODE(inner_product(a, b), ErrorCode::incompatible_grids);
}

TEST_CASE("single-component superposition is the identity") {
    const WaveFunction psi = make_gaussian(kGrid, 1.0, 0.7, 0.0);
    const WaveFunction out = superpose({{&psi, cplx{1.0, 0.0}}});
    CHECK(test_helpers::max_abs_diff(psi.amplitudes, out.amplitudes) < 1e-14);
}

TEST_CASE("total destructive interference is rejected") {
    const WaveFunction psi = make_gaussian(kGrid, 1.0, 0.7, 0.0);
    CHECK_ERROR_CODE(superpose({{&psi, cplx{1.0, 0.0}}, {&psi, cplx{-1.0, 0.0}}}),
                     ErrorCode::degenerate_state);
}

TEST_CASE("empty superposition is rejected") {
    CHECK_ERROR_CODE(superpose({}), ErrorCode::invalid_parameter);
}

TEST_CASE("equal-weight superposition of orthonormal states splits probability") {
    // Orthogonal by disjoint support; overlap oracle evaluated by direct
    // quadrature below.
    const WaveFunction phi0 = make_gaussian(kGrid, -5.0, 0.4, 0.0);
    const WaveFunction phi1 = make_gaussian(kGrid, 5.0, 0.4, 0.0);
    const double c = 1.0 / std::sqrt(2.0);
    const WaveFunction out = superpose({{&phi0, cplx{c, 0.0}}, {&phi1, cplx{c, 0.0}}});

    cplx overlap{0.0, 0.0};
    for (size_t i = 0; i < out.amplitudes.size(); ++i)
        overlap += std::conj(out.amplitudes[i]) * phi0.amplitudes[i];
    overlap *= kGrid.dx();
    CHECK(std::norm(overlap) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("superposition is linear before normalization") {
    Rng rng(13);
    const WaveFunction psi = random_state(kGrid, rng);
    const WaveFunction phi = random_state(kGrid, rng);
    const cplx alpha{0.3, -0.4}, beta{-1.1, 0.2};
    const WaveFunction raw = superpose_raw({{&psi, alpha}, {&phi, beta}});
    for (size_t i = 0; i < raw.amplitudes.size(); ++i) {
        cplx expected{0.0, 0.0};
        expected += alpha * psi.amplitudes[i];
        expected += beta * phi.amplitudes[i];
        CHECK(raw.amplitudes[i] == expected); // same operation order: exact
    }
}

TEST_CASE("embedding projection is the pointwise modulus") {
    const SpatialGrid g = make_grid(8, 0.0, 8.0, Boundary::periodic);
    std::vector<cplx> amp(8, cplx{0.0, 0.0});
    amp[0] = cplx{3.0, 4.0};
    const std::vector<double> p = embedding_projection(WaveFunction{g, amp});
    CHECK(p[0] == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(p[1] == 0.0);
}

TEST_CASE("global phase is invisible to the embedding projection") {
    Rng rng(17);
    const WaveFunction psi = random_state(kGrid, rng);
    const WaveFunction rotated = scale(psi, std::polar(1.0, 0.7));
    CHECK(test_helpers::max_abs_diff(embedding_projection(psi), embedding_projection(rotated)) <
          1e-14);
}

TEST_CASE("non-finite amplitudes are rejected") {
    std::vector<cplx> amp(static_cast<size_t>(kGrid.n_points), cplx{1.0, 0.0});
    amp[3] = cplx{std::nan(""), 0.0};
    CHECK_ERROR_CODE(make_wavefunction(kGrid, amp), ErrorCode::invalid_parameter);
}
