#include "tridiag.hpp"

namespace semwave {

std::vector<cplx> solve_tridiagonal(const std::vector<cplx>& lower,
                                    const std::vector<cplx>& diag,
                                    const std::vector<cplx>& upper,
                                    const std::vector<cplx>& rhs) {
    const size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n)
        throw_error(ErrorCode::invalid_parameter, "tridiagonal solve: inconsistent band lengths");
    std::vector<cplx> c(n), d(n);
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (size_t i = 1; i < n; ++i) {
        const cplx denom = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / denom;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    std::vector<cplx> x(n);
    x[n - 1] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

std::vector<cplx> solve_cyclic_tridiagonal(const std::vector<cplx>& lower,
                                           const std::vector<cplx>& diag,
                                           const std::vector<cplx>& upper,
                                           const std::vector<cplx>& rhs) {
    const size_t n = diag.size();
    if (n < 3)
        throw_error(ErrorCode::invalid_parameter, "cyclic tridiagonal solve needs n >= 3");
    const cplx corner_top = lower[0];      // A[0][n-1]
    const cplx corner_bottom = upper[n - 1]; // A[n-1][0]

    // Split A = T + u v^T with
    //   u = (gamma, 0, ..., 0, corner_bottom)^T
    //   v = (1, 0, ..., 0, corner_top/gamma)^T
    const cplx gamma = -diag[0];
    std::vector<cplx> d_mod = diag;
    d_mod[0] -= gamma;
    d_mod[n - 1] -= corner_top * corner_bottom / gamma;

    std::vector<cplx> u(n, cplx{0.0, 0.0});
    u[0] = gamma;
    u[n - 1] = corner_bottom;

    std::vector<cplx> y = solve_tridiagonal(lower, d_mod, upper, rhs);
    std::vector<cplx> z = solve_tridiagonal(lower, d_mod, upper, u);

    const cplx vy = y[0] + corner_top / gamma * y[n - 1];
    const cplx vz = z[0] + corner_top / gamma * z[n - 1];
    const cplx factor = vy / (cplx{1.0, 0.0} + vz);

    std::vector<cplx> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
    return x;
}

} // namespace semwave
