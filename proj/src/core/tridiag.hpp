#pragma once

#include <vector>

#include "wavefunction.hpp"

namespace semwave {

// Thomas algorithm for a complex tridiagonal system. `lower[0]` and
// `upper[n-1]` are ignored. No pivoting; the Crank-Nicolson matrices this
// backs are strictly diagonally dominant.
std::vector<cplx> solve_tridiagonal(const std::vector<cplx>& lower,
                                    const std::vector<cplx>& diag,
                                    const std::vector<cplx>& upper,
                                    const std::vector<cplx>& rhs);

// Cyclic variant (corner entries lower[0] -> A[0][n-1], upper[n-1] ->
// A[n-1][0]) via the Sherman-Morrison correction.
std::vector<cplx> solve_cyclic_tridiagonal(const std::vector<cplx>& lower,
                                           const std::vector<cplx>& diag,
                                           const std::vector<cplx>& upper,
                                           const std::vector<cplx>& rhs);

} // namespace semwave
