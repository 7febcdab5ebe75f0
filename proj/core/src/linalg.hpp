#pragma once

#include "mopoly/scalar.hpp"

#include <complex>
#include <vector>

namespace mopoly::detail {

// Dense row-major square system A x = b.
template <Floating T>
struct PivotedSolve {
    std::vector<T> x;
    double condition = 0;  // |R_00| / |R_nn| after column equilibration
    bool full_rank = true;
};

template <Floating T>
PivotedSolve<T> solve_pivoted_qr(const std::vector<T>& a, int n, const std::vector<T>& b);

// Exact solve by fraction-free elimination on the integer-scaled rows.
// Returns false when the matrix is singular.
bool solve_exact(const std::vector<Rational>& a, int n, const std::vector<Rational>& b, std::vector<Rational>& x);

// Eigenvalues (ascending) of the symmetric tridiagonal matrix.
template <Floating T>
std::vector<T> tridiagonal_eigenvalues(const std::vector<T>& diag, const std::vector<T>& offdiag);

// Eigenvalues of a general real matrix (row-major). Returns false when the
// iteration did not converge.
bool general_eigenvalues(const std::vector<double>& a, int n, std::vector<std::complex<double>>& out);

}  // namespace mopoly::detail
