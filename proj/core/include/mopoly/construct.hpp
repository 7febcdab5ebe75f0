#pragma once

#include "mopoly/family.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/polynomial.hpp"
#include "mopoly/scalar.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mopoly {

// Monic stepline polynomial P_N from the closed-form recurrence.
template <Floating T>
MonicPolynomial<T> polynomial_via_recurrence(const FamilySpec& spec, int N);

// P_0, ..., P_Nmax.
template <Floating T>
std::vector<MonicPolynomial<T>> stepline_polynomials(const FamilySpec& spec, int Nmax);

// Monic Jacobi polynomial on [0,1] for x^beta (1-x)^alpha.
template <Scalar T>
MonicPolynomial<T> classical_jacobi(const T& alpha, const T& beta, int n);

// Monic Laguerre polynomial for x^alpha e^{-x}.
template <Scalar T>
MonicPolynomial<T> classical_laguerre(const T& alpha, int n);

// Monic Hermite polynomial for e^{-x^2}.
template <Scalar T>
MonicPolynomial<T> classical_hermite(int n);

// P_{n,m} for x^{alpha_j} (1-x)^{alpha0} on [0,1] from the binomial double sum.
template <Scalar T>
MonicPolynomial<T> jacobi_pineiro_explicit(const T& alpha0, const T& alpha1, const T& alpha2, int n, int m);

// P_{n,n} of the Jacobi-Angelesco system.
template <Scalar T>
MonicPolynomial<T> jacobi_angelesco_explicit(const T& alpha, const T& beta, const T& gamma, const T& a, int n);

// P_{n+1,n} = x P_{n,n}^{(alpha,beta+1,gamma)} - X_n (s+2n+1)/(s+3n+1) P_{n,n}.
template <Floating T>
MonicPolynomial<T> jacobi_angelesco_offdiagonal(const T& alpha, const T& beta, const T& gamma, const T& a, int n);

// L_{n,n} of the Jacobi-Laguerre system.
template <Scalar T>
MonicPolynomial<T> jacobi_laguerre_explicit(const T& alpha, const T& beta, const T& a, int n);

// L_{n+1,n} = x L_{n,n}^{(alpha,beta+1)} - X_n L_{n,n}.
template <Floating T>
MonicPolynomial<T> jacobi_laguerre_offdiagonal(const T& alpha, const T& beta, const T& a, int n);

struct SubleadingCoefficients {
    FamilyKind family;
    int n = 0, m = 0;
    Extended A;                 // coefficient of x^{n+m-1}
    std::optional<Extended> B;  // coefficient of x^{n+m-2}, Jacobi-Angelesco only
};

// Jacobi-Pineiro (any n, m) or Jacobi-Angelesco (n == m).
SubleadingCoefficients subleading_coefficients(const FamilySpec& spec, int n, int m);

enum class Method { Recurrence, Explicit, Oracle };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

// Stepline degree N by the chosen construction.
template <Floating T>
MonicPolynomial<T> stepline_polynomial(const FamilySpec& spec, int N, Method method);

// Any multi-index: recurrence when it lies on the stepline of a two-weight
// family (or its mirror for the AT families), the moment oracle otherwise.
MonicPolynomial<Extended> multiple_polynomial(const FamilySpec& spec, const MultiIndex& nvec);

struct RaisingResidual {
    double absolute = 0;  // max |coefficient| of lhs - rhs
    double relative = 0;  // the same over max |coefficient| of rhs
};

// Both sides of the raising identity as polynomials, weight factors
// cancelled. For AT families weight `j` (0-based) is raised with the
// lowered parameters; for the Angelesco families every index is raised and
// `j` is ignored.
RaisingResidual raising_apply(const FamilySpec& spec, int j, const MultiIndex& nvec);

}  // namespace mopoly
