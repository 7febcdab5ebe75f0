#pragma once

#include "mopoly/family.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/polynomial.hpp"
#include "mopoly/scalar.hpp"
#include "mopoly/weight.hpp"

#include <vector>

namespace mopoly {

template <Floating T>
struct QuadratureRule {
    std::vector<T> nodes;
    std::vector<std::vector<T>> weights;  // one vector per target
    std::vector<int> exactness;           // certified degree per target
    std::vector<WeightDescriptor> targets;
    // Composite rules: observed difference against a refined rule.
    double certified_error = 0;

    template <class F>
    T integrate(F&& f, std::size_t target = 0) const {
        T acc(0);
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[target][i] * f(nodes[i]);
        return acc;
    }
};

// Gauss-Jacobi on [lo,hi] for (x-lo)^{e_lo} (hi-x)^{e_hi}.
template <Floating T>
QuadratureRule<T> gauss_jacobi_rule(const T& lo, const T& hi, const T& e_lo, const T& e_hi, int n);

// Three-term recurrence to Gauss rule: alpha_0..n-1, beta_1..n-1 and mass mu0.
template <Floating T>
void golub_welsch(const std::vector<T>& alpha, const std::vector<T>& beta, const T& mu0, std::vector<T>& nodes,
                  std::vector<T>& weights);

// Jacobi, Laguerre (rate c) and Hermite (drift c) shapes, affinely placed.
bool is_classical(const WeightDescriptor& w);

template <Floating T>
QuadratureRule<T> gauss_rule(const WeightDescriptor& w, int n);

// Panelled rule for any integrable descriptor, built to integrate
// polynomials of degree <= `degree` times w. Convergence is certified by
// comparing against a refined rule.
template <Floating T>
QuadratureRule<T> composite_rule(const WeightDescriptor& w, int degree);

// Gauss when classical, composite otherwise.
template <Floating T>
QuadratureRule<T> integration_rule(const WeightDescriptor& w, int degree);

template <Floating T>
T moment(const WeightDescriptor& w, int k);

// m_0, ..., m_kmax
template <Floating T>
std::vector<T> moments(const WeightDescriptor& w, int kmax);

// m_k / m_0 for k <= kmax. Rational needs a shape whose moment ratios are
// rational in the parameters (Jacobi on [0,1], Laguerre at 0, Hermite).
template <Scalar T>
std::vector<T> normalized_moments(const WeightDescriptor& w, int kmax);

bool has_rational_moments(const WeightDescriptor& w);
bool has_rational_moments(const FamilySpec& spec);

// Normalized moments of every weight of a family, reusable across oracle solves.
template <Scalar T>
struct MomentTable {
    FamilySpec spec;
    std::vector<std::vector<T>> normalized;  // [weight][k]

    static MomentTable build(const FamilySpec& spec, int kmax);
    int kmax() const { return normalized.empty() ? -1 : static_cast<int>(normalized.front().size()) - 1; }
};

// Unique monic type II polynomial for `nvec`, from the moment system.
template <Scalar T>
MonicPolynomial<T> oracle_polynomial(const FamilySpec& spec, const MultiIndex& nvec);
template <Scalar T>
MonicPolynomial<T> oracle_polynomial(const MomentTable<T>& table, const MultiIndex& nvec);

// Extended-precision oracle, exact rationals underneath when the family allows.
MonicPolynomial<Extended> oracle_polynomial_best(const FamilySpec& spec, const MultiIndex& nvec);

// max over j, k < n_j of |int p w_j x^k| / int |p| w_j |x|^k.
template <Floating T>
double orthogonality_residual(const FamilySpec& spec, const MultiIndex& nvec, const Polynomial<T>& p);

// Shared-node rule: nodes are the zeros of P_nvec, one weight vector per
// family weight, interpolatory for degree |n|-1.
template <Floating T>
QuadratureRule<T> simultaneous_rule(const FamilySpec& spec, const MultiIndex& nvec);

}  // namespace mopoly
