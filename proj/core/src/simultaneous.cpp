#include "mopoly/construct.hpp"
#include "mopoly/errors.hpp"
#include "mopoly/quadrature.hpp"
#include "mopoly/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace mopoly {

namespace {

using E = Extended;

// Newton on p in extended precision from a double estimate.
E polish_root(const Polynomial<E>& p, const Polynomial<E>& dp, double z0) {
    E x(z0);
    for (int it = 0; it < 60; ++it) {
        const E d = dp(x);
        if (d == 0) break;
        const E step = p(x) / d;
        x -= step;
        if (abs_value(step) <= E(1e-45) * std::max(E(1), abs_value(x))) break;
    }
    return x;
}

}  // namespace

template <Floating T>
QuadratureRule<T> simultaneous_rule(const FamilySpec& spec_in, const MultiIndex& nvec) {
    const FamilySpec spec = validate(spec_in);
    const int N = nvec.length();
    if (N < 1) raise(ErrorCode::ParameterOutOfRange, "simultaneous rule needs |n| >= 1");
    const auto P = multiple_polynomial(spec, nvec);
    const Polynomial<E> dP = derivative(P.poly());

    std::vector<double> approx;
    if (nvec.r() == 2 && nvec.is_stepline()) {
        approx = zeros(spec, N).zeros;
    } else {
        std::vector<double> c;
        for (const auto& v : P.coeffs()) c.push_back(to_double(v));
        double max_imag = 0;
        approx = real_roots(c, max_imag);
        if (max_imag > 1e-8) raise(ErrorCode::SpuriousComplexPair, "oracle polynomial has complex zeros");
    }
    std::vector<E> x;
    for (double z : approx) x.push_back(polish_root(P.poly(), dP, z));
    std::sort(x.begin(), x.end());
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) raise(ErrorCode::IllConditionedVandermonde, "coincident quadrature nodes");

    // Barycentric weights of a monic polynomial: 1 / P'(x_i).
    std::vector<E> lambda;
    for (const auto& xi : x) {
        const E d = dP(xi);
        if (d == 0) raise(ErrorCode::IllConditionedVandermonde, "node is not a simple zero");
        lambda.push_back(E(1) / d);
    }

    QuadratureRule<T> rule;
    for (const auto& xi : x) rule.nodes.push_back(T(xi));
    rule.targets = family_weights(spec);
    for (std::size_t j = 0; j < rule.targets.size(); ++j) {
        const auto& w = rule.targets[j];
        // Each Lagrange basis polynomial has degree N-1.
        const auto base = integration_rule<E>(w, N - 1);
        std::vector<E> wj(x.size(), E(0));
        for (std::size_t q = 0; q < base.nodes.size(); ++q) {
            const E y = base.nodes[q];
            const E py = P(y);
            for (std::size_t i = 0; i < x.size(); ++i) {
                const E diff = y - x[i];
                const E li = diff == 0 ? E(1) : E(py * lambda[i] / diff);
                wj[i] += base.weights[0][q] * li;
            }
        }
        for (const auto& v : wj)
            if (!boost::multiprecision::isfinite(v))
                raise(ErrorCode::IllConditionedVandermonde, "Lagrange weights are not finite");

        // Certificate: highest k such that all monomials up to k integrate
        // to 1e-10 relative.
        const int kmax = 2 * N + 2;
        const auto m = moments<E>(w, kmax);
        int exact = -1;
        for (int k = 0; k <= kmax; ++k) {
            E sum(0), mag(0);
            for (std::size_t i = 0; i < x.size(); ++i) {
                const E t = wj[i] * pow(x[i], k);
                sum += t;
                mag += abs_value(t);
            }
            const E denom = std::max(abs_value(m[k]), mag);
            if (abs_value(E(sum - m[k])) > E(1e-10) * denom) break;
            exact = k;
        }
        std::vector<T> wt;
        for (const auto& v : wj) wt.push_back(T(v));
        rule.weights.push_back(std::move(wt));
        rule.exactness.push_back(exact);
    }
    return rule;
}

template QuadratureRule<double> simultaneous_rule(const FamilySpec&, const MultiIndex&);
template QuadratureRule<Extended> simultaneous_rule(const FamilySpec&, const MultiIndex&);

}  // namespace mopoly
