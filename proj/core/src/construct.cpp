#include "mopoly/construct.hpp"

#include "mopoly/errors.hpp"
#include "mopoly/quadrature.hpp"
#include "mopoly/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mopoly {

namespace {

template <Scalar T>
std::vector<Polynomial<T>> powers_of_linear(const T& root, int kmax) {
    std::vector<Polynomial<T>> out;
    out.push_back(Polynomial<T>::constant(T(1)));
    const Polynomial<T> lin = Polynomial<T>::linear(root);
    for (int i = 1; i <= kmax; ++i) out.push_back(mul(out.back(), lin));
    return out;
}

template <Scalar T>
Polynomial<T> shift_up(const Polynomial<T>& p, int k) {
    if (p.is_zero()) return p;
    std::vector<T> c(static_cast<std::size_t>(k), T(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial<T>(std::move(c));
}

// Explicit sums are monic by a binomial identity; check it held numerically
// before pinning the top coefficient.
template <Scalar T>
MonicPolynomial<T> finish_monic(const Polynomial<T>& p, int degree, const char* what) {
    if (p.degree() != degree) raise(ErrorCode::NumericalFailure, std::string(what) + ": wrong degree");
    if constexpr (std::same_as<T, Rational>) {
        if (p.leading() != T(1)) raise(ErrorCode::NumericalFailure, std::string(what) + ": not monic");
    } else {
        const double tol = std::same_as<T, double> ? 1e-8 : 1e-25;
        if (abs_value(T(p.leading() - T(1))) > T(tol))
            raise(ErrorCode::NumericalFailure, std::string(what) + ": leading coefficient drifted from 1");
    }
    return MonicPolynomial<T>::from_coeffs(p.coeffs());
}

}  // namespace

template <Floating T>
std::vector<MonicPolynomial<T>> stepline_polynomials(const FamilySpec& spec, int Nmax) {
    if (Nmax < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    const auto rec = stepline_recurrence<T>(spec, Nmax);
    std::vector<Polynomial<T>> P;
    P.push_back(Polynomial<T>::constant(T(1)));
    for (int k = 0; k < Nmax; ++k) {
        Polynomial<T> next = sub(mul_x(P[k]), scale(P[k], rec.b[k]));
        if (k >= 1) next = sub(next, scale(P[k - 1], rec.c[k]));
        if (k >= 2) next = sub(next, scale(P[k - 2], rec.d[k]));
        P.push_back(std::move(next));
    }
    std::vector<MonicPolynomial<T>> out;
    out.reserve(P.size());
    for (const auto& p : P) out.push_back(MonicPolynomial<T>::from(p));
    return out;
}

template <Floating T>
MonicPolynomial<T> polynomial_via_recurrence(const FamilySpec& spec, int N) {
    return stepline_polynomials<T>(spec, N).back();
}

template <Scalar T>
MonicPolynomial<T> classical_jacobi(const T& alpha, const T& beta, int n) {
    if (n < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    const auto xm1 = powers_of_linear(T(1), n);
    Polynomial<T> acc;
    for (int j = 0; j <= n; ++j) {
        const T c = binomial(T(beta + T(n)), j) * binomial(T(alpha + T(n)), n - j);
        acc = add(acc, scale(shift_up(xm1[j], n - j), c));
    }
    const T norm = factorial<T>(n) / pochhammer(T(alpha + beta + T(n + 1)), n);
    return finish_monic(scale(acc, norm), n, "classical_jacobi");
}

template <Scalar T>
MonicPolynomial<T> classical_laguerre(const T& alpha, int n) {
    if (n < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    Polynomial<T> prev, cur = Polynomial<T>::constant(T(1));
    for (int k = 0; k < n; ++k) {
        Polynomial<T> next = sub(mul_x(cur), scale(cur, T(T(2 * k + 1) + alpha)));
        if (k > 0) next = sub(next, scale(prev, T(T(k) * (T(k) + alpha))));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return MonicPolynomial<T>::from(cur);
}

template <Scalar T>
MonicPolynomial<T> classical_hermite(int n) {
    if (n < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    Polynomial<T> prev, cur = Polynomial<T>::constant(T(1));
    for (int k = 0; k < n; ++k) {
        Polynomial<T> next = mul_x(cur);
        if (k > 0) next = sub(next, scale(prev, T(T(k) / T(2))));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return MonicPolynomial<T>::from(cur);
}

template <Scalar T>
MonicPolynomial<T> jacobi_pineiro_explicit(const T& a0, const T& a1, const T& a2, int n, int m) {
    if (n < 0 || m < 0) raise(ErrorCode::ParameterOutOfRange, "indices must be nonnegative");
    // Coefficients depend on k + j only through x^{n+m-t} (x-1)^t.
    std::vector<T> by_t(static_cast<std::size_t>(n + m + 1), T(0));
    for (int k = 0; k <= n; ++k) {
        const T ck = binomial(T(a1 + T(n)), k) * binomial(T(a0 + T(m + n)), n - k);
        for (int j = 0; j <= m; ++j)
            by_t[k + j] += ck * binomial(T(a2 + T(n + m - k)), j) * binomial(T(a0 + T(k + m)), m - j);
    }
    const auto xm1 = powers_of_linear(T(1), n + m);
    Polynomial<T> acc;
    for (int t = 0; t <= n + m; ++t) acc = add(acc, scale(shift_up(xm1[t], n + m - t), by_t[t]));
    const T norm = factorial<T>(n) * factorial<T>(m) /
                   (pochhammer(T(a0 + a1 + T(n + m + 1)), n) * pochhammer(T(a0 + a2 + T(n + m + 1)), m));
    return finish_monic(scale(acc, norm), n + m, "jacobi_pineiro_explicit");
}

template <Scalar T>
MonicPolynomial<T> jacobi_angelesco_explicit(const T& alpha, const T& beta, const T& gamma, const T& a, int n) {
    if (n < 0) raise(ErrorCode::ParameterOutOfRange, "index must be nonnegative");
    const auto xa = powers_of_linear(a, n);
    const auto xm1 = powers_of_linear(T(1), n);
    Polynomial<T> acc;
    for (int k = 0; k <= n; ++k) {
        const T ck = binomial(T(alpha + T(n)), k);
        for (int j = 0; j <= n - k; ++j) {
            const T c = ck * binomial(T(beta + T(n)), j) * binomial(T(gamma + T(n)), n - k - j);
            acc = add(acc, scale(shift_up(mul(xa[n - k], xm1[k + j]), n - j), c));
        }
    }
    const T norm = T(1) / binomial(T(alpha + beta + gamma + T(3 * n)), n);
    return finish_monic(scale(acc, norm), 2 * n, "jacobi_angelesco_explicit");
}

template <Floating T>
MonicPolynomial<T> jacobi_angelesco_offdiagonal(const T& alpha, const T& beta, const T& gamma, const T& a, int n) {
    const FamilySpec spec = JacobiAngelesco{to_double(a), to_double(alpha), to_double(beta), to_double(gamma)};
    const T X = x_moment_ratio<T>(spec, n);
    const T s = alpha + beta + gamma;
    const T f = X * (s + T(2 * n + 1)) / (s + T(3 * n + 1));
    const auto upper = jacobi_angelesco_explicit(alpha, T(beta + T(1)), gamma, a, n);
    const auto diag = jacobi_angelesco_explicit(alpha, beta, gamma, a, n);
    return MonicPolynomial<T>::from_coeffs(sub(mul_x(upper.poly()), scale(diag.poly(), f)).coeffs());
}

template <Scalar T>
MonicPolynomial<T> jacobi_laguerre_explicit(const T& alpha, const T& beta, const T& a, int n) {
    if (n < 0) raise(ErrorCode::ParameterOutOfRange, "index must be nonnegative");
    const auto xa = powers_of_linear(a, n);
    Polynomial<T> acc;
    for (int k = 0; k <= n; ++k) {
        const T ck = binomial(T(alpha + T(n)), k);
        for (int j = 0; j <= n - k; ++j) {
            T c = ck * binomial(T(beta + T(n)), j) / factorial<T>(n - k - j);
            if ((k + j) % 2 == 1) c = -c;
            acc = add(acc, scale(shift_up(xa[n - k], n - j), c));
        }
    }
    // The double sum carries leading coefficient 1/n!.
    return finish_monic(scale(acc, factorial<T>(n)), 2 * n, "jacobi_laguerre_explicit");
}

template <Floating T>
MonicPolynomial<T> jacobi_laguerre_offdiagonal(const T& alpha, const T& beta, const T& a, int n) {
    const FamilySpec spec = JacobiLaguerre{to_double(a), to_double(alpha), to_double(beta)};
    const T X = x_moment_ratio<T>(spec, n);
    const auto upper = jacobi_laguerre_explicit(alpha, T(beta + T(1)), a, n);
    const auto diag = jacobi_laguerre_explicit(alpha, beta, a, n);
    return MonicPolynomial<T>::from_coeffs(sub(mul_x(upper.poly()), scale(diag.poly(), X)).coeffs());
}

SubleadingCoefficients subleading_coefficients(const FamilySpec& spec_in, int n, int m) {
    const FamilySpec spec = validate(spec_in);
    if (n < 0 || m < 0) raise(ErrorCode::ParameterOutOfRange, "indices must be nonnegative");
    using E = Extended;
    SubleadingCoefficients out{kind_of(spec), n, m, E(0), std::nullopt};
    if (const auto* p = std::get_if<JacobiPineiro>(&spec)) {
        if (p->alphas.size() != 2) raise(ErrorCode::UnsupportedMultiplicity, "A_{n,m} needs two weights");
        const E a0(p->alpha0), a1(p->alphas[0]), a2(p->alphas[1]), N(n), M(m);
        out.A = -(N * (a1 + N) * (a0 + a2 + N + M) + M * (a2 + N + M) * (a0 + a1 + 2 * N + M)) /
                ((a0 + a1 + 2 * N + M) * (a0 + a2 + N + 2 * M));
        return out;
    }
    if (const auto* p = std::get_if<JacobiAngelesco>(&spec)) {
        if (n != m) raise(ErrorCode::UnsupportedFamily, "Jacobi-Angelesco subleading terms are diagonal only");
        const E a(p->a), al(p->alpha), be(p->beta), ga(p->gamma), N(n);
        const E s = al + be + ga;
        out.A = -N * (al + be + 2 * N + a * (be + ga + 2 * N)) / (s + 3 * N);
        out.B = a * N * (s + 2 * N) * (be + N) / ((s + 3 * N) * (s + 3 * N - 1)) +
                N * (N - 1) / (2 * (s + 3 * N) * (s + 3 * N - 1)) *
                    ((al + be + 2 * N) * (al + be + 2 * N - 1) + 2 * a * (al + be + 2 * N) * (be + ga + 2 * N) +
                     a * a * (be + ga + 2 * N) * (be + ga + 2 * N - 1));
        if (n == 0) out.B = E(0);
        return out;
    }
    raise(ErrorCode::UnsupportedFamily, "subleading coefficients are printed for Jacobi-Pineiro and Jacobi-Angelesco");
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Recurrence: return "recurrence";
        case Method::Explicit: return "explicit";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "recurrence") return Method::Recurrence;
    if (text == "explicit") return Method::Explicit;
    if (text == "oracle") return Method::Oracle;
    raise(ErrorCode::ParameterOutOfRange, "unknown construction method '" + std::string(text) + "'");
}

template <Floating T>
MonicPolynomial<T> stepline_polynomial(const FamilySpec& spec_in, int N, Method method) {
    const FamilySpec spec = validate(spec_in);
    if (N < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    switch (method) {
        case Method::Recurrence: return polynomial_via_recurrence<T>(spec, N);
        case Method::Oracle: {
            const auto nvec = MultiIndex::stepline(weight_count(spec), N);
            if constexpr (std::same_as<T, double>) return oracle_polynomial<double>(spec, nvec);
            else return oracle_polynomial_best(spec, nvec);
        }
        case Method::Explicit: break;
    }
    const int n = N / 2;
    const bool odd = N % 2 == 1;
    if (const auto* p = std::get_if<JacobiPineiro>(&spec)) {
        if (p->alphas.size() != 2) raise(ErrorCode::UnsupportedMultiplicity, "explicit sum needs two weights");
        return jacobi_pineiro_explicit(T(p->alpha0), T(p->alphas[0]), T(p->alphas[1]), N - n, n);
    }
    if (const auto* p = std::get_if<JacobiAngelesco>(&spec)) {
        if (odd) return jacobi_angelesco_offdiagonal(T(p->alpha), T(p->beta), T(p->gamma), T(p->a), n);
        return jacobi_angelesco_explicit(T(p->alpha), T(p->beta), T(p->gamma), T(p->a), n);
    }
    if (const auto* p = std::get_if<JacobiLaguerre>(&spec)) {
        if (odd) return jacobi_laguerre_offdiagonal(T(p->alpha), T(p->beta), T(p->a), n);
        return jacobi_laguerre_explicit(T(p->alpha), T(p->beta), T(p->a), n);
    }
    raise(ErrorCode::UnsupportedFamily, "no explicit expansion for family " + std::string(token(kind_of(spec))));
}

MonicPolynomial<Extended> multiple_polynomial(const FamilySpec& spec_in, const MultiIndex& nvec) {
    const FamilySpec spec = validate(spec_in);
    if (nvec.r() != weight_count(spec))
        raise(ErrorCode::UnsupportedMultiplicity, "multi-index length " + std::to_string(nvec.r()) +
                                                      " does not match " + std::to_string(weight_count(spec)) +
                                                      " weights");
    if (nvec.r() == 2) {
        if (nvec.is_stepline()) return polynomial_via_recurrence<Extended>(spec, nvec.length());
        if (!is_angelesco(spec) && nvec[1] == nvec[0] + 1)
            return polynomial_via_recurrence<Extended>(swapped_weights(spec), nvec.length());
    }
    return oracle_polynomial_best(spec, nvec);
}

RaisingResidual raising_apply(const FamilySpec& spec_in, int j, const MultiIndex& nvec) {
    using E = Extended;
    using P = Polynomial<E>;
    const FamilySpec spec = validate(spec_in);
    const int r = weight_count(spec);
    if (nvec.r() != r) raise(ErrorCode::UnsupportedMultiplicity, "multi-index length does not match weight count");
    if (!is_angelesco(spec) && (j < 0 || j >= r)) raise(ErrorCode::ParameterOutOfRange, "weight index out of range");

    const P x = P::monomial(1);
    auto cst = [](double v) { return P::constant(E(v)); };
    auto lin = [](double c0, double c1) { return P(std::vector<E>{E(c0), E(c1)}); };

    FamilySpec lowered = spec;
    MultiIndex raised = is_angelesco(spec) ? MultiIndex(std::vector<int>{nvec[0] + 1, nvec[1] + 1}) : nvec.plus_unit(j);
    P factor, dfactor;  // lhs = factor * P + dfactor * P'
    E rhs_scale;
    const E len(nvec.length());

    switch (kind_of(spec)) {
        case FamilyKind::JP: {
            auto p = std::get<JacobiPineiro>(spec);
            const double aj = p.alphas[j], a0 = p.alpha0;
            factor = lin(aj, -aj - a0);
            dfactor = lin(0, 1);
            dfactor = mul(dfactor, lin(1, -1));
            rhs_scale = -(len + E(a0) + E(aj));
            p.alpha0 -= 1;
            p.alphas[j] -= 1;
            lowered = p;
            break;
        }
        case FamilyKind::ML1: {
            auto p = std::get<MultipleLaguerreFirst>(spec);
            factor = lin(p.alphas[j], -1);
            dfactor = x;
            rhs_scale = E(-1);
            p.alphas[j] -= 1;
            lowered = p;
            break;
        }
        case FamilyKind::ML2: {
            auto p = std::get<MultipleLaguerreSecond>(spec);
            factor = lin(p.alpha0, -p.cs[j]);
            dfactor = x;
            rhs_scale = -E(p.cs[j]);
            p.alpha0 -= 1;
            lowered = p;
            break;
        }
        case FamilyKind::MH: {
            const auto& p = std::get<MultipleHermite>(spec);
            factor = lin(p.cs[j], -2);
            dfactor = cst(1);
            rhs_scale = E(-2);
            break;
        }
        case FamilyKind::JA: {
            auto p = std::get<JacobiAngelesco>(spec);
            const P xa = lin(-p.a, 1), om = lin(1, -1);
            factor = add(add(scale(mul(x, om), E(p.alpha)), scale(mul(xa, om), E(p.beta))),
                         scale(mul(xa, x), E(-p.gamma)));
            dfactor = mul(mul(xa, x), om);
            rhs_scale = -(E(p.alpha) + E(p.beta) + E(p.gamma) + len);
            p.alpha -= 1;
            p.beta -= 1;
            p.gamma -= 1;
            lowered = p;
            break;
        }
        case FamilyKind::JL: {
            auto p = std::get<JacobiLaguerre>(spec);
            const P xa = lin(-p.a, 1);
            factor = sub(add(scale(x, E(p.alpha)), scale(xa, E(p.beta))), mul(xa, x));
            dfactor = mul(xa, x);
            rhs_scale = E(-1);
            p.alpha -= 1;
            p.beta -= 1;
            lowered = p;
            break;
        }
        case FamilyKind::LH: {
            auto p = std::get<LaguerreHermite>(spec);
            factor = P(std::vector<E>{E(p.beta), E(0), E(-2)});
            dfactor = x;
            rhs_scale = E(-2);
            p.beta -= 1;
            lowered = p;
            break;
        }
    }
    lowered = validate(lowered);

    const auto Pn = multiple_polynomial(spec, nvec);
    const auto R = multiple_polynomial(lowered, raised);
    const P lhs = add(mul(factor, Pn.poly()), mul(dfactor, derivative(Pn.poly())));
    const P rhs = scale(R.poly(), rhs_scale);
    RaisingResidual out;
    out.absolute = max_abs_difference(lhs, rhs);
    E top(0);
    for (const auto& c : rhs.coeffs()) top = std::max(top, abs_value(c));
    out.relative = top > 0 ? out.absolute / to_double(top) : out.absolute;
    return out;
}

#define MOPOLY_CONSTRUCT_FLOATING(T)                                                                   \
    template std::vector<MonicPolynomial<T>> stepline_polynomials(const FamilySpec&, int);             \
    template MonicPolynomial<T> polynomial_via_recurrence(const FamilySpec&, int);                     \
    template MonicPolynomial<T> jacobi_angelesco_offdiagonal(const T&, const T&, const T&, const T&, int); \
    template MonicPolynomial<T> jacobi_laguerre_offdiagonal(const T&, const T&, const T&, int);        \
    template MonicPolynomial<T> stepline_polynomial(const FamilySpec&, int, Method);

#define MOPOLY_CONSTRUCT_SCALAR(T)                                                                     \
    template MonicPolynomial<T> classical_jacobi(const T&, const T&, int);                             \
    template MonicPolynomial<T> classical_laguerre(const T&, int);                                     \
    template MonicPolynomial<T> classical_hermite(int);                                                \
    template MonicPolynomial<T> jacobi_pineiro_explicit(const T&, const T&, const T&, int, int);       \
    template MonicPolynomial<T> jacobi_angelesco_explicit(const T&, const T&, const T&, const T&, int); \
    template MonicPolynomial<T> jacobi_laguerre_explicit(const T&, const T&, const T&, int);

MOPOLY_CONSTRUCT_FLOATING(double)
MOPOLY_CONSTRUCT_FLOATING(Extended)
MOPOLY_CONSTRUCT_SCALAR(double)
MOPOLY_CONSTRUCT_SCALAR(Extended)
MOPOLY_CONSTRUCT_SCALAR(Rational)

}  // namespace mopoly
