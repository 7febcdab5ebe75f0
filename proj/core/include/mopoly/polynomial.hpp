#pragma once

#include "mopoly/errors.hpp"
#include "mopoly/scalar.hpp"

#include <algorithm>
#include <utility>
#include <variant>
#include <vector>

namespace mopoly {

// Dense polynomial, coefficients in ascending monomial order. The zero
// polynomial has no coefficients and degree -1.
template <Scalar T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
    static Polynomial monomial(int k) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = T(1);
        return Polynomial(std::move(c));
    }
    // x - root
    static Polynomial linear(const T& root) { return Polynomial(std::vector<T>{T(-root), T(1)}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    T coeff(int k) const {
        return (k < 0 || k > degree()) ? T(0) : coeffs_[static_cast<std::size_t>(k)];
    }
    const T& leading() const { return coeffs_.back(); }

    template <class U>
    U operator()(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

template <Scalar T>
Polynomial<T> add(const Polynomial<T>& p, const Polynomial<T>& q) {
    std::vector<T> c(static_cast<std::size_t>(std::max(p.degree(), q.degree()) + 1), T(0));
    for (int k = 0; k <= p.degree(); ++k) c[k] += p.coeffs()[k];
    for (int k = 0; k <= q.degree(); ++k) c[k] += q.coeffs()[k];
    return Polynomial<T>(std::move(c));
}

template <Scalar T>
Polynomial<T> scale(const Polynomial<T>& p, const T& s) {
    std::vector<T> c = p.coeffs();
    for (auto& v : c) v *= s;
    return Polynomial<T>(std::move(c));
}

template <Scalar T>
Polynomial<T> sub(const Polynomial<T>& p, const Polynomial<T>& q) {
    return add(p, scale(q, T(-1)));
}

template <Scalar T>
Polynomial<T> mul(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> c(static_cast<std::size_t>(p.degree() + q.degree() + 1), T(0));
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= q.degree(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    return Polynomial<T>(std::move(c));
}

// x * p(x)
template <Scalar T>
Polynomial<T> mul_x(const Polynomial<T>& p) {
    if (p.is_zero()) return {};
    std::vector<T> c;
    c.reserve(p.coeffs().size() + 1);
    c.push_back(T(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial<T>(std::move(c));
}

template <Scalar T>
Polynomial<T> derivative(const Polynomial<T>& p) {
    if (p.degree() < 1) return {};
    std::vector<T> c(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) c[k - 1] = p.coeffs()[k] * T(k);
    return Polynomial<T>(std::move(c));
}

template <Scalar T>
Polynomial<T> antiderivative(const Polynomial<T>& p, const T& constant = T(0)) {
    std::vector<T> c(static_cast<std::size_t>(p.degree() + 2), T(0));
    c[0] = constant;
    for (int k = 0; k <= p.degree(); ++k) c[k + 1] = p.coeffs()[k] / T(k + 1);
    return Polynomial<T>(std::move(c));
}

// Coefficients of x -> p(u x + v), by Horner on the linear polynomial.
template <Scalar T>
Polynomial<T> shift_scale(const Polynomial<T>& p, const T& u, const T& v) {
    const Polynomial<T> lin(std::vector<T>{v, u});
    Polynomial<T> acc;
    for (int k = p.degree(); k >= 0; --k) acc = add(mul(acc, lin), Polynomial<T>::constant(p.coeffs()[k]));
    return acc;
}

template <Scalar U, Scalar T>
Polynomial<U> convert(const Polynomial<T>& p) {
    std::vector<U> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        if constexpr (std::same_as<U, T>) c.push_back(v);
        else if constexpr (std::same_as<T, Rational>) c.push_back(U(to_extended(v)));
        else if constexpr (std::same_as<U, double>) c.push_back(to_double(v));
        else c.push_back(U(v));
    }
    return Polynomial<U>(std::move(c));
}

// Polynomial whose leading coefficient is exactly one.
template <Scalar T>
class MonicPolynomial {
public:
    MonicPolynomial() : poly_(Polynomial<T>::constant(T(1))) {}

    // Requires an exact unit leading coefficient.
    static MonicPolynomial from(Polynomial<T> p) {
        if (p.is_zero() || p.leading() != T(1))
            raise(ErrorCode::NumericalFailure, "polynomial is not monic");
        return MonicPolynomial(std::move(p));
    }
    static MonicPolynomial normalized(const Polynomial<T>& p) {
        if (p.is_zero()) raise(ErrorCode::NumericalFailure, "cannot normalize the zero polynomial");
        return from_coeffs(scale(p, T(T(1) / p.leading())).coeffs());
    }
    // Replaces the top coefficient by one; callers check closeness first.
    static MonicPolynomial from_coeffs(std::vector<T> c) {
        if (c.empty()) raise(ErrorCode::NumericalFailure, "empty coefficient vector");
        c.back() = T(1);
        return MonicPolynomial(Polynomial<T>(std::move(c)));
    }

    int degree() const noexcept { return poly_.degree(); }
    const std::vector<T>& coeffs() const noexcept { return poly_.coeffs(); }
    T coeff(int k) const { return poly_.coeff(k); }
    const Polynomial<T>& poly() const noexcept { return poly_; }
    operator const Polynomial<T>&() const noexcept { return poly_; }

    template <class U>
    U operator()(const U& x) const {
        return poly_(x);
    }

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
    explicit MonicPolynomial(Polynomial<T> p) : poly_(std::move(p)) {}
    Polynomial<T> poly_;
};

template <Scalar U, Scalar T>
MonicPolynomial<U> convert(const MonicPolynomial<T>& p) {
    return MonicPolynomial<U>::from_coeffs(convert<U>(p.poly()).coeffs());
}

// Largest coefficientwise relative error |p_k - q_k| / |q_k|. Coefficients of
// q smaller than floor * max|q_k| (zeros forced by symmetry, up to rounding)
// are measured against floor * max|q_k| instead.
double max_relative_difference(const Polynomial<Extended>& p, const Polynomial<Extended>& q, double floor = 1e-30);
double max_abs_difference(const Polynomial<Extended>& p, const Polynomial<Extended>& q);

// Runtime-tagged polynomial for code paths where the scalar kind is chosen late.
using AnyPolynomial = std::variant<Polynomial<double>, Polynomial<Extended>, Polynomial<Rational>>;

ScalarKind kind_of(const AnyPolynomial& p);
AnyPolynomial add(const AnyPolynomial& p, const AnyPolynomial& q);
AnyPolynomial mul(const AnyPolynomial& p, const AnyPolynomial& q);

}  // namespace mopoly
