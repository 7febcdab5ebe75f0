#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <string>
#include <string_view>

namespace mopoly {

namespace bmp = boost::multiprecision;

// 50 decimal digits, no expression templates so that `auto` behaves.
using Extended = bmp::number<bmp::cpp_bin_float<50>, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

enum class ScalarKind { Double, Extended, Rational };

template <class T>
concept Floating = std::same_as<T, double> || std::same_as<T, Extended>;

template <class T>
concept Scalar = Floating<T> || std::same_as<T, Rational>;

template <Scalar T>
constexpr ScalarKind scalar_kind_of() {
    if constexpr (std::same_as<T, double>) return ScalarKind::Double;
    else if constexpr (std::same_as<T, Extended>) return ScalarKind::Extended;
    else return ScalarKind::Rational;
}

std::string_view to_string(ScalarKind kind);
ScalarKind parse_scalar_kind(std::string_view text);

// Exact conversion: every double is representable in all three kinds.
template <Scalar T>
T from_double(double v) {
    return T(v);
}

template <Scalar T>
double to_double(const T& v) {
    if constexpr (std::same_as<T, double>) return v;
    else return v.template convert_to<double>();
}

template <Scalar T>
Extended to_extended(const T& v) {
    if constexpr (std::same_as<T, Rational>) {
        return Extended(bmp::numerator(v)) / Extended(bmp::denominator(v));
    } else {
        return Extended(v);
    }
}

template <Scalar T>
T abs_value(const T& v) {
    return v < T(0) ? T(-v) : v;
}

// (x)_k = x (x+1) ... (x+k-1)
template <Scalar T>
T pochhammer(const T& x, int k) {
    T r(1);
    for (int i = 0; i < k; ++i) r *= x + T(i);
    return r;
}

// binom(x, k) = x (x-1) ... (x-k+1) / k!, for real x and integer k >= 0.
template <Scalar T>
T binomial(const T& x, int k) {
    if (k < 0) return T(0);
    T r(1);
    for (int i = 0; i < k; ++i) {
        r *= x - T(i);
        r /= T(i + 1);
    }
    return r;
}

template <Scalar T>
T factorial(int n) {
    T r(1);
    for (int i = 2; i <= n; ++i) r *= T(i);
    return r;
}

// Text rendering with enough digits to round-trip the kind.
std::string format_scalar(double v);
std::string format_scalar(const Extended& v);
std::string format_scalar(const Rational& v);

}  // namespace mopoly
