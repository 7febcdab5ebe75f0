#pragma once

#include "mopoly/family.hpp"
#include "mopoly/polynomial.hpp"
#include "mopoly/scalar.hpp"

#include <optional>
#include <vector>

namespace mopoly {

// x P_n = P_{n+1} + b_n P_n + c_n P_{n-1} + d_n P_{n-2} along the stepline
// P_{2k} = P_{k,k}, P_{2k+1} = P_{k+1,k}.
template <Floating T>
struct RecurrenceTerms {
    T b, c, d;
};

template <Floating T>
struct SteplineRecurrence {
    FamilySpec spec;
    std::vector<T> b, c, d;  // indices 0..N-1
    int size() const { return static_cast<int>(b.size()); }
};

template <Floating T>
RecurrenceTerms<T> stepline_coeffs(const FamilySpec& spec, int n);

template <Floating T>
SteplineRecurrence<T> stepline_recurrence(const FamilySpec& spec, int count);

// Limits of b_n / n^p_b, c_n / n^p_c, d_n / n^p_d along even and odd n.
struct AsymptoticLimits {
    double b_even = 0, b_odd = 0;
    double c_even = 0, c_odd = 0;
    double d_even = 0, d_odd = 0;
    double b_power = 0, c_power = 0, d_power = 0;
    std::optional<double> x1, x2;  // Jacobi-Angelesco critical points
};

AsymptoticLimits asymptotic_coeffs(const FamilySpec& spec);

// First moment of the n-shifted weight on the negative interval over its mass.
template <Floating T>
T x_moment_ratio(const FamilySpec& spec, int n);

struct BandedHessenberg {
    int N = 0;
    int r = 2;
    std::vector<double> b, c, d;  // a_{n,0}, a_{n,1}, a_{n,2}

    double operator()(int i, int j) const;
    std::vector<double> dense() const;  // row-major N x N
};

BandedHessenberg hessenberg(const FamilySpec& spec, int N);

// b_n, c_n, d_n read off from monic P_{n-2}, ..., P_{n+1} (polys[k] = P_k).
template <Floating T>
RecurrenceTerms<T> extract_recurrence(const std::vector<Polynomial<T>>& polys, int n);

// Value of P_N at x by running the recurrence forward.
template <Floating T>
T evaluate_stepline(const SteplineRecurrence<T>& rec, int N, const T& x);

}  // namespace mopoly
