#pragma once

#include "mopoly/family.hpp"

#include <limits>
#include <vector>

namespace mopoly {

struct SupportInterval {
    double lo, hi;
};

// One interval for AT families, two for the Angelesco families.
std::vector<SupportInterval> support_intervals(const FamilySpec& spec);

struct ZeroReport {
    std::vector<double> zeros;               // ascending
    std::vector<int> per_interval_counts;    // one entry per support interval
    int outside = 0;                         // zeros in no support interval
    double max_imag_discarded = 0;           // relative to the spectral radius
    std::vector<double> residuals;           // |P_N(zero)|, extended precision
    std::vector<int> boundary_zeros;         // indices resolved at a shared endpoint
    bool bracketed = false;                  // found by interlacing, not eigenvalues
};

// Zeros of the stepline P_N as eigenvalues of the N x N banded Hessenberg
// matrix. When the double eigenvalues show a complex pair the zeros are
// recomputed by interlacing brackets and a bracketing root finder on the
// recurrence.
ZeroReport zeros(const FamilySpec& spec, int N);

struct ZeroLocationResult {
    bool passed = false;
    std::vector<int> expected;
    ZeroReport report;
};

ZeroLocationResult zero_location_check(const FamilySpec& spec, int N);

// Diagonal similarity scaling by powers of two that equalizes row and column
// norms; eigenvalues are unchanged.
void balance(std::vector<double>& a, int n);

// Roots of a real polynomial (ascending coefficients) via its companion
// matrix; real parts of the eigenvalues plus the largest relative imaginary
// part.
std::vector<double> real_roots(const std::vector<double>& coeffs, double& max_imag);

}  // namespace mopoly
