#pragma once

#include "mopoly/family.hpp"
#include "mopoly/scalar.hpp"

#include <boost/multiprecision/number.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace mopoly {

// |x - point|^exponent
struct PowerFactor {
    double point = 0;
    double exponent = 0;
    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

enum class ExponentialKind {
    None,
    Linear,    // e^{-rate x}
    Gaussian,  // e^{-x^2 + rate x}
};

struct WeightDescriptor {
    double lo = 0;
    double hi = 1;
    std::vector<PowerFactor> powers;
    ExponentialKind exponential = ExponentialKind::None;
    double rate = 0;

    static WeightDescriptor jacobi(double lo, double hi, double e_lo, double e_hi);
    static WeightDescriptor laguerre(double lo, double e_lo, double rate);
    static WeightDescriptor hermite(double drift);

    // Exponent carried by a power factor sitting exactly at `x`, 0 if none.
    double exponent_at(double x) const;
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    friend bool operator==(const WeightDescriptor&, const WeightDescriptor&) = default;
};

// Weight j (0-based) of the family, in the family's own orientation.
std::vector<WeightDescriptor> family_weights(const FamilySpec& spec);

// Throws NonIntegrable when the weight has no finite moments.
void check_integrable(const WeightDescriptor& w);

std::string describe(const WeightDescriptor& w);

template <Floating T>
T evaluate(const WeightDescriptor& w, const T& x) {
    using std::abs;
    using std::exp;
    using std::pow;
    T v(1);
    for (const auto& f : w.powers)
        if (f.exponent != 0) v *= pow(T(abs(T(x - T(f.point)))), T(f.exponent));
    switch (w.exponential) {
        case ExponentialKind::None: break;
        case ExponentialKind::Linear: v *= exp(T(-T(w.rate) * x)); break;
        case ExponentialKind::Gaussian: v *= exp(T(-x * x + T(w.rate) * x)); break;
    }
    return v;
}

}  // namespace mopoly
