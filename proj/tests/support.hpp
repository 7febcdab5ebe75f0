#pragma once

#include <mopoly/family.hpp>
#include <mopoly/scalar.hpp>

#include <cmath>
#include <random>
#include <vector>

namespace testing_support {

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

// Two values whose difference stays well away from the integers.
inline std::vector<double> separated_pair(std::mt19937_64& g, double lo, double hi) {
    for (;;) {
        const double x = uniform(g, lo, hi), y = uniform(g, lo, hi);
        const double d = x - y;
        if (std::abs(d - std::round(d)) > 0.1) return {x, y};
    }
}

// A valid parameter draw for each family kind.
inline mopoly::FamilySpec random_spec(mopoly::FamilyKind kind, std::mt19937_64& g) {
    using namespace mopoly;
    switch (kind) {
        case FamilyKind::JP: return JacobiPineiro{uniform(g, -0.5, 2.5), separated_pair(g, -0.5, 2.5)};
        case FamilyKind::ML1: return MultipleLaguerreFirst{separated_pair(g, -0.5, 2.5)};
        case FamilyKind::ML2: {
            const double c1 = uniform(g, 0.5, 2.0);
            return MultipleLaguerreSecond{uniform(g, -0.5, 2.5), {c1, c1 + uniform(g, 0.3, 1.5)}};
        }
        case FamilyKind::MH: {
            const double c1 = uniform(g, -1.5, 1.5);
            return MultipleHermite{{c1, c1 + uniform(g, 0.3, 1.5)}};
        }
        case FamilyKind::JA:
            return JacobiAngelesco{uniform(g, -2.5, -0.4), uniform(g, -0.5, 2.0), uniform(g, -0.5, 2.0),
                                   uniform(g, -0.5, 2.0)};
        case FamilyKind::JL: return JacobiLaguerre{uniform(g, -2.5, -0.4), uniform(g, -0.5, 2.0), uniform(g, -0.5, 2.0)};
        case FamilyKind::LH: return LaguerreHermite{uniform(g, -0.5, 2.5)};
    }
    return {};
}

inline const std::vector<mopoly::FamilyKind>& all_kinds() {
    using mopoly::FamilyKind;
    static const std::vector<FamilyKind> k{FamilyKind::JP, FamilyKind::ML1, FamilyKind::ML2, FamilyKind::MH,
                                           FamilyKind::JA, FamilyKind::JL, FamilyKind::LH};
    return k;
}

}  // namespace testing_support
