#pragma once

#include "mopoly/family.hpp"

#include <string_view>
#include <vector>

namespace mopoly {

enum class LimitKind {
    JacobiToLaguerre,          // alpha^n P_n^{(alpha,beta)}(x/alpha) -> L_n^{(beta)}
    JacobiToHermite,           // P_n^{(alpha,alpha)} at (x + sqrt(alpha)) / (2 sqrt(alpha)) -> H_n
    LaguerreToHermite,         // L_n^{(alpha)} at sqrt(2 alpha) x + alpha -> H_n
    PineiroToLaguerreFirst,    // alpha0 -> inf, x / alpha0
    PineiroToLaguerreSecond,   // alpha_j = c_j alpha, x -> 1 - x / alpha
    PineiroToHermite,          // alpha0 = alpha, alpha_j = alpha + c_j sqrt(alpha)
    LaguerreFirstToHermite,    // alpha_j = alpha + c_j sqrt(alpha / 2)
    AngelescoToJacobiLaguerre, // gamma -> inf with a / gamma, x / gamma
    AngelescoToLaguerreHermite // alpha = gamma -> inf, a = -1, x / sqrt(alpha)
};

const std::vector<LimitKind>& all_limit_kinds();
std::string_view to_string(LimitKind kind);
LimitKind parse_limit_kind(std::string_view text);

// Deviation is expected to fall like 1/sqrt(scale) on these routes and like
// 1/scale on the others.
bool is_sqrt_route(LimitKind kind);

struct LimitTarget {
    LimitKind kind;
    double beta = 0;     // classical Jacobi/Laguerre exponent that stays fixed
    FamilySpec target;   // multiple routes: the limiting family
};

LimitTarget default_limit_target(LimitKind kind);

// Max coefficient deviation between the rescaled source polynomial at the
// given scale and the target, for total degree `degree`. The two
// Jacobi-Angelesco routes use the diagonal expansion and need even degree.
double limit_check(const LimitTarget& target, double scale, int degree);

struct LimitRow {
    double scale;
    double deviation;
};

std::vector<LimitRow> limit_table(const LimitTarget& target, const std::vector<double>& scales, int degree);

}  // namespace mopoly
