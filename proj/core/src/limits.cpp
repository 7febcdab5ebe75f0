#include "mopoly/limits.hpp"

#include "mopoly/construct.hpp"
#include "mopoly/errors.hpp"
#include "mopoly/polynomial.hpp"

#include <cmath>
#include <string>

namespace mopoly {

namespace {

using E = Extended;

struct KindName {
    LimitKind kind;
    std::string_view name;
};

constexpr KindName kNames[] = {
    {LimitKind::JacobiToLaguerre, "jacobi-laguerre"},
    {LimitKind::JacobiToHermite, "jacobi-hermite"},
    {LimitKind::LaguerreToHermite, "laguerre-hermite"},
    {LimitKind::PineiroToLaguerreFirst, "jp-ml1"},
    {LimitKind::PineiroToLaguerreSecond, "jp-ml2"},
    {LimitKind::PineiroToHermite, "jp-mh"},
    {LimitKind::LaguerreFirstToHermite, "ml1-mh"},
    {LimitKind::AngelescoToJacobiLaguerre, "ja-jl"},
    {LimitKind::AngelescoToLaguerreHermite, "ja-lh"},
};

Polynomial<E> rescale(const Polynomial<E>& p, const E& u, const E& v, const E& factor) {
    return scale(shift_scale(p, u, v), factor);
}

E power(const E& x, int k) {
    E r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

template <class Want>
const Want& target_as(const LimitTarget& t) {
    const auto* p = std::get_if<Want>(&t.target);
    if (!p) raise(ErrorCode::UnsupportedFamily, "limit target family does not match " + std::string(to_string(t.kind)));
    return *p;
}

}  // namespace

const std::vector<LimitKind>& all_limit_kinds() {
    static const std::vector<LimitKind> kinds = [] {
        std::vector<LimitKind> v;
        for (const auto& k : kNames) v.push_back(k.kind);
        return v;
    }();
    return kinds;
}

std::string_view to_string(LimitKind kind) {
    for (const auto& k : kNames)
        if (k.kind == kind) return k.name;
    return "?";
}

LimitKind parse_limit_kind(std::string_view text) {
    for (const auto& k : kNames)
        if (k.name == text) return k.kind;
    raise(ErrorCode::ParameterOutOfRange, "unknown limit kind '" + std::string(text) + "'");
}

bool is_sqrt_route(LimitKind kind) {
    switch (kind) {
        case LimitKind::JacobiToHermite:
        case LimitKind::LaguerreToHermite:
        case LimitKind::PineiroToHermite:
        case LimitKind::LaguerreFirstToHermite:
        case LimitKind::AngelescoToLaguerreHermite: return true;
        default: return false;
    }
}

LimitTarget default_limit_target(LimitKind kind) {
    // Drifts and rates differ by a third so that the source parameters never
    // hit an integer exponent gap at power-of-ten scales.
    switch (kind) {
        case LimitKind::JacobiToLaguerre: return {kind, 0.5, JacobiPineiro{}};
        case LimitKind::JacobiToHermite:
        case LimitKind::LaguerreToHermite: return {kind, 0, JacobiPineiro{}};
        case LimitKind::PineiroToLaguerreFirst: return {kind, 0, MultipleLaguerreFirst{{0.25, 0.75}}};
        case LimitKind::PineiroToLaguerreSecond: return {kind, 0, MultipleLaguerreSecond{0.5, {1.0, 4.0 / 3}}};
        case LimitKind::PineiroToHermite:
        case LimitKind::LaguerreFirstToHermite: return {kind, 0, MultipleHermite{{1.0 / 3, -1.0 / 3}}};
        case LimitKind::AngelescoToJacobiLaguerre: return {kind, 0, JacobiLaguerre{-1, 0.5, 0.5}};
        case LimitKind::AngelescoToLaguerreHermite: return {kind, 0, LaguerreHermite{0.5}};
    }
    raise(ErrorCode::ParameterOutOfRange, "unknown limit kind");
}

double limit_check(const LimitTarget& t, double scale_d, int N) {
    if (!(scale_d > 0) || !std::isfinite(scale_d)) raise(ErrorCode::ParameterOutOfRange, "scale must be positive");
    if (N < 0) raise(ErrorCode::ParameterOutOfRange, "degree must be nonnegative");
    const E al(scale_d);
    const E ra = sqrt(al);
    Polynomial<E> source, target;
    switch (t.kind) {
        case LimitKind::JacobiToLaguerre: {
            const E be(t.beta);
            source = rescale(classical_jacobi(al, be, N).poly(), E(1) / al, E(0), power(al, N));
            target = classical_laguerre(be, N).poly();
            break;
        }
        case LimitKind::JacobiToHermite:
            source = rescale(classical_jacobi(al, al, N).poly(), E(1) / (2 * ra), E(0.5), power(2 * ra, N));
            target = classical_hermite<E>(N).poly();
            break;
        case LimitKind::LaguerreToHermite:
            source = rescale(classical_laguerre(al, N).poly(), sqrt(2 * al), al, E(1) / power(sqrt(2 * al), N));
            target = classical_hermite<E>(N).poly();
            break;
        case LimitKind::PineiroToLaguerreFirst: {
            const auto& ml = target_as<MultipleLaguerreFirst>(t);
            const FamilySpec src = JacobiPineiro{scale_d, ml.alphas};
            source = rescale(polynomial_via_recurrence<E>(src, N).poly(), E(1) / al, E(0), power(al, N));
            target = polynomial_via_recurrence<E>(t.target, N).poly();
            break;
        }
        case LimitKind::PineiroToLaguerreSecond: {
            const auto& ml = target_as<MultipleLaguerreSecond>(t);
            JacobiPineiro src{ml.alpha0, {}};
            for (double c : ml.cs) src.alphas.push_back(c * scale_d);
            source = rescale(polynomial_via_recurrence<E>(src, N).poly(), E(-1) / al, E(1), power(-al, N));
            target = polynomial_via_recurrence<E>(t.target, N).poly();
            break;
        }
        case LimitKind::PineiroToHermite: {
            JacobiPineiro src{scale_d, {}};
            for (double c : target_as<MultipleHermite>(t).cs) src.alphas.push_back(scale_d + c * std::sqrt(scale_d));
            source = rescale(polynomial_via_recurrence<E>(src, N).poly(), E(1) / (2 * ra), E(0.5), power(2 * ra, N));
            target = polynomial_via_recurrence<E>(t.target, N).poly();
            break;
        }
        case LimitKind::LaguerreFirstToHermite: {
            MultipleLaguerreFirst src;
            for (double c : target_as<MultipleHermite>(t).cs)
                src.alphas.push_back(scale_d + c * std::sqrt(scale_d / 2));
            const E u = sqrt(2 * al);
            source = rescale(polynomial_via_recurrence<E>(src, N).poly(), u, al, E(1) / power(u, N));
            target = polynomial_via_recurrence<E>(t.target, N).poly();
            break;
        }
        case LimitKind::AngelescoToJacobiLaguerre: {
            if (N % 2) raise(ErrorCode::ParameterOutOfRange, "Jacobi-Angelesco limits use even degree");
            const auto& jl = target_as<JacobiLaguerre>(t);
            const E a(jl.a), A(jl.alpha), B(jl.beta);
            source = rescale(jacobi_angelesco_explicit(A, B, al, E(a / al), N / 2).poly(), E(1) / al, E(0),
                             power(al, N));
            target = jacobi_laguerre_explicit(A, B, a, N / 2).poly();
            break;
        }
        case LimitKind::AngelescoToLaguerreHermite: {
            if (N % 2) raise(ErrorCode::ParameterOutOfRange, "Jacobi-Angelesco limits use even degree");
            const auto& lh = target_as<LaguerreHermite>(t);
            source = rescale(jacobi_angelesco_explicit(al, E(lh.beta), al, E(-1), N / 2).poly(), E(1) / ra, E(0),
                             power(ra, N));
            target = polynomial_via_recurrence<E>(t.target, N).poly();
            break;
        }
    }
    return max_abs_difference(source, target);
}

std::vector<LimitRow> limit_table(const LimitTarget& target, const std::vector<double>& scales, int degree) {
    std::vector<LimitRow> rows;
    for (double s : scales) rows.push_back({s, limit_check(target, s, degree)});
    return rows;
}

}  // namespace mopoly
