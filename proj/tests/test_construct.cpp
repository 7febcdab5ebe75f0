#include "data/reference_values.hpp"
#include "support.hpp"

#include <mopoly/construct.hpp>
#include <mopoly/limits.hpp>
#include <mopoly/quadrature.hpp>
#include <mopoly/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <string>

using namespace mopoly;

namespace {

FamilySpec canonical(const std::string& token) {
    for (const auto& [t, s] : canonical_specs())
        if (t == token) return s;
    throw std::runtime_error("no canonical spec " + token);
}

Polynomial<Extended> reference_poly(const refdata::FamilyReference& r, int N) {
    std::vector<Extended> c;
    for (int k = 0; k <= N; ++k) c.emplace_back(r.poly[N][k]);
    return Polynomial<Extended>(std::move(c));
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::NumericalFailure;
}

}  // namespace

class ReferencePolynomials : public ::testing::TestWithParam<int> {};

namespace {
// The quadrature-generated ja and lh references hold about 20 digits.
bool quadrature_moments(const std::string& family) { return family == "ja" || family == "lh"; }
}  // namespace

TEST_P(ReferencePolynomials, RecurrenceMatchesMomentSolve) {
    const auto& r = refdata::kFamilies[GetParam()];
    const auto spec = canonical(r.family);
    const auto polys = stepline_polynomials<Extended>(spec, refdata::kMaxDegree);
    for (int N = 0; N <= refdata::kMaxDegree; ++N)
        EXPECT_LT(max_relative_difference(polys[N].poly(), reference_poly(r, N)),
                  quadrature_moments(r.family) ? 1e-20 : 1e-30)
            << r.family << " N=" << N;
}

TEST_P(ReferencePolynomials, OracleMatchesMomentSolve) {
    const auto& r = refdata::kFamilies[GetParam()];
    const auto spec = canonical(r.family);
    for (int N = 1; N <= refdata::kMaxDegree; ++N)
        EXPECT_LT(max_relative_difference(oracle_polynomial_best(spec, MultiIndex::stepline(2, N)).poly(),
                                          reference_poly(r, N)),
                  quadrature_moments(r.family) ? 1e-15 : 1e-25)
            << r.family << " N=" << N;
}

INSTANTIATE_TEST_SUITE_P(Families, ReferencePolynomials, ::testing::Range(0, 7),
                         [](const auto& info) { return std::string(refdata::kFamilies[info.param].family); });

TEST(Classical, SmallDegrees) {
    // Monic Hermite: x^2 - 1/2, x^3 - 3x/2.
    EXPECT_EQ(classical_hermite<Rational>(2).poly(), Polynomial<Rational>(std::vector<Rational>{Rational(-1, 2), 0, 1}));
    EXPECT_EQ(classical_hermite<Rational>(3).poly(),
              Polynomial<Rational>(std::vector<Rational>{0, Rational(-3, 2), 0, 1}));
    // Monic Laguerre: x - (alpha + 1).
    EXPECT_EQ(classical_laguerre<Rational>(Rational(1, 2), 1).poly(),
              Polynomial<Rational>(std::vector<Rational>{Rational(-3, 2), 1}));
    // Monic Jacobi on [0,1] for x^beta (1-x)^alpha: x - (beta+1)/(alpha+beta+2).
    EXPECT_EQ(classical_jacobi<Rational>(Rational(1), Rational(2), 1).poly(),
              Polynomial<Rational>(std::vector<Rational>{Rational(-3, 5), 1}));
}

TEST(Classical, LaguerreTwoTermsExact) {
    // L_2^{(a)} monic = x^2 - 2(a+2) x + (a+1)(a+2).
    const Rational a(1, 3);
    EXPECT_EQ(classical_laguerre<Rational>(a, 2).poly(),
              Polynomial<Rational>(std::vector<Rational>{(a + 1) * (a + 2), -2 * (a + 2), 1}));
}

TEST(Explicit, JacobiPineiroExactAgainstRationalOracle) {
    // Rational parameters: the double sum and the moment determinant are exact.
    const Rational a0(1, 2), a1(1, 4), a2(3, 4);
    const FamilySpec spec = JacobiPineiro{0.5, {0.25, 0.75}};
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            if (n + m == 0) continue;
            const auto e = jacobi_pineiro_explicit(a0, a1, a2, n, m);
            const auto o = oracle_polynomial<Rational>(spec, MultiIndex({n, m}));
            EXPECT_EQ(e.poly(), o.poly()) << n << "," << m;
        }
}

TEST(Explicit, AllStepExplicitFamiliesMatchRecurrence) {
    std::mt19937_64 g(5);
    for (auto k : {FamilyKind::JP, FamilyKind::JA, FamilyKind::JL})
        for (int draw = 0; draw < 2; ++draw) {
            const auto spec = testing_support::random_spec(k, g);
            for (int N = 1; N <= 10; ++N) {
                const auto e = stepline_polynomial<Extended>(spec, N, Method::Explicit);
                const auto r = stepline_polynomial<Extended>(spec, N, Method::Recurrence);
                EXPECT_LT(max_relative_difference(e.poly(), r.poly()), 1e-30) << describe(spec) << " N=" << N;
            }
        }
}

TEST(Explicit, UnavailableForOtherFamilies) {
    EXPECT_EQ(code_of([] { stepline_polynomial<double>(canonical("ml1"), 3, Method::Explicit); }),
              ErrorCode::UnsupportedFamily);
}

TEST(Subleading, JacobiPineiroMatchesCoefficient) {
    const FamilySpec spec = canonical("jp");
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            if (n + m == 0) continue;
            const auto s = subleading_coefficients(spec, n, m);
            const auto p = oracle_polynomial_best(spec, MultiIndex({n, m}));
            EXPECT_LT(to_double(abs_value(Extended(s.A - p.coeff(n + m - 1)))), 1e-30) << n << "," << m;
        }
}

TEST(Subleading, JacobiAngelescoBothCoefficients) {
    const FamilySpec spec = JacobiAngelesco{-1.3, 0.4, 0.9, 0.2};
    for (int n = 1; n <= 5; ++n) {
        const auto s = subleading_coefficients(spec, n, n);
        ASSERT_TRUE(s.B.has_value());
        const auto p = polynomial_via_recurrence<Extended>(spec, 2 * n);
        EXPECT_LT(to_double(abs_value(Extended(s.A - p.coeff(2 * n - 1)))), 1e-30) << n;
        EXPECT_LT(to_double(abs_value(Extended(*s.B - p.coeff(2 * n - 2)))), 1e-30) << n;
    }
    EXPECT_EQ(code_of([&] { subleading_coefficients(spec, 2, 1); }), ErrorCode::UnsupportedFamily);
}

TEST(Raising, IdentitiesHoldOnAllRaisableFamilies) {
    for (const auto& [t, s] : canonical_specs()) {
        const int weights = is_angelesco(s) ? 1 : 2;
        for (int n = 0; n <= 5; ++n)
            for (int j = 0; j < weights; ++j) {
                try {
                    EXPECT_LT(raising_apply(s, j, MultiIndex::stepline(2, n)).relative, 1e-12) << t << " " << n;
                } catch (const Error& e) {
                    EXPECT_EQ(e.code(), ErrorCode::ParameterOutOfRange) << t;
                }
            }
    }
}

TEST(Raising, OffSteplineIndices) {
    const FamilySpec spec = JacobiPineiro{1.5, {1.25, 1.75}};
    for (auto idx : {MultiIndex({2, 0}), MultiIndex({0, 3}), MultiIndex({1, 3})})
        for (int j = 0; j < 2; ++j) EXPECT_LT(raising_apply(spec, j, idx).relative, 1e-12) << idx.to_string();
}

TEST(MultiplePolynomial, MirrorIndexUsesSwappedWeights) {
    const FamilySpec spec = canonical("ml1");
    const auto a = multiple_polynomial(spec, MultiIndex({2, 3}));
    const auto b = multiple_polynomial(swapped_weights(spec), MultiIndex({3, 2}));
    EXPECT_LT(max_relative_difference(a.poly(), b.poly()), 1e-35);
    const auto o = oracle_polynomial_best(spec, MultiIndex({2, 3}));
    EXPECT_LT(max_relative_difference(a.poly(), o.poly()), 1e-25);
}

TEST(Oracle, ThreeWeightJacobiPineiro) {
    const FamilySpec spec = JacobiPineiro{0.5, {0.1, 0.4, 0.7}};
    const auto p = oracle_polynomial_best(spec, MultiIndex({2, 1, 1}));
    EXPECT_EQ(p.degree(), 4);
    EXPECT_LT(orthogonality_residual<Extended>(spec, MultiIndex({2, 1, 1}), p.poly()), 1e-30);
}

TEST(Limits, EveryRouteConvergesAtItsRate) {
    for (auto kind : all_limit_kinds()) {
        const auto t = default_limit_target(kind);
        const double lo = limit_check(t, 1e3, 2), hi = limit_check(t, 1e6, 2);
        const double need = is_sqrt_route(kind) ? 10 : 100;
        EXPECT_GE(lo / hi, need) << to_string(kind);
        EXPECT_LT(hi, 1e-2) << to_string(kind);
    }
}

TEST(Limits, MultipleHermiteFromBothRoutes) {
    // Both the Jacobi-Pineiro and the multiple Laguerre I route land on the
    // same multiple Hermite polynomial.
    for (auto kind : {LimitKind::PineiroToHermite, LimitKind::LaguerreFirstToHermite}) {
        const auto t = default_limit_target(kind);
        for (int N = 1; N <= 3; ++N) EXPECT_LT(limit_check(t, 1e8, N), 1e-3) << to_string(kind) << " N=" << N;
    }
}

TEST(Limits, TableRowsFollowScales) {
    const auto rows = limit_table(default_limit_target(LimitKind::JacobiToLaguerre), {1e2, 1e3, 1e4}, 3);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].scale, 1e3);
    EXPECT_GT(rows[0].deviation, rows[1].deviation);
    EXPECT_GT(rows[1].deviation, rows[2].deviation);
}

TEST(Limits, KindTokensRoundTrip) {
    for (auto kind : all_limit_kinds()) EXPECT_EQ(parse_limit_kind(to_string(kind)), kind);
    EXPECT_EQ(all_limit_kinds().size(), 9u);
}
