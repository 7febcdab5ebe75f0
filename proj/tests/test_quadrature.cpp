#include "support.hpp"

#include <mopoly/construct.hpp>
#include <mopoly/quadrature.hpp>
#include <mopoly/verify.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

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

TEST(GaussJacobi, MomentsMatchBetaFunction) {
    // int_0^1 x^k x^0.3 (1-x)^0.6 dx = B(k + 1.3, 1.6)
    const auto r = gauss_jacobi_rule<double>(0.0, 1.0, 0.3, 0.6, 8);
    for (int k = 0; k < 16; ++k) {
        const double got = r.integrate([k](double x) { return std::pow(x, k); });
        EXPECT_NEAR(got, boost::math::beta(k + 1.3, 1.6), 1e-14) << k;
    }
}

TEST(GaussJacobi, AffinePlacement) {
    // int_{-2}^{0} (x+2)^0.5 dx = 2^{1.5} / 1.5
    const auto r = gauss_jacobi_rule<Extended>(Extended(-2), Extended(0), Extended(0.5), Extended(0), 5);
    const Extended got = r.integrate([](const Extended& x) { return Extended(1) + Extended(0) * x; });
    EXPECT_NEAR(to_double(got), std::pow(2.0, 1.5) / 1.5, 1e-15);
}

TEST(GolubWelsch, ThreePointHermite) {
    // Monic Hermite: alpha = 0, beta_k = k/2, mu0 = sqrt(pi).
    std::vector<double> nodes, weights;
    golub_welsch<double>({0, 0, 0}, {0.5, 1.0}, std::sqrt(M_PI), nodes, weights);
    ASSERT_EQ(nodes.size(), 3u);
    EXPECT_NEAR(nodes[0], -std::sqrt(1.5), 1e-14);
    EXPECT_NEAR(nodes[1], 0, 1e-14);
    EXPECT_NEAR(nodes[2], std::sqrt(1.5), 1e-14);
    EXPECT_NEAR(weights[1], 2 * std::sqrt(M_PI) / 3, 1e-14);
}

TEST(GaussRule, ClassicalShapes) {
    const auto lag = gauss_rule<double>(WeightDescriptor::laguerre(0, 0.5, 2.0), 10);
    // int_0^inf x^{0.5+k} e^{-2x} dx = Gamma(1.5+k) / 2^{1.5+k}
    for (int k = 0; k < 10; ++k)
        EXPECT_NEAR(lag.integrate([k](double x) { return std::pow(x, k); }),
                    std::tgamma(1.5 + k) / std::pow(2.0, 1.5 + k), 1e-12 * std::tgamma(1.5 + k)) << k;
    const auto her = gauss_rule<double>(WeightDescriptor::hermite(1.0), 6);
    // int e^{-x^2 + x} dx = sqrt(pi) e^{1/4}
    EXPECT_NEAR(her.integrate([](double) { return 1.0; }), std::sqrt(M_PI) * std::exp(0.25), 1e-13);
}

TEST(GaussRule, NonClassicalShapeIsRejected) {
    const auto w = family_weights(canonical("jl"))[1];
    EXPECT_FALSE(is_classical(w));
    EXPECT_EQ(code_of([&] { gauss_rule<double>(w, 4); }), ErrorCode::UnsupportedWeightShape);
}

TEST(CompositeRule, JacobiLaguerreWeightAgainstAdaptiveQuadrature) {
    // |x+1|^0.5 |x|^0.5 e^{-x} on [0, inf)
    const auto w = family_weights(canonical("jl"))[1];
    const auto rule = composite_rule<double>(w, 12);
    boost::math::quadrature::exp_sinh<double> integrator;
    for (int k = 0; k <= 12; k += 3) {
        const double want =
            integrator.integrate([k](double x) { return std::exp(k * std::log(x) + 0.5 * std::log((x + 1) * x) - x); });
        const double got = rule.integrate([k](double x) { return std::pow(x, k); });
        EXPECT_NEAR(got, want, 1e-11 * want) << k;
    }
    EXPECT_LT(rule.certified_error, 1e-10);
}

TEST(CompositeRule, AngelescoNegativeIntervalAgainstAdaptiveQuadrature) {
    const auto w = family_weights(canonical("ja"))[0];
    const auto rule = composite_rule<double>(w, 10);
    boost::math::quadrature::tanh_sinh<double> integrator;
    for (int k = 0; k <= 10; k += 2) {
        const double want = integrator.integrate(
            [&](double x) { return std::pow(x, k) * evaluate(w, x); }, -1.0, 0.0);
        const double got = rule.integrate([k](double x) { return std::pow(x, k); });
        EXPECT_NEAR(got, want, 1e-12 * std::abs(want) + 1e-15) << k;
    }
}

TEST(Moments, ExtendedAgreesWithClosedForm) {
    const auto m = moments<Extended>(WeightDescriptor::jacobi(0, 1, 0.25, 0.5), 6);
    for (int k = 0; k <= 6; ++k) {
        const Extended want = boost::math::beta(Extended(k + 1.25), Extended(1.5));
        EXPECT_LT(to_double(abs_value(Extended(m[k] - want))), 1e-45) << k;
    }
}

TEST(Moments, RationalRatios) {
    // Laguerre at 0 with exponent 1/2 and rate 1: m_k / m_0 = (3/2)_k.
    const auto w = WeightDescriptor::laguerre(0, 0.5, 1.0);
    ASSERT_TRUE(has_rational_moments(w));
    const auto r = normalized_moments<Rational>(w, 4);
    EXPECT_EQ(r[3], Rational(3, 2) * Rational(5, 2) * Rational(7, 2));
    EXPECT_TRUE(has_rational_moments(canonical("jp")));
    EXPECT_FALSE(has_rational_moments(canonical("ja")));
}

TEST(Oracle, RationalEqualsExtendedWhereExact) {
    const FamilySpec spec = MultipleLaguerreFirst{{0.5, 0.25}};
    for (int N = 1; N <= 8; ++N) {
        const auto idx = MultiIndex::stepline(2, N);
        const auto exact = convert<Extended>(oracle_polynomial<Rational>(spec, idx).poly());
        const auto approx = oracle_polynomial<Extended>(spec, idx);
        EXPECT_LT(max_relative_difference(approx.poly(), exact), 1e-30) << N;
    }
}

TEST(Oracle, MomentTableIsReusable) {
    const FamilySpec spec = canonical("mh");
    const auto table = MomentTable<Extended>::build(spec, 16);
    EXPECT_EQ(table.kmax(), 16);
    for (int N = 1; N <= 8; ++N) {
        const auto a = oracle_polynomial<Extended>(table, MultiIndex::stepline(2, N));
        const auto b = oracle_polynomial<Extended>(spec, MultiIndex::stepline(2, N));
        EXPECT_LT(max_relative_difference(a.poly(), b.poly()), 1e-35);
    }
}

TEST(Oracle, SingularSystems) {
    // Negative index entries are rejected.
    EXPECT_THROW(oracle_polynomial<Extended>(canonical("jp"), MultiIndex({-1, 2})), Error);
}

TEST(Orthogonality, ExtendedAndDouble) {
    std::mt19937_64 g(9);
    for (auto k : testing_support::all_kinds()) {
        const auto spec = testing_support::random_spec(k, g);
        for (int N = 1; N <= 12; ++N) {
            const auto idx = MultiIndex::stepline(2, N);
            EXPECT_LT(orthogonality_residual<Extended>(spec, idx, stepline_polynomial<Extended>(spec, N, Method::Recurrence).poly()),
                      1e-10)
                << describe(spec) << " N=" << N;
            EXPECT_LT(orthogonality_residual<double>(spec, idx, stepline_polynomial<double>(spec, N, Method::Recurrence).poly()),
                      1e-7)
                << describe(spec) << " N=" << N;
        }
    }
}

TEST(Orthogonality, DetectsWrongPolynomial) {
    const auto spec = canonical("ml2");
    auto p = stepline_polynomial<Extended>(spec, 6, Method::Recurrence).poly();
    auto c = p.coeffs();
    c[2] += Extended(1e-6) * abs_value(c[2]);
    EXPECT_GT(orthogonality_residual<Extended>(spec, MultiIndex::stepline(2, 6), Polynomial<Extended>(c)), 1e-12);
}

TEST(Simultaneous, ExactnessCertificates) {
    for (const auto& [t, s] : canonical_specs())
        for (int N = 1; N <= 10; ++N) {
            const auto idx = MultiIndex::stepline(2, N);
            const auto rule = simultaneous_rule<double>(s, idx);
            ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(N));
            ASSERT_EQ(rule.weights.size(), 2u);
            for (int j = 0; j < 2; ++j) EXPECT_GE(rule.exactness[j], N + idx[j] - 1) << t << " N=" << N << " j=" << j;
        }
}

TEST(Simultaneous, IntegratesAgainstBothWeights) {
    const auto spec = canonical("mh");
    const auto rule = simultaneous_rule<Extended>(spec, MultiIndex({3, 3}));
    const auto w = family_weights(spec);
    for (int j = 0; j < 2; ++j) {
        const auto m = moments<Extended>(w[j], 8);
        for (int k = 0; k <= 8; ++k) {
            const Extended got = rule.integrate([k](const Extended& x) { return pow(x, k); }, j);
            EXPECT_LT(to_double(abs_value(Extended(got - m[k]))), 1e-25 * std::max(1.0, to_double(abs_value(m[k]))))
                << j << " " << k;
        }
    }
}

TEST(Simultaneous, OffSteplineIndex) {
    const auto spec = canonical("jp");
    const auto rule = simultaneous_rule<double>(spec, MultiIndex({1, 3}));
    EXPECT_EQ(rule.nodes.size(), 4u);
    EXPECT_GE(rule.exactness[0], 4 + 1 - 1);
    EXPECT_GE(rule.exactness[1], 4 + 3 - 1);
}
