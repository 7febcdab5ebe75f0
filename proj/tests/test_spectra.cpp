#include "support.hpp"

#include <mopoly/construct.hpp>
#include <mopoly/recurrence.hpp>
#include <mopoly/spectra.hpp>
#include <mopoly/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>

using namespace mopoly;

namespace {

FamilySpec canonical(const std::string& token) {
    for (const auto& [t, s] : canonical_specs())
        if (t == token) return s;
    throw std::runtime_error("no canonical spec " + token);
}

// Independent check: every reported zero sits at a sign change of P_N
// evaluated in extended precision, and consecutive zeros are separated.
void expect_sign_changes(const FamilySpec& spec, int N, const std::vector<double>& z) {
    const auto rec = stepline_recurrence<Extended>(spec, N);
    ASSERT_EQ(static_cast<int>(z.size()), N);
    for (int i = 0; i < N; ++i) {
        const double gap_lo = i > 0 ? z[i] - z[i - 1] : 1.0;
        const double gap_hi = i + 1 < N ? z[i + 1] - z[i] : 1.0;
        ASSERT_GT(gap_hi, 0) << describe(spec) << " N=" << N << " zeros " << i << "," << i + 1 << " coincide";
        const double h = 1e-3 * std::min(gap_lo, gap_hi);
        const Extended l = evaluate_stepline(rec, N, Extended(z[i] - h));
        const Extended r = evaluate_stepline(rec, N, Extended(z[i] + h));
        EXPECT_NE(l < 0, r < 0) << describe(spec) << " N=" << N << " zero " << i << " at " << z[i];
    }
}

}  // namespace

TEST(SupportIntervals, PerFamily) {
    const auto jp = support_intervals(canonical("jp"));
    ASSERT_EQ(jp.size(), 1u);
    EXPECT_EQ(jp[0].lo, 0);
    EXPECT_EQ(jp[0].hi, 1);
    const auto mh = support_intervals(canonical("mh"));
    EXPECT_TRUE(std::isinf(mh[0].lo) && std::isinf(mh[0].hi));
    const auto ja = support_intervals(JacobiAngelesco{-2, 0, 0, 0});
    ASSERT_EQ(ja.size(), 2u);
    EXPECT_EQ(ja[0].lo, -2);
    EXPECT_EQ(ja[0].hi, 0);
    EXPECT_EQ(ja[1].hi, 1);
    const auto lh = support_intervals(canonical("lh"));
    EXPECT_TRUE(std::isinf(lh[0].lo) && std::isinf(lh[1].hi));
}

TEST(Zeros, SmallDegreeExample) {
    // P_1 of jp is x - b_0.
    const auto spec = canonical("jp");
    const auto z = zeros(spec, 1);
    ASSERT_EQ(z.zeros.size(), 1u);
    EXPECT_NEAR(z.zeros[0], stepline_coeffs<double>(spec, 0).b, 1e-15);
    EXPECT_FALSE(z.bracketed);
}

TEST(Zeros, LocationTheoremsUpToFifty) {
    for (const auto& [t, s] : canonical_specs())
        for (int N = 1; N <= 50; ++N) {
            const auto r = zero_location_check(s, N);
            EXPECT_TRUE(r.passed) << t << " N=" << N;
            EXPECT_LT(r.report.max_imag_discarded, 1e-8) << t << " N=" << N;
            EXPECT_EQ(r.report.outside, 0) << t << " N=" << N;
        }
}

TEST(Zeros, AngelescoCountsSplitCeilFloor) {
    for (const auto& [t, s] : canonical_specs()) {
        if (!is_angelesco(s)) continue;
        for (int N : {7, 8, 21}) {
            const auto r = zero_location_check(s, N);
            ASSERT_EQ(r.report.per_interval_counts.size(), 2u);
            EXPECT_EQ(r.report.per_interval_counts[0], (N + 1) / 2) << t;
            EXPECT_EQ(r.report.per_interval_counts[1], N / 2) << t;
        }
    }
}

TEST(Zeros, SignChangesConfirmEachZero) {
    std::mt19937_64 g(3);
    for (auto k : testing_support::all_kinds()) {
        const auto spec = testing_support::random_spec(k, g);
        for (int N : {5, 12, 30}) expect_sign_changes(spec, N, zeros(spec, N).zeros);
    }
}

TEST(Zeros, ConsecutiveDegreesInterlace) {
    for (const auto& [t, s] : canonical_specs())
        for (int N = 2; N <= 40; N += 3) {
            const auto a = zeros(s, N - 1).zeros, b = zeros(s, N).zeros;
            for (int i = 0; i + 1 < N; ++i) {
                EXPECT_LT(b[i], a[i]) << t << " N=" << N << " i=" << i;
                EXPECT_LT(a[i], b[i + 1]) << t << " N=" << N << " i=" << i;
            }
        }
}

TEST(Zeros, ResidualsAreSmall) {
    for (const auto& [t, s] : canonical_specs()) {
        const int N = 20;
        const auto z = zeros(s, N);
        const auto rec = stepline_recurrence<Extended>(s, N);
        for (std::size_t i = 0; i < z.zeros.size(); ++i) {
            // Compare against the size of P_N a little way off the zero.
            const double h = 1e-6 * std::max(1.0, std::abs(z.zeros[i]));
            const double nearby = to_double(abs_value(evaluate_stepline(rec, N, Extended(z.zeros[i] + h))));
            EXPECT_LT(z.residuals[i], 1e-3 * nearby + 1e-300) << t << " zero " << i;
        }
    }
}

TEST(Zeros, MultipleHermiteMirrorSymmetry) {
    const auto a = zeros(MultipleHermite{{0.5, -0.5}}, 16).zeros;
    const auto b = zeros(MultipleHermite{{-0.5, 0.5}}, 16).zeros;
    for (int i = 0; i < 16; ++i) EXPECT_NEAR(a[i], -b[15 - i], 1e-10);
}

TEST(Zeros, LargeDegreesStayReal) {
    // Double eigenvalues pick up spurious complex pairs here; the report
    // comes from the interlacing path.
    for (const auto& t : {"jp", "ml1", "ml2", "mh", "ja", "lh"})
        for (int N : {60, 100}) {
            const auto s = canonical(t);
            const auto r = zero_location_check(s, N);
            EXPECT_TRUE(r.passed) << t << " N=" << N;
            expect_sign_changes(s, N, r.report.zeros);
        }
    const auto ml1 = zeros(canonical("ml1"), 60);
    EXPECT_TRUE(ml1.bracketed);
}

TEST(Zeros, JacobiLaguerreToSeventyFive) {
    const auto s = canonical("jl");
    const auto r = zero_location_check(s, 75);
    EXPECT_TRUE(r.passed);
    expect_sign_changes(s, 75, r.report.zeros);
}

TEST(Zeros, JacobiLaguerreBeyondPrecisionIsReported) {
    // The forward recurrence on [a,0] exhausts 50 digits near N = 80; the
    // failure is raised, never a silently wrong zero set.
    try {
        EXPECT_TRUE(zero_location_check(canonical("jl"), 90).passed);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SpuriousComplexPair);
    }
}

TEST(Zeros, DegreeRange) {
    EXPECT_THROW(zeros(canonical("jp"), 0), Error);
    EXPECT_THROW(zeros(canonical("jp"), 501), Error);
}

TEST(Balance, PreservesTraceAndSpectrum) {
    const auto spec = canonical("ml1");
    auto m = hessenberg(spec, 10).dense();
    const auto before = m;
    balance(m, 10);
    double t0 = 0, t1 = 0;
    for (int i = 0; i < 10; ++i) t0 += before[i * 10 + i], t1 += m[i * 10 + i];
    EXPECT_NEAR(t0, t1, 1e-12 * std::abs(t0));
    // Power-of-two diagonal scaling keeps every product a_ij a_ji.
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            EXPECT_NEAR(m[i * 10 + j] * m[j * 10 + i], before[i * 10 + j] * before[j * 10 + i],
                        1e-12 * std::abs(before[i * 10 + j] * before[j * 10 + i]));
}

TEST(RealRoots, CompanionMatrix) {
    double imag = 1;
    const auto r = real_roots({-6, 11, -6, 1}, imag);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_NEAR(r[0], 1, 1e-12);
    EXPECT_NEAR(r[1], 2, 1e-12);
    EXPECT_NEAR(r[2], 3, 1e-12);
    EXPECT_LT(imag, 1e-12);
    real_roots({1, 0, 1}, imag);
    EXPECT_GT(imag, 0.5);
}
