#include "mopoly/verify.hpp"

#include "mopoly/construct.hpp"
#include "mopoly/errors.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/quadrature.hpp"
#include "mopoly/spectra.hpp"

#include <algorithm>
#include <string>

namespace mopoly {

namespace {

using E = Extended;

bool has_explicit(const FamilySpec& spec) {
    const auto k = kind_of(spec);
    return k == FamilyKind::JP || k == FamilyKind::JA || k == FamilyKind::JL;
}

CheckResult start(std::string name, double threshold) {
    CheckResult c;
    c.name = std::move(name);
    c.threshold = threshold;
    return c;
}

void record(CheckResult& c, double value) {
    ++c.cases;
    c.worst = std::max(c.worst, value);
}

void finish(CheckResult& c) {
    c.passed = c.worst < c.threshold;
}

template <Floating T>
std::vector<CheckResult> run(const FamilySpec& spec, int Nmax) {
    const bool dbl = std::same_as<T, double>;
    const double floor = dbl ? 1e-12 : 1e-30;
    std::vector<CheckResult> out;
    const auto rec = stepline_polynomials<T>(spec, Nmax);
    std::vector<MonicPolynomial<E>> oracle;
    for (int N = 0; N <= Nmax; ++N) oracle.push_back(oracle_polynomial_best(spec, MultiIndex::stepline(2, N)));

    auto eq = start("recurrence-vs-oracle", dbl ? 1e-6 : 1e-10);
    for (int N = 1; N <= Nmax; ++N) record(eq, max_relative_difference(convert<E>(rec[N].poly()), oracle[N].poly(), floor));
    finish(eq);
    out.push_back(eq);

    if (has_explicit(spec)) {
        auto ex = start("explicit-vs-recurrence", dbl ? 1e-6 : 1e-10);
        for (int N = 1; N <= Nmax; ++N)
            record(ex, max_relative_difference(convert<E>(stepline_polynomial<T>(spec, N, Method::Explicit).poly()),
                                               convert<E>(rec[N].poly()), floor));
        finish(ex);
        out.push_back(ex);
    }

    auto orth = start("orthogonality", dbl ? 1e-7 : 1e-10);
    for (int N = 1; N <= Nmax; ++N)
        record(orth, orthogonality_residual<T>(spec, MultiIndex::stepline(2, N), rec[N].poly()));
    finish(orth);
    out.push_back(orth);

    auto rais = start("raising", 1e-12);
    const int weights = is_angelesco(spec) ? 1 : 2;
    for (int N = 0; N + 2 <= Nmax; ++N)
        for (int j = 0; j < weights; ++j) {
            try {
                record(rais, raising_apply(spec, j, MultiIndex::stepline(2, N)).relative);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ParameterOutOfRange) throw;
                ++rais.skipped;
            }
        }
    finish(rais);
    if (rais.cases == 0) {
        rais.passed = true;
        rais.note = "lowered parameters leave the admissible range";
    }
    out.push_back(rais);

    // worst: largest discarded imaginary part; any misplaced zero fails.
    auto zl = start("zero-location", 1e-8);
    int misplaced = 0;
    for (int N = 1; N <= Nmax; ++N) {
        const auto z = zero_location_check(spec, N);
        record(zl, z.report.max_imag_discarded);
        if (!z.passed) ++misplaced;
    }
    finish(zl);
    if (misplaced > 0) {
        zl.passed = false;
        zl.note = std::to_string(misplaced) + " degree(s) with zeros outside the expected intervals";
    }
    out.push_back(zl);
    return out;
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify(const FamilySpec& spec_in, int max_degree, ScalarKind precision) {
    const FamilySpec spec = validate(spec_in);
    if (weight_count(spec) != 2) raise(ErrorCode::UnsupportedMultiplicity, "verify runs on two-weight families");
    if (max_degree < 1 || max_degree > 40) raise(ErrorCode::ParameterOutOfRange, "verify degree must be in [1, 40]");
    VerifyReport rep{spec, max_degree, precision, {}};
    rep.checks = precision == ScalarKind::Double ? run<double>(spec, max_degree) : run<E>(spec, max_degree);
    return rep;
}

std::vector<std::pair<std::string, FamilySpec>> canonical_specs() {
    return {
        {"jp", JacobiPineiro{0.5, {0.25, 0.75}}},
        {"ml1", MultipleLaguerreFirst{{0.3, 0.8}}},
        {"ml2", MultipleLaguerreSecond{0.5, {1.0, 2.0}}},
        {"mh", MultipleHermite{{0.5, -0.5}}},
        {"ja", JacobiAngelesco{-1, 0.5, 0.5, 0.5}},
        {"jl", JacobiLaguerre{-1, 0.5, 0.5}},
        {"lh", LaguerreHermite{0.5}},
    };
}

}  // namespace mopoly
