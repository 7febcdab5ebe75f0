#include "mopoly/spectra.hpp"

#include "linalg.hpp"
#include "mopoly/errors.hpp"
#include "mopoly/recurrence.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace mopoly {

namespace {

constexpr double kImagTolerance = 1e-8;
constexpr double kBoundary = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Infinity norm of the balanced matrix bounds every eigenvalue.
double spectral_bound(const std::vector<double>& balanced, int N) {
    double bound = 0;
    for (int i = 0; i < N; ++i) {
        double row = 0;
        for (int j = 0; j < N; ++j) row += std::abs(balanced[static_cast<std::size_t>(i) * N + j]);
        bound = std::max(bound, row);
    }
    return bound;
}

// The zero of P_n in [a, b], given the values at both ends have opposite signs.
Extended solve_cell(const SteplineRecurrence<Extended>& rec, int n, const Extended& a, const Extended& b,
                    const Extended& fa, const Extended& fb) {
    if (fa == 0) return a;
    if (fb == 0) return b;
    const auto f = [&](const Extended& x) { return evaluate_stepline(rec, n, x); };
    std::uintmax_t iterations = 200;
    const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, boost::math::tools::eps_tolerance<Extended>(150),
                                                     iterations);
    return (r.first + r.second) / 2;
}

Extended bracketed_root(const SteplineRecurrence<Extended>& rec, int n, const Extended& a, const Extended& b) {
    const Extended fa = evaluate_stepline(rec, n, a), fb = evaluate_stepline(rec, n, b);
    if (fa != 0 && fb != 0 && (fa < 0) == (fb < 0))
        raise(ErrorCode::SpuriousComplexPair,
              "P_" + std::to_string(n) + " has no sign change where interlacing puts a zero");
    return solve_cell(rec, n, a, b, fa, fb);
}

// Zeros of P_1, ..., P_N in turn: consecutive stepline polynomials have
// interlacing zeros on both Angelesco and AT systems, so the zeros of
// P_{n-1} and the outer bounds split the line into n brackets with one zero
// of P_n each.
std::vector<double> interlaced_zeros(const SteplineRecurrence<Extended>& rec, int N, double lo, double hi) {
    std::vector<Extended> prev;
    for (int n = 1; n <= N; ++n) {
        std::vector<Extended> edges{Extended(lo)};
        edges.insert(edges.end(), prev.begin(), prev.end());
        edges.push_back(Extended(hi));
        std::vector<Extended> cur;
        for (int i = 0; i < n; ++i) cur.push_back(bracketed_root(rec, n, edges[i], edges[i + 1]));
        prev = std::move(cur);
    }
    std::vector<double> out;
    for (const auto& z : prev) out.push_back(to_double(z));
    return out;
}

// Cells between consecutive eigenvalue midpoints, closed off by the outer
// bounds. If P_N alternates in sign across the cell edges each cell holds
// exactly one zero, which is then solved in extended precision. Empty when
// the eigenvalues do not separate the zeros.
std::vector<double> polish_in_cells(const SteplineRecurrence<Extended>& rec, int N, const std::vector<double>& z,
                                    double lo, double hi) {
    std::vector<Extended> edge{Extended(lo)};
    for (int i = 1; i < N; ++i) edge.push_back((Extended(z[i - 1]) + Extended(z[i])) / 2);
    edge.push_back(Extended(hi));
    std::vector<Extended> f;
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i > 0 && !(edge[i] > edge[i - 1])) return {};
        f.push_back(evaluate_stepline(rec, N, edge[i]));
        if (f.back() == 0 || (i > 0 && (f[i] < 0) == (f[i - 1] < 0))) return {};
    }
    std::vector<double> out;
    for (int i = 0; i < N; ++i) out.push_back(to_double(solve_cell(rec, N, edge[i], edge[i + 1], f[i], f[i + 1])));
    return out;
}

double max_relative_imag(const std::vector<std::complex<double>>& ev) {
    double radius = std::numeric_limits<double>::min();
    for (const auto& z : ev) radius = std::max(radius, std::abs(z));
    double worst = 0;
    for (const auto& z : ev) worst = std::max(worst, std::abs(z.imag()) / radius);
    return worst;
}

}  // namespace

std::vector<SupportInterval> support_intervals(const FamilySpec& spec) {
    switch (kind_of(spec)) {
        case FamilyKind::JP: return {{0, 1}};
        case FamilyKind::ML1:
        case FamilyKind::ML2: return {{0, kInf}};
        case FamilyKind::MH: return {{-kInf, kInf}};
        case FamilyKind::JA: return {{std::get<JacobiAngelesco>(spec).a, 0}, {0, 1}};
        case FamilyKind::JL: return {{std::get<JacobiLaguerre>(spec).a, 0}, {0, kInf}};
        case FamilyKind::LH: return {{-kInf, 0}, {0, kInf}};
    }
    return {};
}

void balance(std::vector<double>& a, int n) {
    const double radix = 2.0;
    bool done = false;
    for (int sweep = 0; !done && sweep < 100; ++sweep) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double c = 0, r = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a[static_cast<std::size_t>(j) * n + i]);
                r += std::abs(a[static_cast<std::size_t>(i) * n + j]);
            }
            if (c == 0 || r == 0) continue;
            const double s = c + r;
            double f = 1, g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] /= f;
                for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j) * n + i] *= f;
            }
        }
    }
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double& max_imag) {
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    max_imag = 0;
    if (n < 1) return {};
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 1; i < n; ++i) m[static_cast<std::size_t>(i) * n + i - 1] = 1;
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + n - 1] = -c[i] / c[n];
    balance(m, n);
    std::vector<std::complex<double>> ev;
    if (!detail::general_eigenvalues(m, n, ev)) raise(ErrorCode::EigenFailure, "companion eigenvalues did not converge");
    double radius = 0;
    for (const auto& z : ev) radius = std::max(radius, std::abs(z));
    std::vector<double> out;
    for (const auto& z : ev) {
        out.push_back(z.real());
        max_imag = std::max(max_imag, std::abs(z.imag()) / std::max(radius, 1e-300));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZeroReport zeros(const FamilySpec& spec_in, int N) {
    const FamilySpec spec = validate(spec_in);
    if (N < 1 || N > 500) raise(ErrorCode::ParameterOutOfRange, "degree must be in [1, 500]");
    // The matrix is non-normal: double eigenvalues can pick up spurious
    // complex pairs, or land real but in the wrong place inside a cluster.
    // Clean eigenvalues are certified and polished cell by cell; otherwise
    // the zeros are recomputed by interlacing in extended precision.
    const auto rec = stepline_recurrence<Extended>(spec, N);
    std::vector<double> m = hessenberg(spec, N).dense();
    balance(m, N);
    const auto iv = support_intervals(spec);
    const double bound = 1.05 * spectral_bound(m, N) + 1;
    const double lo = std::isfinite(iv.front().lo) ? iv.front().lo : -bound;
    const double hi = std::isfinite(iv.back().hi) ? iv.back().hi : bound;

    std::vector<std::complex<double>> ev;
    const bool ok = detail::general_eigenvalues(m, N, ev);
    ZeroReport rep;
    if (ok && max_relative_imag(ev) <= kImagTolerance) {
        rep.max_imag_discarded = max_relative_imag(ev);
        std::vector<double> z;
        for (const auto& v : ev) z.push_back(v.real());
        std::sort(z.begin(), z.end());
        rep.zeros = polish_in_cells(rec, N, z, lo, hi);
    }
    if (rep.zeros.empty()) {
        rep.max_imag_discarded = 0;
        rep.zeros = interlaced_zeros(rec, N, lo, hi);
        rep.bracketed = true;
    }
    std::sort(rep.zeros.begin(), rep.zeros.end());
    for (double z : rep.zeros) rep.residuals.push_back(to_double(abs_value(evaluate_stepline(rec, N, Extended(z)))));

    rep.per_interval_counts.assign(iv.size(), 0);
    std::vector<int> pending;
    for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
        const double z = rep.zeros[i];
        if (iv.size() == 2 && std::abs(z - iv[0].hi) <= kBoundary) {
            pending.push_back(static_cast<int>(i));
            continue;
        }
        bool placed = false;
        for (std::size_t k = 0; k < iv.size() && !placed; ++k)
            if (z > iv[k].lo && z < iv[k].hi) {
                ++rep.per_interval_counts[k];
                placed = true;
            }
        if (!placed) ++rep.outside;
    }
    // Zeros at the shared endpoint go where the stepline counts want them.
    const int want_left = N - N / 2;
    for (int i : pending) {
        const int k = rep.per_interval_counts[0] < want_left ? 0 : 1;
        ++rep.per_interval_counts[static_cast<std::size_t>(k)];
        rep.boundary_zeros.push_back(i);
    }
    return rep;
}

ZeroLocationResult zero_location_check(const FamilySpec& spec, int N) {
    ZeroLocationResult out;
    out.report = zeros(spec, N);
    if (is_angelesco(spec)) out.expected = {N - N / 2, N / 2};
    else out.expected = {N};
    out.passed = out.report.per_interval_counts == out.expected && out.report.outside == 0 &&
                 out.report.max_imag_discarded < kImagTolerance;
    return out;
}

}  // namespace mopoly
