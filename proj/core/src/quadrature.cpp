#include "mopoly/quadrature.hpp"

#include "linalg.hpp"
#include "mopoly/errors.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace mopoly {

namespace {

using std::abs;
using std::exp;
using std::log;
using std::pow;
using std::sqrt;

template <Floating T>
T pi() {
    return boost::math::constants::pi<T>();
}

template <Floating T>
double tolerance_for() {
    return std::is_same_v<T, double> ? 1e-14 : 1e-32;
}

bool is_nonneg_integer(double e) {
    return e >= 0 && e == std::floor(e);
}

// Power factors with a non-zero exponent.
std::vector<PowerFactor> active_powers(const WeightDescriptor& w) {
    std::vector<PowerFactor> out;
    for (const auto& f : w.powers)
        if (f.exponent != 0) out.push_back(f);
    return out;
}

bool powers_only_at(const WeightDescriptor& w, double p, double q) {
    for (const auto& f : active_powers(w))
        if (f.point != p && f.point != q) return false;
    return true;
}

enum class Shape { Jacobi, Laguerre, ReflectedLaguerre, Hermite, Other };

Shape shape_of(const WeightDescriptor& w) {
    const bool lo_f = std::isfinite(w.lo), hi_f = std::isfinite(w.hi);
    if (lo_f && hi_f && w.exponential == ExponentialKind::None && powers_only_at(w, w.lo, w.hi)) return Shape::Jacobi;
    if (lo_f && !hi_f && w.exponential == ExponentialKind::Linear && w.rate > 0 && powers_only_at(w, w.lo, w.lo))
        return Shape::Laguerre;
    if (!lo_f && hi_f && w.exponential == ExponentialKind::Linear && w.rate < 0 && powers_only_at(w, w.hi, w.hi))
        return Shape::ReflectedLaguerre;
    if (!lo_f && !hi_f && w.exponential == ExponentialKind::Gaussian && active_powers(w).empty())
        return Shape::Hermite;
    return Shape::Other;
}

// Reference rules on [-1,1] (Jacobi) and [0,inf) with e^{-t} (Laguerre).
template <Floating T>
struct RefRule {
    std::vector<T> x, w;
};

template <Floating T>
RefRule<T> jacobi_reference(int n, const T& b, const T& a) {
    // weight (1-t)^a (1+t)^b on [-1,1]
    std::vector<T> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    const T s = a + b;
    alpha[0] = (b - a) / (s + 2);
    for (int k = 1; k < n; ++k) alpha[k] = (b * b - a * a) / ((2 * k + s) * (2 * k + s + 2));
    for (int k = 1; k <= n; ++k) {
        const T kk(k);
        if (k == 1)
            beta[0] = 4 * (1 + a) * (1 + b) / ((2 + s) * (2 + s) * (3 + s));
        else
            beta[k - 1] = 4 * kk * (kk + a) * (kk + b) * (kk + s) /
                          ((2 * kk + s) * (2 * kk + s) * (2 * kk + s + 1) * (2 * kk + s - 1));
    }
    const T mu0 = pow(T(2), T(s + 1)) * boost::math::beta(T(a + 1), T(b + 1));
    RefRule<T> r;
    golub_welsch(alpha, beta, mu0, r.x, r.w);
    return r;
}

template <Floating T>
RefRule<T> laguerre_reference(int n, const T& e) {
    std::vector<T> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) alpha[k] = 2 * k + e + 1;
    for (int k = 1; k <= n; ++k) beta[k - 1] = T(k) * (T(k) + e);
    RefRule<T> r;
    golub_welsch(alpha, beta, T(boost::math::tgamma(T(e + 1))), r.x, r.w);
    return r;
}

template <Floating T>
RefRule<T> hermite_reference(int n) {
    std::vector<T> alpha(static_cast<std::size_t>(n), T(0)), beta(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) beta[k - 1] = T(k) / 2;
    RefRule<T> r;
    golub_welsch(alpha, beta, sqrt(pi<T>()), r.x, r.w);
    return r;
}

// Reference rules depend only on (kind, n, exponents); they are cached.
template <Floating T>
const RefRule<T>& cached_reference(int kind, int n, double e1, double e2) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, double, double>, RefRule<T>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_tuple(kind, n, e1, e2);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RefRule<T> r = kind == 0 ? jacobi_reference<T>(n, T(e1), T(e2)) : laguerre_reference<T>(n, T(e1));
        it = cache.emplace(key, std::move(r)).first;
    }
    return it->second;
}

// ---------------------------------------------------------------- composite

template <Floating T>
class CompositeBuilder {
public:
    CompositeBuilder(const WeightDescriptor& w, int degree, int extra) : w_(w), degree_(degree), extra_(extra) {}

    void run(std::vector<T>& x, std::vector<T>& wt) {
        std::vector<double> cuts;
        for (const auto& f : active_powers(w_))
            if (f.point > w_.lo && f.point < w_.hi) cuts.push_back(f.point);
        if (!std::isfinite(w_.lo) && !std::isfinite(w_.hi) && cuts.empty()) cuts.push_back(w_.rate / 2);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<double> ends{w_.lo};
        ends.insert(ends.end(), cuts.begin(), cuts.end());
        ends.push_back(w_.hi);
        for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
            const double u = ends[i], v = ends[i + 1];
            if (std::isfinite(u) && std::isfinite(v)) {
                segment(w_, T(u), T(v), true, true, x, wt);
            } else if (std::isfinite(u)) {
                half_line(w_, u, x, wt);
            } else {
                const WeightDescriptor r = reflected(w_);
                std::vector<T> rx, rw;
                half_line(r, -v, rx, rw);
                for (auto& t : rx) t = -t;
                x.insert(x.end(), rx.begin(), rx.end());
                wt.insert(wt.end(), rw.begin(), rw.end());
            }
        }
    }

private:
    static WeightDescriptor reflected(const WeightDescriptor& w) {
        WeightDescriptor r = w;
        r.lo = -w.hi;
        r.hi = -w.lo;
        for (auto& f : r.powers) f.point = -f.point;
        r.rate = -w.rate;
        return r;
    }

    int nodes_per_panel() const { return (degree_ + 2) / 2 + extra_; }

    // Product of the factors not absorbed into the panel rule.
    static T smooth(const WeightDescriptor& w, const T& x, const std::vector<bool>& absorbed) {
        T v(1);
        for (std::size_t i = 0; i < w.powers.size(); ++i) {
            const auto& f = w.powers[i];
            if (f.exponent == 0 || absorbed[i]) continue;
            v *= pow(T(abs(T(x - T(f.point)))), T(f.exponent));
        }
        switch (w.exponential) {
            case ExponentialKind::None: break;
            case ExponentialKind::Linear: v *= exp(T(-T(w.rate) * x)); break;
            case ExponentialKind::Gaussian: v *= exp(T(-x * x + T(w.rate) * x)); break;
        }
        return v;
    }

    double width_cap(const WeightDescriptor& w) const {
        if (w.exponential == ExponentialKind::Linear && w.rate != 0) return 8.0 / std::abs(w.rate);
        if (w.exponential == ExponentialKind::Gaussian) return 1.0;
        return std::numeric_limits<double>::infinity();
    }

    // [u,v] with endpoint exponents absorbed where a factor sits exactly on an
    // end flagged as a true support end.
    void segment(const WeightDescriptor& w, const T& u, const T& v, bool absorb_u, bool absorb_v, std::vector<T>& x,
                 std::vector<T>& wt) const {
        const double ud = to_double(u), vd = to_double(v);
        // Distance to the nearest non-polynomial factor outside [u,v] on each side.
        double du = std::numeric_limits<double>::infinity(), dv = du;
        for (const auto& f : active_powers(w)) {
            if (is_nonneg_integer(f.exponent)) continue;
            if (f.point < ud) du = std::min(du, ud - f.point);
            if (f.point > vd) dv = std::min(dv, f.point - vd);
        }
        const double len = vd - ud;
        std::vector<T> left{u}, right{v};
        if (du < len / 4) {
            for (double step = du; to_double(T(u + T(2 * step - du))) < ud + len / 2; step *= 2)
                left.push_back(u + T(2 * step - du));
        }
        if (dv < len / 4) {
            for (double step = dv; to_double(T(v - T(2 * step - dv))) > vd - len / 2; step *= 2)
                right.push_back(v - T(2 * step - dv));
        }
        std::vector<T> br = left;
        if (right.back() <= br.back()) right.pop_back();
        for (auto it = right.rbegin(); it != right.rend(); ++it)
            if (*it > br.back()) br.push_back(*it);
        if (br.back() != v) br.push_back(v);
        // Width cap for exponential factors.
        const double cap = width_cap(w);
        std::vector<T> fine{br.front()};
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            const double h = to_double(T(br[i + 1] - br[i]));
            const int pieces = std::isfinite(cap) ? std::max(1, static_cast<int>(std::ceil(h / cap))) : 1;
            for (int p = 1; p < pieces; ++p) fine.push_back(br[i] + (br[i + 1] - br[i]) * T(p) / T(pieces));
            fine.push_back(br[i + 1]);
        }
        std::vector<bool> at_u(w.powers.size()), at_v(w.powers.size());
        double e_u = 0, e_v = 0;
        for (std::size_t i = 0; i < w.powers.size(); ++i) {
            if (absorb_u && w.powers[i].point == ud) {
                at_u[i] = true;
                e_u += w.powers[i].exponent;
            }
            if (absorb_v && w.powers[i].point == vd) {
                at_v[i] = true;
                e_v += w.powers[i].exponent;
            }
        }
        const int n = nodes_per_panel();
        for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
            const bool first = i == 0, last = i + 2 == fine.size();
            const double a_exp = first ? e_u : 0.0, b_exp = last ? e_v : 0.0;
            std::vector<bool> absorbed(w.powers.size(), false);
            for (std::size_t k = 0; k < w.powers.size(); ++k)
                absorbed[k] = (first && at_u[k]) || (last && at_v[k]);
            const auto& ref = cached_reference<T>(0, n, a_exp, b_exp);
            const T p = fine[i], q = fine[i + 1];
            const T half = (q - p) / 2;
            const T scale = pow(half, T(a_exp + b_exp + 1));
            for (std::size_t k = 0; k < ref.x.size(); ++k) {
                const T xk = p + half * (ref.x[k] + 1);
                x.push_back(xk);
                wt.push_back(ref.w[k] * scale * smooth(w, xk, absorbed));
            }
        }
    }

    void half_line(const WeightDescriptor& w, double l, std::vector<T>& x, std::vector<T>& wt) const {
        double r;
        T lambda;
        if (w.exponential == ExponentialKind::Linear) {
            r = l + 30.0 / w.rate;
            lambda = T(w.rate);
        } else {
            const double centre = std::max(l, w.rate / 2);
            r = centre + std::sqrt(std::max(degree_, 1) / 2.0) + 8.0;
            lambda = T(2 * r - w.rate);
        }
        segment(w, T(l), T(r), true, false, x, wt);
        const int n = nodes_per_panel();
        const auto& ref = cached_reference<T>(1, n, 0.0, 0.0);
        const std::vector<bool> none(w.powers.size(), false);
        const T rr(r);
        for (std::size_t k = 0; k < ref.x.size(); ++k) {
            const T t = ref.x[k] / lambda;
            const T xk = rr + t;
            // smooth() includes the full exponential; divide out the part the rule carries.
            const T carried = exp(T(-lambda * t));
            x.push_back(xk);
            wt.push_back(ref.w[k] / lambda * smooth(w, xk, none) / carried);
        }
    }

    const WeightDescriptor& w_;
    int degree_;
    int extra_;
};

template <Floating T>
double rule_difference(const std::vector<T>& x1, const std::vector<T>& w1, const std::vector<T>& x2,
                       const std::vector<T>& w2, int degree) {
    double worst = 0;
    for (int k = 0; k <= degree; ++k) {
        T s1(0), s2(0), mag(0);
        for (std::size_t i = 0; i < x1.size(); ++i) s1 += w1[i] * pow(x1[i], k);
        for (std::size_t i = 0; i < x2.size(); ++i) {
            const T term = w2[i] * pow(x2[i], k);
            s2 += term;
            mag += abs(term);
        }
        if (mag > 0) worst = std::max(worst, to_double(T(abs(T(s1 - s2)) / mag)));
    }
    return worst;
}

template <Floating T>
void sort_rule(std::vector<T>& x, std::vector<T>& w) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<T> xs, ws;
    xs.reserve(x.size());
    ws.reserve(x.size());
    for (auto i : idx) {
        xs.push_back(x[i]);
        ws.push_back(w[i]);
    }
    x.swap(xs);
    w.swap(ws);
}

// ---------------------------------------------------------------- moments

template <Floating T>
T jacobi_moment(const WeightDescriptor& w, int k) {
    const T el(w.exponent_at(w.lo)), eh(w.exponent_at(w.hi));
    const T lo(w.lo), hi(w.hi), len = hi - lo;
    if (w.lo == 0) return pow(len, T(el + eh + k + 1)) * boost::math::beta(T(el + k + 1), T(eh + 1));
    if (w.hi == 0) {
        const T v = pow(len, T(el + eh + k + 1)) * boost::math::beta(T(eh + k + 1), T(el + 1));
        return k % 2 ? T(-v) : v;
    }
    T acc(0);
    for (int i = 0; i <= k; ++i)
        acc += binomial(T(k), i) * pow(lo, k - i) * pow(len, T(el + eh + i + 1)) *
               boost::math::beta(T(el + i + 1), T(eh + 1));
    return acc;
}

template <Floating T>
T laguerre_moment(double lo_d, double e_d, double rate_d, int k) {
    const T lo(lo_d), e(e_d), c(rate_d);
    if (lo_d == 0) return boost::math::tgamma(T(e + k + 1)) / pow(c, T(e + k + 1));
    T acc(0);
    for (int i = 0; i <= k; ++i)
        acc += binomial(T(k), i) * pow(lo, k - i) * boost::math::tgamma(T(e + i + 1)) / pow(c, T(e + i + 1));
    return acc * exp(T(-c * lo));
}

bool is_half_gaussian(const WeightDescriptor& w) {
    if (w.exponential != ExponentialKind::Gaussian || w.rate != 0) return false;
    const bool right = w.lo == 0 && !std::isfinite(w.hi);
    const bool left = w.hi == 0 && !std::isfinite(w.lo);
    return (right || left) && powers_only_at(w, 0, 0);
}

// Ratio recurrences m_{k+1} / m_k that stay rational in the parameters.
enum class RatioShape { Beta01, GammaAtZero, Hermite, None };

RatioShape ratio_shape(const WeightDescriptor& w) {
    const Shape s = shape_of(w);
    if (s == Shape::Jacobi && w.lo == 0 && w.hi == 1) return RatioShape::Beta01;
    if (s == Shape::Laguerre && w.lo == 0) return RatioShape::GammaAtZero;
    if (s == Shape::Hermite) return RatioShape::Hermite;
    return RatioShape::None;
}

template <Scalar T>
std::vector<T> ratio_moments(const WeightDescriptor& w, RatioShape shape, int kmax) {
    std::vector<T> m(static_cast<std::size_t>(kmax) + 1);
    m[0] = T(1);
    switch (shape) {
        case RatioShape::Beta01: {
            const T el(w.exponent_at(0)), eh(w.exponent_at(1));
            for (int k = 0; k < kmax; ++k) m[k + 1] = m[k] * (el + T(k + 1)) / (el + eh + T(k + 2));
            break;
        }
        case RatioShape::GammaAtZero: {
            const T e(w.exponent_at(0)), c(w.rate);
            for (int k = 0; k < kmax; ++k) m[k + 1] = m[k] * (e + T(k + 1)) / c;
            break;
        }
        case RatioShape::Hermite: {
            const T c(w.rate);
            if (kmax >= 1) m[1] = c / T(2);
            for (int k = 1; k < kmax; ++k) m[k + 1] = c / T(2) * m[k] + T(k) / T(2) * m[k - 1];
            break;
        }
        case RatioShape::None: raise(ErrorCode::UnsupportedWeightShape, "no rational moment ratios");
    }
    return m;
}

}  // namespace

template <Floating T>
void golub_welsch(const std::vector<T>& alpha, const std::vector<T>& beta, const T& mu0, std::vector<T>& nodes,
                  std::vector<T>& weights) {
    const int n = static_cast<int>(alpha.size());
    std::vector<T> diag(alpha.begin(), alpha.end()), off;
    for (int k = 0; k + 1 < n; ++k) off.push_back(sqrt(beta[k]));
    nodes = detail::tridiagonal_eigenvalues(diag, off);
    if (static_cast<int>(nodes.size()) != n) raise(ErrorCode::EigenFailure, "tridiagonal eigenvalues did not converge");
    weights.assign(static_cast<std::size_t>(n), T(0));
    for (int i = 0; i < n; ++i) {
        T xi = nodes[i];
        // Orthonormal recurrence; a Newton step on p_n polishes the node when beta_n is known.
        for (int pass = 0; pass < 2; ++pass) {
            T p0(1), p1 = (xi - alpha[0]) / sqrt(beta[0]);
            T d0(0), d1 = 1 / sqrt(beta[0]);
            for (int k = 1; k < n; ++k) {
                const T sb = sqrt(beta[k]);
                const T p2 = ((xi - alpha[k]) * p1 - sqrt(beta[k - 1]) * p0) / sb;
                const T d2 = (p1 + (xi - alpha[k]) * d1 - sqrt(beta[k - 1]) * d0) / sb;
                p0 = p1;
                p1 = p2;
                d0 = d1;
                d1 = d2;
            }
            if (static_cast<int>(beta.size()) >= n && d1 != 0 && n > 1) {
                const T step = p1 / d1;
                if (abs(step) < T(1e-6) * (1 + abs(xi))) xi -= step;
            }
        }
        nodes[i] = xi;
        T s(0), q0(1), q1 = n > 1 ? T((xi - alpha[0]) / sqrt(beta[0])) : T(0);
        s += q0 * q0;
        if (n > 1) s += q1 * q1;
        for (int k = 1; k + 1 < n; ++k) {
            const T q2 = ((xi - alpha[k]) * q1 - sqrt(beta[k - 1]) * q0) / sqrt(beta[k]);
            s += q2 * q2;
            q0 = q1;
            q1 = q2;
        }
        weights[i] = mu0 / s;
    }
}

template <Floating T>
QuadratureRule<T> gauss_jacobi_rule(const T& lo, const T& hi, const T& e_lo, const T& e_hi, int n) {
    if (n < 1) raise(ErrorCode::ParameterOutOfRange, "rule needs at least one node");
    const RefRule<T> ref = jacobi_reference<T>(n, e_lo, e_hi);
    const T half = (hi - lo) / 2;
    const T scale = pow(half, T(e_lo + e_hi + 1));
    QuadratureRule<T> r;
    r.weights.resize(1);
    for (int k = 0; k < n; ++k) {
        r.nodes.push_back(lo + half * (ref.x[k] + 1));
        r.weights[0].push_back(ref.w[k] * scale);
    }
    r.exactness = {2 * n - 1};
    return r;
}

bool is_classical(const WeightDescriptor& w) {
    return shape_of(w) != Shape::Other;
}

template <Floating T>
QuadratureRule<T> gauss_rule(const WeightDescriptor& w, int n) {
    check_integrable(w);
    if (n < 1) raise(ErrorCode::ParameterOutOfRange, "rule needs at least one node");
    QuadratureRule<T> r;
    r.targets = {w};
    r.weights.resize(1);
    r.exactness = {2 * n - 1};
    switch (shape_of(w)) {
        case Shape::Jacobi: {
            auto g = gauss_jacobi_rule<T>(T(w.lo), T(w.hi), T(w.exponent_at(w.lo)), T(w.exponent_at(w.hi)), n);
            r.nodes = std::move(g.nodes);
            r.weights[0] = std::move(g.weights[0]);
            break;
        }
        case Shape::Laguerre:
        case Shape::ReflectedLaguerre: {
            const bool refl = shape_of(w) == Shape::ReflectedLaguerre;
            const T c = refl ? T(-w.rate) : T(w.rate);
            const T l = refl ? T(-w.hi) : T(w.lo);
            const T e(w.exponent_at(refl ? w.hi : w.lo));
            const RefRule<T> ref = laguerre_reference<T>(n, e);
            const T scale = exp(T(-c * l)) / pow(c, T(e + 1));
            for (int k = 0; k < n; ++k) {
                const T x = l + ref.x[k] / c;
                r.nodes.push_back(refl ? T(-x) : x);
                r.weights[0].push_back(ref.w[k] * scale);
            }
            if (refl) {
                std::reverse(r.nodes.begin(), r.nodes.end());
                std::reverse(r.weights[0].begin(), r.weights[0].end());
            }
            break;
        }
        case Shape::Hermite: {
            const RefRule<T> ref = hermite_reference<T>(n);
            const T c(w.rate);
            const T scale = exp(T(c * c / 4));
            for (int k = 0; k < n; ++k) {
                r.nodes.push_back(ref.x[k] + c / 2);
                r.weights[0].push_back(ref.w[k] * scale);
            }
            break;
        }
        case Shape::Other:
            raise(ErrorCode::UnsupportedWeightShape, "no classical Gauss rule for " + describe(w));
    }
    return r;
}

template <Floating T>
QuadratureRule<T> composite_rule(const WeightDescriptor& w, int degree) {
    check_integrable(w);
    const double tol = tolerance_for<T>();
    int extra = std::is_same_v<T, double> ? 8 : 20;
    std::vector<T> x0, w0;
    CompositeBuilder<T>(w, degree, extra).run(x0, w0);
    double diff = 0;
    for (int round = 0; round < 5; ++round) {
        extra *= 2;
        std::vector<T> x1, w1;
        CompositeBuilder<T>(w, degree, extra).run(x1, w1);
        diff = rule_difference(x0, w0, x1, w1, degree);
        x0.swap(x1);
        w0.swap(w1);
        if (diff <= tol) break;
    }
    if (diff > tol * 1e6)
        raise(ErrorCode::NumericalFailure, "composite rule did not converge for " + describe(w));
    sort_rule(x0, w0);
    QuadratureRule<T> r;
    r.nodes = std::move(x0);
    r.weights = {std::move(w0)};
    r.exactness = {degree};
    r.targets = {w};
    r.certified_error = diff;
    return r;
}

template <Floating T>
QuadratureRule<T> integration_rule(const WeightDescriptor& w, int degree) {
    if (is_classical(w)) return gauss_rule<T>(w, std::max(1, (degree + 2) / 2 + 2));
    // Composite rules are built for degree buckets so nearby requests share one.
    degree = (std::max(degree, 0) / 16 + 1) * 16;
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, QuadratureRule<T>> cache;
    const auto key = std::make_pair(describe(w), degree);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QuadratureRule<T> r = composite_rule<T>(w, degree);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(r)).first->second;
}

template <Floating T>
std::vector<T> moments(const WeightDescriptor& w, int kmax) {
    check_integrable(w);
    std::vector<T> m(static_cast<std::size_t>(kmax) + 1);
    switch (shape_of(w)) {
        case Shape::Jacobi:
            for (int k = 0; k <= kmax; ++k) m[k] = jacobi_moment<T>(w, k);
            return m;
        case Shape::Laguerre:
            for (int k = 0; k <= kmax; ++k) m[k] = laguerre_moment<T>(w.lo, w.exponent_at(w.lo), w.rate, k);
            return m;
        case Shape::ReflectedLaguerre:
            for (int k = 0; k <= kmax; ++k) {
                const T v = laguerre_moment<T>(-w.hi, w.exponent_at(w.hi), -w.rate, k);
                m[k] = k % 2 ? T(-v) : v;
            }
            return m;
        case Shape::Hermite: {
            const auto r = ratio_moments<T>(w, RatioShape::Hermite, kmax);
            const T m0 = sqrt(pi<T>()) * exp(T(T(w.rate) * T(w.rate) / 4));
            for (int k = 0; k <= kmax; ++k) m[k] = r[k] * m0;
            return m;
        }
        case Shape::Other: break;
    }
    if (is_half_gaussian(w)) {
        const T e(w.exponent_at(0));
        const bool left = w.hi == 0;
        for (int k = 0; k <= kmax; ++k) {
            const T v = boost::math::tgamma(T((e + k + 1) / 2)) / 2;
            m[k] = left && k % 2 ? T(-v) : v;
        }
        return m;
    }
    const auto rule = integration_rule<T>(w, kmax);
    for (int k = 0; k <= kmax; ++k)
        m[k] = rule.integrate([k](const T& x) { return T(pow(x, k)); });
    return m;
}

template <Floating T>
T moment(const WeightDescriptor& w, int k) {
    if (k < 0) raise(ErrorCode::ParameterOutOfRange, "moment order must be nonnegative");
    return moments<T>(w, k)[k];
}

bool has_rational_moments(const WeightDescriptor& w) {
    return ratio_shape(w) != RatioShape::None;
}

bool has_rational_moments(const FamilySpec& spec) {
    for (const auto& w : family_weights(spec))
        if (!has_rational_moments(w)) return false;
    return true;
}

template <Scalar T>
std::vector<T> normalized_moments(const WeightDescriptor& w, int kmax) {
    const RatioShape shape = ratio_shape(w);
    if (shape != RatioShape::None) return ratio_moments<T>(w, shape, kmax);
    if constexpr (std::is_same_v<T, Rational>) {
        raise(ErrorCode::UnsupportedWeightShape, "moments of " + describe(w) + " are not rational");
    } else {
        auto m = moments<T>(w, kmax);
        const T m0 = m[0];
        for (auto& v : m) v /= m0;
        return m;
    }
}

template <Scalar T>
MomentTable<T> MomentTable<T>::build(const FamilySpec& spec, int kmax) {
    MomentTable<T> t{validate(spec), {}};
    for (const auto& w : family_weights(spec)) t.normalized.push_back(normalized_moments<T>(w, kmax));
    return t;
}

template <Scalar T>
MonicPolynomial<T> oracle_polynomial(const MomentTable<T>& table, const MultiIndex& nvec) {
    if (nvec.r() != static_cast<int>(table.normalized.size()))
        raise(ErrorCode::UnsupportedMultiplicity, "multi-index length " + std::to_string(nvec.r()) +
                                                      " does not match " + std::to_string(table.normalized.size()) +
                                                      " weights");
    const int n = nvec.length();
    if (n == 0) return MonicPolynomial<T>();
    int need = 0;
    for (int j = 0; j < nvec.r(); ++j)
        if (nvec[j] > 0) need = std::max(need, n + nvec[j] - 1);
    if (table.kmax() < need) raise(ErrorCode::ParameterOutOfRange, "moment table too short");
    std::vector<T> a(static_cast<std::size_t>(n) * n), b(static_cast<std::size_t>(n));
    int row = 0;
    for (int j = 0; j < nvec.r(); ++j) {
        const auto& m = table.normalized[j];
        for (int k = 0; k < nvec[j]; ++k, ++row) {
            for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(row) * n + i] = m[i + k];
            b[row] = -m[n + k];
        }
    }
    std::vector<T> c;
    if constexpr (std::is_same_v<T, Rational>) {
        if (!detail::solve_exact(a, n, b, c))
            raise(ErrorCode::SingularMomentMatrix, "moment matrix is singular for " + nvec.to_string());
    } else {
        const double limit = std::is_same_v<T, double> ? 1e15 : 1e30;
        auto sol = detail::solve_pivoted_qr(a, n, b);
        if (!sol.full_rank || !(sol.condition < limit))
            raise(ErrorCode::SingularMomentMatrix,
                  "moment matrix condition estimate " + format_scalar(sol.condition) + " for " + nvec.to_string());
        c = std::move(sol.x);
    }
    c.push_back(T(1));
    return MonicPolynomial<T>::from_coeffs(std::move(c));
}

template <Scalar T>
MonicPolynomial<T> oracle_polynomial(const FamilySpec& spec, const MultiIndex& nvec) {
    const FamilySpec s = validate(spec);
    if (nvec.r() != weight_count(s))
        raise(ErrorCode::UnsupportedMultiplicity, "multi-index length does not match the weight count");
    int need = 0;
    for (int j = 0; j < nvec.r(); ++j) need = std::max(need, nvec.length() + nvec[j]);
    return oracle_polynomial(MomentTable<T>::build(s, need), nvec);
}

MonicPolynomial<Extended> oracle_polynomial_best(const FamilySpec& spec, const MultiIndex& nvec) {
    if (has_rational_moments(spec)) return convert<Extended>(oracle_polynomial<Rational>(spec, nvec));
    return oracle_polynomial<Extended>(spec, nvec);
}

template <Floating T>
double orthogonality_residual(const FamilySpec& spec, const MultiIndex& nvec, const Polynomial<T>& p) {
    const auto ws = family_weights(validate(spec));
    if (nvec.r() != static_cast<int>(ws.size()))
        raise(ErrorCode::UnsupportedMultiplicity, "multi-index length does not match the weight count");
    if (p.degree() != nvec.length())
        raise(ErrorCode::ParameterOutOfRange, "polynomial degree must equal |n|");
    double worst = 0;
    for (int j = 0; j < nvec.r(); ++j) {
        if (nvec[j] == 0) continue;
        const int deg = p.degree() + nvec[j] - 1;
        const auto rule = integration_rule<T>(ws[j], deg);
        std::vector<T> pv(rule.nodes.size());
        for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = p(rule.nodes[i]);
        for (int k = 0; k < nvec[j]; ++k) {
            T s(0), mag(0);
            for (std::size_t i = 0; i < pv.size(); ++i) {
                const T term = rule.weights[0][i] * pv[i] * pow(rule.nodes[i], k);
                s += term;
                mag += abs(term);
            }
            worst = std::max(worst, mag > 0 ? to_double(T(abs(s) / mag)) : 0.0);
        }
    }
    return worst;
}

#define MOPOLY_FLOATING(T)                                                                                     \
    template void golub_welsch(const std::vector<T>&, const std::vector<T>&, const T&, std::vector<T>&,        \
                               std::vector<T>&);                                                              \
    template QuadratureRule<T> gauss_jacobi_rule(const T&, const T&, const T&, const T&, int);                 \
    template QuadratureRule<T> gauss_rule(const WeightDescriptor&, int);                                       \
    template QuadratureRule<T> composite_rule(const WeightDescriptor&, int);                                   \
    template QuadratureRule<T> integration_rule(const WeightDescriptor&, int);                                 \
    template T moment(const WeightDescriptor&, int);                                                           \
    template std::vector<T> moments(const WeightDescriptor&, int);                                             \
    template double orthogonality_residual(const FamilySpec&, const MultiIndex&, const Polynomial<T>&);

#define MOPOLY_SCALAR(T)                                                                       \
    template std::vector<T> normalized_moments(const WeightDescriptor&, int);                  \
    template struct MomentTable<T>;                                                            \
    template MonicPolynomial<T> oracle_polynomial(const FamilySpec&, const MultiIndex&);       \
    template MonicPolynomial<T> oracle_polynomial(const MomentTable<T>&, const MultiIndex&);

MOPOLY_FLOATING(double)
MOPOLY_FLOATING(Extended)
MOPOLY_SCALAR(double)
MOPOLY_SCALAR(Extended)
MOPOLY_SCALAR(Rational)

}  // namespace mopoly
