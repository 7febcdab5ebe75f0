#include "mopoly/weight.hpp"

#include "mopoly/errors.hpp"

#include <cmath>

namespace mopoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

WeightDescriptor WeightDescriptor::jacobi(double lo, double hi, double e_lo, double e_hi) {
    return WeightDescriptor{lo, hi, {{lo, e_lo}, {hi, e_hi}}, ExponentialKind::None, 0};
}

WeightDescriptor WeightDescriptor::laguerre(double lo, double e_lo, double rate) {
    return WeightDescriptor{lo, kInf, {{lo, e_lo}}, ExponentialKind::Linear, rate};
}

WeightDescriptor WeightDescriptor::hermite(double drift) {
    return WeightDescriptor{-kInf, kInf, {}, ExponentialKind::Gaussian, drift};
}

double WeightDescriptor::exponent_at(double x) const {
    double e = 0;
    for (const auto& f : powers)
        if (f.point == x) e += f.exponent;
    return e;
}

std::vector<WeightDescriptor> family_weights(const FamilySpec& spec) {
    return std::visit(
        overloaded{
            [](const JacobiPineiro& s) {
                std::vector<WeightDescriptor> w;
                for (double a : s.alphas) w.push_back(WeightDescriptor::jacobi(0, 1, a, s.alpha0));
                return w;
            },
            [](const MultipleLaguerreFirst& s) {
                std::vector<WeightDescriptor> w;
                for (double a : s.alphas) w.push_back(WeightDescriptor::laguerre(0, a, 1));
                return w;
            },
            [](const MultipleLaguerreSecond& s) {
                std::vector<WeightDescriptor> w;
                for (double c : s.cs) w.push_back(WeightDescriptor::laguerre(0, s.alpha0, c));
                return w;
            },
            [](const MultipleHermite& s) {
                std::vector<WeightDescriptor> w;
                for (double c : s.cs) w.push_back(WeightDescriptor::hermite(c));
                return w;
            },
            [](const JacobiAngelesco& s) {
                const std::vector<PowerFactor> p{{s.a, s.alpha}, {0, s.beta}, {1, s.gamma}};
                return std::vector<WeightDescriptor>{{s.a, 0, p, ExponentialKind::None, 0},
                                                     {0, 1, p, ExponentialKind::None, 0}};
            },
            [](const JacobiLaguerre& s) {
                const std::vector<PowerFactor> p{{s.a, s.alpha}, {0, s.beta}};
                return std::vector<WeightDescriptor>{{s.a, 0, p, ExponentialKind::Linear, 1},
                                                     {0, kInf, p, ExponentialKind::Linear, 1}};
            },
            [](const LaguerreHermite& s) {
                const std::vector<PowerFactor> p{{0, s.beta}};
                return std::vector<WeightDescriptor>{{-kInf, 0, p, ExponentialKind::Gaussian, 0},
                                                     {0, kInf, p, ExponentialKind::Gaussian, 0}};
            },
        },
        spec);
}

void check_integrable(const WeightDescriptor& w) {
    if (!(w.lo < w.hi)) raise(ErrorCode::NonIntegrable, "empty support " + describe(w));
    for (const auto& f : w.powers) {
        const bool touches = f.point >= w.lo && f.point <= w.hi;
        if (touches && !(f.exponent > -1))
            raise(ErrorCode::NonIntegrable, "exponent <= -1 at " + format_scalar(f.point));
    }
    const bool decays_right = w.exponential == ExponentialKind::Gaussian ||
                              (w.exponential == ExponentialKind::Linear && w.rate > 0);
    const bool decays_left = w.exponential == ExponentialKind::Gaussian ||
                             (w.exponential == ExponentialKind::Linear && w.rate < 0);
    if (!std::isfinite(w.hi) && !decays_right) raise(ErrorCode::NonIntegrable, "no decay at +inf");
    if (!std::isfinite(w.lo) && !decays_left) raise(ErrorCode::NonIntegrable, "no decay at -inf");
}

std::string describe(const WeightDescriptor& w) {
    std::string s = "[" + format_scalar(w.lo) + "," + format_scalar(w.hi) + "]";
    const auto shift = [](double v) {
        if (v == 0) return std::string("x");
        return v < 0 ? "x+" + format_scalar(-v) : "x-" + format_scalar(v);
    };
    const auto linear = [](double v) {
        if (v == 0) return std::string();
        return v < 0 ? "+" + format_scalar(-v) + "x" : "-" + format_scalar(v) + "x";
    };
    for (const auto& f : w.powers) s += " |" + shift(f.point) + "|^" + format_scalar(f.exponent);
    if (w.exponential == ExponentialKind::Linear) s += " exp(" + linear(w.rate) + ")";
    if (w.exponential == ExponentialKind::Gaussian) s += " exp(-x^2" + linear(-w.rate) + ")";
    return s;
}

}  // namespace mopoly
