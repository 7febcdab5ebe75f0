#include "mopoly/family.hpp"

#include "mopoly/errors.hpp"
#include "mopoly/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace mopoly {

namespace {

constexpr double kIntegerGap = 1e-9;
constexpr double kRateGap = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_exponent(double v, const std::string& name) {
    if (!std::isfinite(v) || !(v > -1.0))
        raise(ErrorCode::ParameterOutOfRange, name + " = " + format_scalar(v) + " must be a finite exponent > -1");
}

void require_finite(double v, const std::string& name) {
    if (!std::isfinite(v)) raise(ErrorCode::ParameterOutOfRange, name + " must be finite");
}

void require_nonempty(const std::vector<double>& v, const std::string& name) {
    if (v.empty()) raise(ErrorCode::ParameterOutOfRange, name + " must list at least one value");
}

void require_negative_a(double a) {
    if (!std::isfinite(a) || !(a < 0.0))
        raise(ErrorCode::ParameterOutOfRange, "a = " + format_scalar(a) + " must be negative");
}

void require_non_integer_gaps(const std::vector<double>& alphas) {
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j) {
            const double d = alphas[i] - alphas[j];
            if (std::abs(d - std::round(d)) <= kIntegerGap)
                raise(ErrorCode::DegenerateSystem, "alpha_" + std::to_string(i + 1) + " - alpha_" +
                                                       std::to_string(j + 1) + " is an integer");
        }
}

void require_distinct(const std::vector<double>& cs, double floor) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const double scale = std::max({std::abs(cs[i]), std::abs(cs[j]), floor});
            if (std::abs(cs[i] - cs[j]) <= kRateGap * scale)
                raise(ErrorCode::DegenerateSystem,
                      "c_" + std::to_string(i + 1) + " and c_" + std::to_string(j + 1) + " coincide");
        }
}

std::string label(const char* base, std::size_t i) {
    return std::string(base) + "_" + std::to_string(i + 1);
}

}  // namespace

FamilyKind kind_of(const FamilySpec& spec) {
    return static_cast<FamilyKind>(spec.index());
}

std::string_view token(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::JP: return "jp";
        case FamilyKind::ML1: return "ml1";
        case FamilyKind::ML2: return "ml2";
        case FamilyKind::MH: return "mh";
        case FamilyKind::JA: return "ja";
        case FamilyKind::JL: return "jl";
        case FamilyKind::LH: return "lh";
    }
    return "?";
}

FamilyKind parse_family(std::string_view text) {
    for (int k = 0; k < 7; ++k)
        if (token(static_cast<FamilyKind>(k)) == text) return static_cast<FamilyKind>(k);
    raise(ErrorCode::UnsupportedFamily, "unknown family '" + std::string(text) + "'");
}

int weight_count(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const JacobiPineiro& s) { return static_cast<int>(s.alphas.size()); },
                          [](const MultipleLaguerreFirst& s) { return static_cast<int>(s.alphas.size()); },
                          [](const MultipleLaguerreSecond& s) { return static_cast<int>(s.cs.size()); },
                          [](const MultipleHermite& s) { return static_cast<int>(s.cs.size()); },
                          [](const auto&) { return 2; },
                      },
                      spec);
}

bool is_angelesco(const FamilySpec& spec) {
    const auto k = kind_of(spec);
    return k == FamilyKind::JA || k == FamilyKind::JL || k == FamilyKind::LH;
}

FamilySpec validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](const JacobiPineiro& s) {
                       require_exponent(s.alpha0, "alpha0");
                       require_nonempty(s.alphas, "alphas");
                       for (std::size_t i = 0; i < s.alphas.size(); ++i) require_exponent(s.alphas[i], label("alpha", i));
                       require_non_integer_gaps(s.alphas);
                   },
                   [](const MultipleLaguerreFirst& s) {
                       require_nonempty(s.alphas, "alphas");
                       for (std::size_t i = 0; i < s.alphas.size(); ++i) require_exponent(s.alphas[i], label("alpha", i));
                       require_non_integer_gaps(s.alphas);
                   },
                   [](const MultipleLaguerreSecond& s) {
                       require_exponent(s.alpha0, "alpha0");
                       require_nonempty(s.cs, "cs");
                       for (std::size_t i = 0; i < s.cs.size(); ++i)
                           if (!std::isfinite(s.cs[i]) || !(s.cs[i] > 0))
                               raise(ErrorCode::ParameterOutOfRange, label("c", i) + " must be positive");
                       require_distinct(s.cs, 0.0);
                   },
                   [](const MultipleHermite& s) {
                       require_nonempty(s.cs, "cs");
                       for (std::size_t i = 0; i < s.cs.size(); ++i) require_finite(s.cs[i], label("c", i));
                       require_distinct(s.cs, 1.0);
                   },
                   [](const JacobiAngelesco& s) {
                       require_negative_a(s.a);
                       require_exponent(s.alpha, "alpha");
                       require_exponent(s.beta, "beta");
                       require_exponent(s.gamma, "gamma");
                   },
                   [](const JacobiLaguerre& s) {
                       require_negative_a(s.a);
                       require_exponent(s.alpha, "alpha");
                       require_exponent(s.beta, "beta");
                   },
                   [](const LaguerreHermite& s) { require_exponent(s.beta, "beta"); },
               },
               spec);
    return spec;
}

FamilySpec swapped_weights(const FamilySpec& spec) {
    if (weight_count(spec) != 2 || is_angelesco(spec))
        raise(ErrorCode::UnsupportedMultiplicity, "weight swap needs an AT family with two weights");
    FamilySpec out = spec;
    std::visit(overloaded{
                   [](JacobiPineiro& s) { std::swap(s.alphas[0], s.alphas[1]); },
                   [](MultipleLaguerreFirst& s) { std::swap(s.alphas[0], s.alphas[1]); },
                   [](MultipleLaguerreSecond& s) { std::swap(s.cs[0], s.cs[1]); },
                   [](MultipleHermite& s) { std::swap(s.cs[0], s.cs[1]); },
                   [](auto&) {},
               },
               out);
    return out;
}

std::vector<NamedParameter> parameters(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const JacobiPineiro& s) {
                              return std::vector<NamedParameter>{{"alpha0", {s.alpha0}}, {"alphas", s.alphas}};
                          },
                          [](const MultipleLaguerreFirst& s) { return std::vector<NamedParameter>{{"alphas", s.alphas}}; },
                          [](const MultipleLaguerreSecond& s) {
                              return std::vector<NamedParameter>{{"alpha0", {s.alpha0}}, {"cs", s.cs}};
                          },
                          [](const MultipleHermite& s) { return std::vector<NamedParameter>{{"cs", s.cs}}; },
                          [](const JacobiAngelesco& s) {
                              return std::vector<NamedParameter>{
                                  {"a", {s.a}}, {"alpha", {s.alpha}}, {"beta", {s.beta}}, {"gamma", {s.gamma}}};
                          },
                          [](const JacobiLaguerre& s) {
                              return std::vector<NamedParameter>{{"a", {s.a}}, {"alpha", {s.alpha}}, {"beta", {s.beta}}};
                          },
                          [](const LaguerreHermite& s) { return std::vector<NamedParameter>{{"beta", {s.beta}}}; },
                      },
                      spec);
}

std::string describe(const FamilySpec& spec) {
    std::string s(token(kind_of(spec)));
    for (const auto& p : parameters(spec)) {
        s += " " + p.name + "=";
        for (std::size_t i = 0; i < p.values.size(); ++i) {
            if (i) s += ",";
            s += format_scalar(p.values[i]);
        }
    }
    return s;
}

}  // namespace mopoly
