#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mopoly {

// x^{alpha_i} (1-x)^{alpha0} on [0,1]
struct JacobiPineiro {
    double alpha0 = 0;
    std::vector<double> alphas;
    friend bool operator==(const JacobiPineiro&, const JacobiPineiro&) = default;
};

// x^{alpha_j} e^{-x} on [0,inf)
struct MultipleLaguerreFirst {
    std::vector<double> alphas;
    friend bool operator==(const MultipleLaguerreFirst&, const MultipleLaguerreFirst&) = default;
};

// x^{alpha0} e^{-c_j x} on [0,inf)
struct MultipleLaguerreSecond {
    double alpha0 = 0;
    std::vector<double> cs;
    friend bool operator==(const MultipleLaguerreSecond&, const MultipleLaguerreSecond&) = default;
};

// e^{-x^2 + c_j x} on the real line
struct MultipleHermite {
    std::vector<double> cs;
    friend bool operator==(const MultipleHermite&, const MultipleHermite&) = default;
};

// |x-a|^alpha |x|^beta |1-x|^gamma on [a,0] and [0,1]
struct JacobiAngelesco {
    double a = -1, alpha = 0, beta = 0, gamma = 0;
    friend bool operator==(const JacobiAngelesco&, const JacobiAngelesco&) = default;
};

// |x-a|^alpha |x|^beta e^{-x} on [a,0] and [0,inf)
struct JacobiLaguerre {
    double a = -1, alpha = 0, beta = 0;
    friend bool operator==(const JacobiLaguerre&, const JacobiLaguerre&) = default;
};

// |x|^beta e^{-x^2} on (-inf,0] and [0,inf)
struct LaguerreHermite {
    double beta = 0;
    friend bool operator==(const LaguerreHermite&, const LaguerreHermite&) = default;
};

using FamilySpec = std::variant<JacobiPineiro, MultipleLaguerreFirst, MultipleLaguerreSecond, MultipleHermite,
                                JacobiAngelesco, JacobiLaguerre, LaguerreHermite>;

enum class FamilyKind { JP, ML1, ML2, MH, JA, JL, LH };

FamilyKind kind_of(const FamilySpec& spec);
std::string_view token(FamilyKind kind);
FamilyKind parse_family(std::string_view token);

// Number of weights r.
int weight_count(const FamilySpec& spec);
// Weights on one common interval (AT systems) versus disjoint intervals.
bool is_angelesco(const FamilySpec& spec);

// Throws ParameterOutOfRange / DegenerateSystem; returns its argument unchanged.
FamilySpec validate(const FamilySpec& spec);

// Same family with the two weights exchanged (AT families with r = 2 only).
// P_{m,n} of the swapped spec equals P_{n,m} of the original.
FamilySpec swapped_weights(const FamilySpec& spec);

// Parameters described as name/value pairs in a fixed order.
struct NamedParameter {
    std::string name;
    std::vector<double> values;
};
std::vector<NamedParameter> parameters(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

}  // namespace mopoly
