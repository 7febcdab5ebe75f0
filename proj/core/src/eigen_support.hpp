#pragma once

#include "mopoly/scalar.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mopoly::Extended> : GenericNumTraits<mopoly::Extended> {
    using E = mopoly::Extended;
    using Real = E;
    using NonInteger = E;
    using Literal = E;
    using Nested = E;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
    static Real epsilon() { return std::numeric_limits<E>::epsilon(); }
    static Real dummy_precision() { return epsilon() * 1000; }
    static Real highest() { return (std::numeric_limits<E>::max)(); }
    static Real lowest() { return std::numeric_limits<E>::lowest(); }
    static Real infinity() { return std::numeric_limits<E>::infinity(); }
    static Real quiet_NaN() { return std::numeric_limits<E>::quiet_NaN(); }
    static int digits10() { return std::numeric_limits<E>::digits10; }
};

}  // namespace Eigen
