#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mopoly {

enum class ErrorCode {
    ParameterOutOfRange,
    DegenerateSystem,
    ScalarKindMismatch,
    UnsupportedMultiplicity,
    UnsupportedFamily,
    UnsupportedWeightShape,
    NonIntegrable,
    SingularMomentMatrix,
    EigenFailure,
    SpuriousComplexPair,
    IllConditionedVandermonde,
    NumericalFailure,
};

// Coarse grouping used for process exit codes.
enum class ErrorCategory { Validation, Numerical, Usage };

ErrorCategory category_of(ErrorCode code);
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace mopoly
