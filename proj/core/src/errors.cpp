#include "mopoly/errors.hpp"

namespace mopoly {

ErrorCategory category_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParameterOutOfRange:
        case ErrorCode::DegenerateSystem:
        case ErrorCode::UnsupportedMultiplicity:
        case ErrorCode::UnsupportedFamily:
        case ErrorCode::NonIntegrable:
            return ErrorCategory::Validation;
        case ErrorCode::ScalarKindMismatch:
            return ErrorCategory::Usage;
        case ErrorCode::UnsupportedWeightShape:
        case ErrorCode::SingularMomentMatrix:
        case ErrorCode::EigenFailure:
        case ErrorCode::SpuriousComplexPair:
        case ErrorCode::IllConditionedVandermonde:
        case ErrorCode::NumericalFailure:
            return ErrorCategory::Numerical;
    }
    return ErrorCategory::Numerical;
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::DegenerateSystem: return "DegenerateSystem";
        case ErrorCode::ScalarKindMismatch: return "ScalarKindMismatch";
        case ErrorCode::UnsupportedMultiplicity: return "UnsupportedMultiplicity";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::UnsupportedWeightShape: return "UnsupportedWeightShape";
        case ErrorCode::NonIntegrable: return "NonIntegrable";
        case ErrorCode::SingularMomentMatrix: return "SingularMomentMatrix";
        case ErrorCode::EigenFailure: return "EigenFailure";
        case ErrorCode::SpuriousComplexPair: return "SpuriousComplexPair";
        case ErrorCode::IllConditionedVandermonde: return "IllConditionedVandermonde";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mopoly
