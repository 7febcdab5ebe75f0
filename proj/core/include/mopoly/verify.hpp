#pragma once

#include "mopoly/family.hpp"
#include "mopoly/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mopoly {

struct CheckResult {
    std::string name;
    double worst = 0;      // largest observed residual or mismatch
    double threshold = 0;
    bool passed = false;
    int cases = 0;
    int skipped = 0;
    std::string note;
};

struct VerifyReport {
    FamilySpec spec;
    int max_degree = 0;
    ScalarKind precision = ScalarKind::Extended;
    std::vector<CheckResult> checks;

    bool passed() const;
};

// Cross-construction equality, orthogonality residuals, raising identities
// and zero locations for stepline degrees 1..max_degree. `Rational` runs in
// extended precision with exact oracles wherever the moments allow.
VerifyReport verify(const FamilySpec& spec, int max_degree, ScalarKind precision = ScalarKind::Extended);

// One representative parameter set per family, keyed by family token.
std::vector<std::pair<std::string, FamilySpec>> canonical_specs();

}  // namespace mopoly
