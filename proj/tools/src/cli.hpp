#pragma once

#include <ostream>

namespace mopoly::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,
    kVerifyFailed = 2,
    kNumerical = 3,
    kUsage = 64,
};

// Full command line including argv[0]. Payload goes to `out` (or --out),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mopoly::cli
