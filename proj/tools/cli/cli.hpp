#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricnp::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kInvalidParameters = 2,
    kAssumptionFailure = 3,
    kMismatch = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricnp::cli
