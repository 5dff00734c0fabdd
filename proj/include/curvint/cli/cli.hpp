#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvint::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitEvaluationError = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvint::cli
