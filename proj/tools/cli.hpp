#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieflag::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieflag::cli
