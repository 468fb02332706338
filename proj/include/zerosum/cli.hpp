#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zerosum::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kLimit = 3,
};

/// Parses args (without the program name), runs the command, writes the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zerosum::cli
