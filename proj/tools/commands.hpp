#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invred::cli {

enum ExitCode : int {
  kSuccess = 0,
  kTheoremViolation = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invred::cli
