#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlbox::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,  // bad box table, or a failed verification property
  kUsage = 2,               // bad arguments or malformed input file
  kInfeasible = 3,
  kNumerical = 4,
  kScope = 5,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlbox::cli
