#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pinch {

/// Exit codes of the pinchshell tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,      // bad arguments, inadmissible pinch, out-of-range radius
  kExitViolation = 2,  // verify found a body violating a bound
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinch
