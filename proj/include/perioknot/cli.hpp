#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace perioknot {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitNotPeriodic = 3,
  kExitCheckFailed = 4,
  kExitResource = 5,
  kExitTorus = 6,
};

/// Runs one invocation (`args[0]` is the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perioknot
