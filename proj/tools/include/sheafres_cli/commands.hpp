#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sheafres::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,   // validation, parse or domain failure
  kUsage = 2,
  kInternal = 3,  // an engine invariant was breached
};

/// Runs the tool on `args` (without the program name). Documents go to `out`
/// unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheafres::cli
