#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigrid {

/// Exit codes of the `trigrid` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,  // validation or schema failure
  kExitBudget = 2,   // enumeration budget exhausted (partial output written)
  kExitUsage = 64,
};

/// Runs the command line `args` (without the program name). Documents are
/// read from --input or `in`; results go to --output or `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace trigrid
