#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitBudget = 3,
  kExitInvariant = 4,
};

/// Runs one `siphon` command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn::cli
