#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pfsm {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitApplicable = 0,
  kExitNotApplicable = 2,
  kExitNotInvertible = 3,
  kExitUsage = 64,
  kExitDomain = 65,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfsm
