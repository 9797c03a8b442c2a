#pragma once

#include <iosfwd>

namespace viaccel {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  kExitInfeasible = 3,
  kExitViolation = 4,
};

// Entry point of the `viaccel` tool with subcommands generate, certify, solve
// and compare. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace viaccel
