#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kelc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBudget = 2,
  kExitVerification = 3,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kelc::cli
