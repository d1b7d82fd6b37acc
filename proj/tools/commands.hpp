#pragma once

#include <ostream>

namespace poncelet::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Parses argv and runs one subcommand (find, locus, verify, render).
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
