#pragma once

#include <optional>
#include <string>
#include <vector>

namespace teachlab {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,        // a checked mathematical property does not hold
  kExitBadInput = 2,      // usage errors, unreadable or malformed files
  kExitInconclusive = 3,  // budget exhausted before an exact answer
};

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string out;  // report for stdout
  std::string err;  // diagnostics for stderr
  std::optional<std::string> csv_path;
};

/// Runs one command line (without the program name).
CommandOutcome dispatch(const std::vector<std::string>& args);

/// Reals with 12 significant digits, always with a decimal point or exponent.
std::string format_real(double x);

}  // namespace teachlab
