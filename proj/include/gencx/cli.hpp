#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gencx::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_parse_error = 1,
  exit_domain_error = 2,
  exit_usage_error = 3,
  exit_check_failed = 4,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gencx::cli
