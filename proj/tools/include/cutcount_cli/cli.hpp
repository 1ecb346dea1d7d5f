#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cutcount::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_budget = 2,
  exit_usage = 64,
  exit_internal = 70,
};

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutcount::cli
