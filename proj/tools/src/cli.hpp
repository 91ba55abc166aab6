#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcover::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_violation = 1,
  exit_usage = 2,
  exit_size_guard = 3,
  exit_mismatch = 4,
  exit_voltage = 5,
};

/// Runs one command line (without the program name) and returns its exit
/// code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcover::cli
