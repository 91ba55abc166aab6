#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dcover::cli {

struct SuiteOptions {
  int max_vertices = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

struct SuiteResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one invariant suite, printing each counterexample and a summary line.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options, std::ostream& out);

}  // namespace dcover::cli
