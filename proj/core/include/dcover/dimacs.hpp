#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dcover/graph.hpp"

namespace dcover {

/// Parses DIMACS .col text: `c` comment lines, exactly one `p edge <n> <m>`
/// header (`p col` is accepted too), then `e <u> <v>` lines with 1-based
/// endpoints. Repeated edges collapse to one; the header's edge count is not
/// enforced. Throws ParseError.
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::string& path);

/// Canonical form: header, then edges sorted lexicographically, 1-based.
std::string emit_dimacs(const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace dcover
