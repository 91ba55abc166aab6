#pragma once

#include <string>
#include <string_view>

#include "dcover/chromatic.hpp"
#include "dcover/covering.hpp"

namespace dcover {

/// Signed graph: `p edge <n> <m>`, then `e <u> <v> <+|->` lines. The base
/// graph is the set of listed edges. Throws ParseError, including on an edge
/// listed twice.
Signing parse_signing(std::string_view text);
std::string emit_signing(const Signing& phi);

/// Permutation voltage: `p pvg <n> <m> <fold>`, then `e <u> <v> <perm>` with
/// perm the one-line image of 1..fold, comma separated, on the u -> v
/// orientation. An edge may appear once per orientation; the two values must
/// be inverse. Throws ParseError or VoltageError.
PermutationVoltage parse_voltage(std::string_view text);
/// Emits each edge once, on the min -> max orientation.
std::string emit_voltage(const PermutationVoltage& phi);

/// `s <k>` then one `v <vertex> <color>` line per vertex, both 1-based.
Coloring parse_coloring(std::string_view text, int vertex_count);
std::string emit_coloring(const Coloring& c);

/// `f <cover_v> <base_v> <sheet>` per covering vertex, all 1-based.
std::string emit_fiber_map(const CoveringGraph& c);

}  // namespace dcover
