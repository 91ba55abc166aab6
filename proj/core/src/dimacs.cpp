#include "dcover/dimacs.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "text_lines.hpp"

namespace dcover {

namespace detail {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

Graph parse_dimacs(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  for (const auto& line : detail::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "p") {
      if (n) throw ParseError("duplicate 'p' line", line.number);
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        throw ParseError("malformed header, expected 'p edge <n> <m>'", line.number);
      }
      const long long count = detail::to_integer(t[2], line.number);
      if (count < 0) throw ParseError("negative vertex count", line.number);
      if (detail::to_integer(t[3], line.number) < 0) throw ParseError("negative edge count", line.number);
      n = static_cast<int>(count);
    } else if (t[0] == "e") {
      if (!n) throw ParseError("edge before 'p' line", line.number);
      if (t.size() != 3) throw ParseError("malformed edge line, expected 'e <u> <v>'", line.number);
      const int u = detail::to_vertex(t[1], *n, line.number);
      const int v = detail::to_vertex(t[2], *n, line.number);
      if (u == v) throw ParseError("loop at vertex " + std::string(t[1]), line.number);
      edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown line type '" + std::string(t[0]) + "'", line.number);
    }
  }
  if (!n) throw ParseError("missing 'p edge' header", 0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(*n, std::move(edges));
}

Graph read_dimacs_file(const std::string& path) { return parse_dimacs(detail::read_file(path)); }

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

}  // namespace dcover
