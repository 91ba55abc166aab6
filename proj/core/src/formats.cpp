#include "dcover/formats.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "dcover/errors.hpp"
#include "text_lines.hpp"

namespace dcover {

namespace {

struct Header {
  int n = 0;
  long long m = 0;
  long long fold = 0;
};

Header parse_header(const detail::Line& line, std::string_view kind, std::size_t fields) {
  const auto& t = line.tokens;
  if (t.size() != fields || t[1] != kind) {
    throw ParseError("malformed header, expected 'p " + std::string(kind) + " ...'", line.number);
  }
  Header h;
  const long long n = detail::to_integer(t[2], line.number);
  if (n < 0) throw ParseError("negative vertex count", line.number);
  h.n = static_cast<int>(n);
  h.m = detail::to_integer(t[3], line.number);
  if (h.m < 0) throw ParseError("negative edge count", line.number);
  if (fields > 4) {
    h.fold = detail::to_integer(t[4], line.number);
    if (h.fold < 1) throw ParseError("fold must be positive", line.number);
  }
  return h;
}

std::pair<int, int> parse_endpoints(const detail::Line& line, int n) {
  const int u = detail::to_vertex(line.tokens[1], n, line.number);
  const int v = detail::to_vertex(line.tokens[2], n, line.number);
  if (u == v) throw ParseError("loop at vertex " + std::string(line.tokens[1]), line.number);
  return {u, v};
}

Permutation parse_permutation(std::string_view token, long long fold, std::size_t line) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = token.find(',', pos);
    const std::string_view piece = token.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    images.push_back(static_cast<int>(detail::to_integer(piece, line)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<long long>(images.size()) != fold) {
    throw VoltageError("line " + std::to_string(line) + ": permutation has " + std::to_string(images.size()) +
                       " entries, fold is " + std::to_string(fold));
  }
  return Permutation::from_one_based(images);
}

}  // namespace

Signing parse_signing(std::string_view text) {
  std::optional<Header> header;
  std::vector<std::pair<Edge, Sign>> entries;
  for (const auto& line : detail::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "p") {
      if (header) throw ParseError("duplicate 'p' line", line.number);
      header = parse_header(line, "edge", 4);
    } else if (t[0] == "e") {
      if (!header) throw ParseError("edge before 'p' line", line.number);
      if (t.size() != 4) throw ParseError("malformed edge line, expected 'e <u> <v> <+|->'", line.number);
      const auto [u, v] = parse_endpoints(line, header->n);
      Sign s;
      if (t[3] == "+" || t[3] == "+1") {
        s = Sign::plus;
      } else if (t[3] == "-" || t[3] == "-1") {
        s = Sign::minus;
      } else {
        throw ParseError("sign must be '+' or '-', got '" + std::string(t[3]) + "'", line.number);
      }
      entries.emplace_back(Edge(u, v), s);
    } else {
      throw ParseError("unknown line type '" + std::string(t[0]) + "'", line.number);
    }
  }
  if (!header) throw ParseError("missing 'p edge' header", 0);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Edge> edges;
  std::vector<Sign> signs;
  for (const auto& [e, s] : entries) {
    if (!edges.empty() && edges.back() == e) {
      throw ParseError("edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " listed twice", 0);
    }
    edges.push_back(e);
    signs.push_back(s);
  }
  return Signing(Graph(header->n, std::move(edges)), std::move(signs));
}

std::string emit_signing(const Signing& phi) {
  std::ostringstream out;
  const Graph& g = phi.base();
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out << "e " << g.edge(i).u + 1 << ' ' << g.edge(i).v + 1 << ' ' << (phi.sign(i) == Sign::plus ? '+' : '-') << '\n';
  }
  return out.str();
}

PermutationVoltage parse_voltage(std::string_view text) {
  std::optional<Header> header;
  std::vector<PermutationVoltage::DirectedEntry> entries;
  std::vector<Edge> edges;
  for (const auto& line : detail::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "p") {
      if (header) throw ParseError("duplicate 'p' line", line.number);
      header = parse_header(line, "pvg", 5);
    } else if (t[0] == "e") {
      if (!header) throw ParseError("edge before 'p' line", line.number);
      if (t.size() != 4) throw ParseError("malformed edge line, expected 'e <u> <v> <perm>'", line.number);
      const auto [u, v] = parse_endpoints(line, header->n);
      entries.push_back({u, v, parse_permutation(t[3], header->fold, line.number)});
      edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown line type '" + std::string(t[0]) + "'", line.number);
    }
  }
  if (!header) throw ParseError("missing 'p pvg' header", 0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return PermutationVoltage::from_directed(Graph(header->n, std::move(edges)), static_cast<int>(header->fold), entries);
}

std::string emit_voltage(const PermutationVoltage& phi) {
  std::ostringstream out;
  const Graph& g = phi.base();
  out << "p pvg " << g.vertex_count() << ' ' << g.edge_count() << ' ' << phi.fold() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out << "e " << g.edge(i).u + 1 << ' ' << g.edge(i).v + 1 << ' ' << phi.canonical(i).to_string() << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text, int vertex_count) {
  std::optional<int> k;
  std::vector<int> colors(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& line : detail::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "s") {
      if (k) throw ParseError("duplicate 's' line", line.number);
      if (t.size() != 2) throw ParseError("malformed palette line, expected 's <k>'", line.number);
      const long long value = detail::to_integer(t[1], line.number);
      if (value < 0) throw ParseError("negative palette size", line.number);
      k = static_cast<int>(value);
    } else if (t[0] == "v") {
      if (!k) throw ParseError("color before 's' line", line.number);
      if (t.size() != 3) throw ParseError("malformed color line, expected 'v <vertex> <color>'", line.number);
      const int v = detail::to_vertex(t[1], vertex_count, line.number);
      const long long c = detail::to_integer(t[2], line.number);
      if (c < 1 || c > *k) throw ParseError("color " + std::string(t[2]) + " outside 1.." + std::to_string(*k), line.number);
      if (colors[static_cast<std::size_t>(v)] != 0) throw ParseError("vertex " + std::string(t[1]) + " colored twice", line.number);
      colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
    } else {
      throw ParseError("unknown line type '" + std::string(t[0]) + "'", line.number);
    }
  }
  if (!k) throw ParseError("missing 's' line", 0);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] == 0) throw ParseError("vertex " + std::to_string(v + 1) + " has no color", 0);
  }
  return Coloring(std::move(colors), *k);
}

std::string emit_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "s " << c.palette_size << '\n';
  for (std::size_t v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
  return out.str();
}

std::string emit_fiber_map(const CoveringGraph& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.fiber.size(); ++v) {
    out << "f " << v + 1 << ' ' << c.fiber[v].base_vertex + 1 << ' ' << c.fiber[v].sheet + 1 << '\n';
  }
  return out.str();
}

}  // namespace dcover
