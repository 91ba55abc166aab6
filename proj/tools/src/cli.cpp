#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "dcover/bounds.hpp"
#include "dcover/chromatic.hpp"
#include "dcover/covering.hpp"
#include "dcover/dimacs.hpp"
#include "dcover/errors.hpp"
#include "dcover/formats.hpp"
#include "dcover/switching.hpp"
#include "suites.hpp"

namespace dcover::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << text;
}

SpanningSubgraph read_subgraph(const Graph& g, const std::string& path) {
  const Graph h = read_dimacs_file(path);
  if (h.vertex_count() != g.vertex_count()) {
    throw MismatchError("subgraph has " + std::to_string(h.vertex_count()) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  return SpanningSubgraph::from_edges(g, h.edges());
}

bool is_voltage_file(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string first;
    std::string second;
    tokens >> first >> second;
    if (first == "p") return second == "pvg";
  }
  return false;
}

std::string format_subset(const VertexSubset& x) {
  std::string out = "X = {";
  bool first = true;
  for (Vertex v : x.members()) {
    out += (first ? "" : ", ") + std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::string format_edges(const SpanningSubgraph& h) {
  std::string out = "{";
  bool first = true;
  for (const Edge& e : h.edge_list()) {
    out += (first ? "" : " ") + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
    first = false;
  }
  return out + "}";
}

struct Options {
  std::string graph;
  std::string sub;
  std::string other;
  std::string input;
  std::string out_path;
  std::string fiber_path;
  std::string method = "direct";
  std::string suite;
  bool witness = false;
  bool allow_large = false;
  bool count = false;
  bool exact = false;
  int limit = SolverOptions{}.exact_vertex_limit;
  int max_vertices = 6;
  std::size_t samples = 200;
  std::size_t budget = default_class_budget;
  std::uint64_t seed = 1;
};

int cmd_chi(const Options& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.graph);
  const ColoringResult r = optimal_coloring(g, {o.limit, o.allow_large});
  out << "chi " << r.chromatic_number << '\n';
  if (o.witness) out << emit_coloring(r.witness);
  return exit_ok;
}

int cmd_chi_rel(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_dimacs_file(o.graph);
  const SpanningSubgraph h = read_subgraph(g, o.sub);
  const SolverOptions solver{o.limit, o.allow_large};
  if (o.method == "cover") {
    out << "chi_rel " << chi_rel_via_cover(h, solver) << '\n';
    return exit_ok;
  }
  const RelativeColoringResult direct = chi_rel_direct_with_witness(h, solver);
  if (o.method == "both") {
    const int cover = chi_rel_via_cover(h, solver);
    out << "chi_rel_direct " << direct.value << '\n' << "chi_rel_cover " << cover << '\n';
    if (cover != direct.value) {
      err << "direct and cover values differ\n";
      return exit_violation;
    }
  }
  out << "chi_rel " << direct.value << '\n';
  if (o.witness) out << "c f\n" << emit_coloring(direct.f) << "c g\n" << emit_coloring(direct.g);
  return exit_ok;
}

int cmd_cover(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_text(o.input);
  const CoveringGraph c =
      is_voltage_file(text) ? derive_nfold_cover(parse_voltage(text)) : derive_double_cover(parse_signing(text));
  const CoveringReport report = verify_covering(c);
  if (!report.valid) {
    err << "derived graph is not a covering: " << report.message << '\n';
    return exit_violation;
  }
  const std::string fiber = emit_fiber_map(c);
  if (o.out_path.empty()) {
    out << emit_dimacs(c.graph);
    if (o.fiber_path.empty()) {
      std::istringstream lines(fiber);
      for (std::string line; std::getline(lines, line);) out << "c " << line << '\n';
    }
  } else {
    write_text(o.out_path, emit_dimacs(c.graph));
  }
  const std::string fiber_path = !o.fiber_path.empty() ? o.fiber_path : (o.out_path.empty() ? "" : o.out_path + ".fiber");
  if (!fiber_path.empty()) write_text(fiber_path, fiber);
  return exit_ok;
}

int cmd_switch(const Options& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.graph);
  const SpanningSubgraph h = read_subgraph(g, o.sub);
  const SpanningSubgraph k = read_subgraph(g, o.other);
  const auto witness = are_switching_equivalent(h, k);
  out << (witness ? format_subset(witness->subset()) : "inequivalent") << '\n';
  return exit_ok;
}

int cmd_switch_class(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_dimacs_file(o.graph);
  if (o.count) {
    out << "cover_classes " << count_cover_classes(g) << '\n';
    return exit_ok;
  }
  if (o.sub.empty()) {
    err << "switch-class needs a subgraph file unless --count is given\n";
    return exit_usage;
  }
  const auto members = enumerate_switching_class(read_subgraph(g, o.sub));
  out << "class_size " << members.size() << '\n';
  for (std::size_t i = 0; i < members.size(); ++i) out << "member " << i + 1 << ' ' << format_edges(members[i]) << '\n';
  return exit_ok;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.graph);
  const SpanningSubgraph h = read_subgraph(g, o.sub);
  out << format_bound(bounds_cor24(h, o.budget, o.seed)) << '\n';
  out << format_bound(bounds_thm31(h)) << '\n';
  if (const auto p = induced_partition(h)) {
    out << format_bound(bounds_thm34(g, *p)) << '\n';
  } else {
    out << "c thm34 not applicable: H is not a union of induced subgraphs\n";
  }
  if (o.exact) out << "chi_rel " << chi_rel_direct(h, {o.limit, o.allow_large}) << '\n';
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_suite(o.suite)) {
    err << "unknown suite '" << o.suite << "'; known:";
    for (const auto& name : suite_names()) err << ' ' << name;
    err << '\n';
    return exit_usage;
  }
  const SuiteResult r = run_suite(o.suite, {o.max_vertices, o.seed, o.samples}, out);
  return r.failures == 0 ? exit_ok : exit_violation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic numbers of double covers and compatible colorings"};
  app.name("dcover");
  app.require_subcommand(1);
  Options o;

  auto* chi = app.add_subcommand("chi", "Chromatic number of a DIMACS graph");
  chi->add_option("graph", o.graph, "DIMACS .col file")->required();
  chi->add_flag("--witness", o.witness, "Print an optimal coloring");
  chi->add_flag("--allow-large", o.allow_large, "Lift the exact-search size guard");
  chi->add_option("--limit", o.limit, "Exact-search vertex limit");

  auto* chi_rel = app.add_subcommand("chi-rel", "chi_G(H) for a spanning subgraph H");
  chi_rel->add_option("graph", o.graph, "DIMACS file for G")->required();
  chi_rel->add_option("subgraph", o.sub, "DIMACS file for H")->required();
  chi_rel->add_option("--method", o.method, "direct, cover or both")->check(CLI::IsMember({"direct", "cover", "both"}));
  chi_rel->add_flag("--witness", o.witness, "Print a compatible pair (direct method)");
  chi_rel->add_flag("--allow-large", o.allow_large, "Lift the exact-search size guard");
  chi_rel->add_option("--limit", o.limit, "Exact-search vertex limit");

  auto* cover = app.add_subcommand("cover", "Derived graph of a signing (.sg) or voltage (.pvg)");
  cover->add_option("input", o.input, ".sg or .pvg file")->required();
  cover->add_option("--out", o.out_path, "DIMACS output path; the fiber map goes to <out>.fiber");
  cover->add_option("--fiber", o.fiber_path, "Fiber map output path");

  auto* sw = app.add_subcommand("switch", "Seidel switching witness between H and K");
  sw->add_option("graph", o.graph, "DIMACS file for G")->required();
  sw->add_option("H", o.sub, "DIMACS file for H")->required();
  sw->add_option("K", o.other, "DIMACS file for K")->required();

  auto* sw_class = app.add_subcommand("switch-class", "Members of [H], or the number of classes of G");
  sw_class->add_option("graph", o.graph, "DIMACS file for G")->required();
  sw_class->add_option("subgraph", o.sub, "DIMACS file for H");
  sw_class->add_flag("--count", o.count, "Count switching classes of all spanning subgraphs");

  auto* bounds = app.add_subcommand("bounds", "Bound records for chi_G(H)");
  bounds->add_option("graph", o.graph, "DIMACS file for G")->required();
  bounds->add_option("subgraph", o.sub, "DIMACS file for H")->required();
  bounds->add_option("--budget", o.budget, "Switching-class sample budget");
  bounds->add_option("--seed", o.seed, "Sampling seed");
  bounds->add_flag("--exact", o.exact, "Also print the exact value");
  bounds->add_flag("--allow-large", o.allow_large, "Lift the exact-search size guard");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", o.suite, "thm21, cor23, cor24, thm27, thm31, thm34 or cor36")->required();
  verify->add_option("--max-vertices", o.max_vertices, "Largest instance size");
  verify->add_option("--seed", o.seed, "Seed for sampled suites");
  verify->add_option("--samples", o.samples, "Sample count for sampled suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (chi->parsed()) return cmd_chi(o, out);
    if (chi_rel->parsed()) return cmd_chi_rel(o, out, err);
    if (cover->parsed()) return cmd_cover(o, out, err);
    if (sw->parsed()) return cmd_switch(o, out);
    if (sw_class->parsed()) return cmd_switch_class(o, out, err);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const SizeLimitError& e) {
    err << "size guard: " << e.what();
    if (e.greedy_bound()) err << " (greedy upper bound " << *e.greedy_bound() << ")";
    err << '\n';
    return exit_size_guard;
  } catch (const MismatchError& e) {
    err << "input mismatch: " << e.what() << '\n';
    return exit_mismatch;
  } catch (const VoltageError& e) {
    err << "invalid voltage: " << e.what() << '\n';
    return exit_voltage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace dcover::cli
