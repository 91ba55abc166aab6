#include <gtest/gtest.h>

#include <random>

#include "dcover/catalog.hpp"
#include "dcover/chromatic.hpp"
#include "dcover/errors.hpp"
#include "dcover/oracle.hpp"
#include "dcover/switching.hpp"
#include "fixtures.hpp"

namespace dcover {
namespace {

using testing::kite;

TEST(ChromaticNumber, SmallFamilies) {
  EXPECT_EQ(chromatic_number(Graph()), 0);
  EXPECT_EQ(chromatic_number(Graph(4)), 1);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(chromatic_number(complete_graph(n)), n);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(8)), 2);
  EXPECT_EQ(chromatic_number(kite()), 3);
  EXPECT_EQ(chromatic_number(petersen_graph()), 3);
  EXPECT_EQ(chromatic_number(complete_multipartite_graph({2, 3, 1, 4})), 4);
}

TEST(ChromaticNumber, WitnessIsProperAndDisconnectedTakesMax) {
  const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
  const ColoringResult r = optimal_coloring(g);
  EXPECT_EQ(r.chromatic_number, 3);
  EXPECT_TRUE(is_proper(g, r.witness));
  EXPECT_EQ(r.witness.palette_size, 3);
}

TEST(ChromaticNumber, SizeGuardCarriesGreedyBound) {
  const Graph big = cycle_graph(80);
  try {
    chromatic_number(big);
    FAIL();
  } catch (const SizeLimitError& e) {
    ASSERT_TRUE(e.greedy_bound().has_value());
    EXPECT_EQ(*e.greedy_bound(), 2);
  }
  EXPECT_EQ(chromatic_number(big, {64, true}), 2);
}

TEST(ChromaticNumber, AgreesWithBruteForce) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(trial % 5) / 4.0, rng());
    const ColoringResult r = optimal_coloring(g);
    ASSERT_EQ(r.chromatic_number, oracle::brute_chromatic(g)) << trial;
    ASSERT_TRUE(is_proper(g, r.witness));
  }
}

TEST(IsKColorable, Examples) {
  EXPECT_FALSE(is_k_colorable(complete_graph(3), 2));
  const auto c = is_k_colorable(complete_graph(3), 3);
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_proper(complete_graph(3), *c));
  const auto p = is_k_colorable(petersen_graph(), 3);
  ASSERT_TRUE(p);
  EXPECT_TRUE(is_proper(petersen_graph(), *p));
  EXPECT_FALSE(is_k_colorable(petersen_graph(), 2));
  EXPECT_TRUE(is_k_colorable(Graph(), 0));
  EXPECT_FALSE(is_k_colorable(Graph(1), 0));
  EXPECT_THROW(is_k_colorable(Graph(1), -1), PreconditionError);
}

TEST(Greedy, BoundsSandwichChi) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(4 + trial % 12, 0.5, rng());
    const int chi = chromatic_number(g);
    const Coloring greedy = greedy_coloring(g);
    EXPECT_TRUE(is_proper(g, greedy));
    EXPECT_GE(greedy.palette_size, chi);
    const auto clique = greedy_clique(g);
    EXPECT_LE(static_cast<int>(clique.size()), chi);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) EXPECT_TRUE(g.adjacent(clique[i], clique[j]));
    }
  }
}

TEST(EnumerateColorings, CountsUpToPermutation) {
  // Stirling-type counts: partitions of 4 labelled vertices into <= 2 classes.
  EXPECT_EQ(enumerate_colorings(Graph(4), 2, 100).colorings.size(), 8U);
  EXPECT_EQ(enumerate_colorings(cycle_graph(6), 2, 100).colorings.size(), 1U);
  EXPECT_EQ(enumerate_colorings(complete_graph(3), 2, 100).colorings.size(), 0U);
  const auto capped = enumerate_colorings(Graph(6), 3, 5);
  EXPECT_EQ(capped.colorings.size(), 5U);
  EXPECT_FALSE(capped.complete);
}

TEST(CheckCompatible, WholeGraphSameColoring) {
  const Graph g = kite();
  const Coloring f = optimal_coloring(g).witness;
  EXPECT_TRUE(check_compatible(SpanningSubgraph::whole(g), f, f).compatible);
}

TEST(CheckCompatible, StarColoringsShownForH2) {
  const Coloring f({1, 1, 2, 1}, 2);
  const Coloring g({2, 2, 1, 2}, 2);
  EXPECT_TRUE(check_compatible(testing::kite_h2(), f, g).compatible);
  EXPECT_NO_THROW(CompatiblePair(testing::kite_h2(), f, g));
}

TEST(CheckCompatible, ColoringsShownForH1) {
  const Coloring f({1, 2, 3, 2}, 3);
  const Coloring g({2, 3, 1, 1}, 3);
  EXPECT_TRUE(check_compatible(testing::kite_h1(), f, g).compatible);
}

TEST(CheckCompatible, NullInK2AndImproperInputs) {
  const SpanningSubgraph null = SpanningSubgraph::null(complete_graph(2));
  const Coloring ones({1, 1}, 1);
  const auto r = check_compatible(null, ones, ones);
  EXPECT_FALSE(r.compatible);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(*r.violation, Edge(0, 1));
  EXPECT_THROW(check_compatible(SpanningSubgraph::whole(complete_graph(2)), ones, ones), ImproperColoringError);
  EXPECT_THROW(CompatiblePair(null, ones, ones), PreconditionError);
}

TEST(ChiRel, KnownValuesOnKite) {
  EXPECT_EQ(chi_rel_direct(SpanningSubgraph::whole(kite())), 3);
  EXPECT_EQ(chi_rel_direct(SpanningSubgraph::null(kite())), 2);
  EXPECT_EQ(chi_rel_direct(testing::kite_h1()), 3);
  EXPECT_EQ(chi_rel_direct(testing::kite_h2()), 2);
  EXPECT_EQ(chi_rel_via_cover(testing::kite_h1()), 3);
  EXPECT_EQ(chi_rel_via_cover(testing::kite_h2()), 2);
}

TEST(ChiRel, WitnessIsACompatiblePair) {
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    const SpanningSubgraph h = SpanningSubgraph::from_bits(kite(), bits);
    const RelativeColoringResult r = chi_rel_direct_with_witness(h);
    EXPECT_TRUE(check_compatible(h, r.f, r.g).compatible);
    EXPECT_EQ(r.f.palette_size, r.value);
    EXPECT_FALSE(find_compatible_pair(h, r.value - 1).has_value());
  }
}

TEST(ChiRel, CliquePlusIsolatedInK5) {
  EXPECT_EQ(chi_rel_via_cover(testing::clique_plus_isolated(5, 3)), 3);
  EXPECT_EQ(chi_rel_direct(testing::clique_plus_isolated(5, 4)), 4);
}

TEST(ChiRel, Conventions) {
  EXPECT_EQ(chi_rel_direct(SpanningSubgraph::null(Graph())), 0);
  EXPECT_EQ(chi_rel_direct(SpanningSubgraph::null(Graph(3))), 1);
  EXPECT_EQ(chi_rel_direct(SpanningSubgraph::null(complete_graph(2))), 2);
  EXPECT_THROW(chi_rel_direct(SpanningSubgraph::null(Graph(40))), SizeLimitError);
}

TEST(ChiRel, SandwichAndCoverAgreementOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(2 + trial % 8, 0.5, rng());
    std::vector<bool> mask(g.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = (rng() & 1U) != 0;
    const SpanningSubgraph h(g, mask);
    const int direct = chi_rel_direct(h);
    EXPECT_EQ(direct, chi_rel_via_cover(h)) << trial;
    EXPECT_LE(chromatic_number(h.as_graph()), direct);
    EXPECT_LE(direct, chromatic_number(g));
  }
}

TEST(ChiRel, SwitchingInvariance) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(2 + trial % 8, 0.5, rng());
    std::vector<bool> mask(g.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = (rng() & 1U) != 0;
    const SpanningSubgraph h(g, mask);
    VertexSubset x(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rng() & 1U) x.insert(v);
    }
    EXPECT_EQ(chi_rel_direct(seidel_switch(h, x)), chi_rel_direct(h)) << trial;
  }
}

TEST(Nfold, IdentityVoltageGivesChi) {
  for (int fold = 1; fold <= 3; ++fold) {
    EXPECT_EQ(chi_rel_nfold(PermutationVoltage::trivial(kite(), fold)).value, 3);
    EXPECT_EQ(chi_rel_nfold(PermutationVoltage::trivial(petersen_graph(), fold)).value, 3);
  }
}

TEST(Nfold, KiteFourFoldTupleIsCompatible) {
  const PermutationVoltage phi = testing::kite_fold4();
  const NfoldResult r = chi_rel_nfold(phi);
  EXPECT_EQ(r.value, 2);
  ASSERT_EQ(r.tuple.size(), 4U);
  EXPECT_TRUE(check_compatible_tuple(phi, r.tuple).valid);
  EXPECT_EQ(chi_rel_nfold_direct(phi), 2);
}

TEST(Nfold, TupleCheckerRejectsBrokenTuple) {
  const PermutationVoltage phi = testing::kite_fold4();
  const std::vector<Coloring> tuple = chi_rel_nfold(phi).tuple;
  const std::vector<Coloring> short_tuple(tuple.begin(), tuple.begin() + 2);
  EXPECT_FALSE(check_compatible_tuple(phi, short_tuple).valid);
  // One coloring on every sheet clashes across the twisted edges.
  const std::vector<Coloring> constant(4, Coloring({1, 1, 2, 1}, 2));
  EXPECT_FALSE(check_compatible_tuple(phi, constant).valid);
  std::vector<Coloring> improper = tuple;
  improper[0] = Coloring({1, 1, 1, 1}, 2);
  EXPECT_FALSE(check_compatible_tuple(phi, improper).valid);
}

TEST(Nfold, TwoFoldMatchesDoubleCoverValue) {
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    const SpanningSubgraph h = SpanningSubgraph::from_bits(kite(), bits);
    const PermutationVoltage phi = PermutationVoltage::from_signing(signing_from_cosupport(h));
    EXPECT_EQ(chi_rel_nfold(phi).value, chi_rel_direct(h));
    EXPECT_EQ(chi_rel_nfold_direct(phi), chi_rel_direct(h));
  }
}

TEST(Nfold, DirectSearchAgreesOnRandomThreeFoldVoltages) {
  std::mt19937_64 rng(31);
  std::vector<Permutation> perms;
  std::vector<int> images{0, 1, 2};
  do {
    perms.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(3 + trial % 4, 0.6, rng());
    std::vector<Permutation> assignment;
    for (std::size_t e = 0; e < g.edge_count(); ++e) assignment.push_back(perms[rng() % perms.size()]);
    const PermutationVoltage phi(g, 3, assignment);
    const NfoldResult r = chi_rel_nfold(phi);
    EXPECT_EQ(r.value, chi_rel_nfold_direct(phi)) << trial;
    EXPECT_TRUE(check_compatible_tuple(phi, r.tuple).valid);
  }
}

TEST(Nfold, OddFoldCoversOfKiteNeedThreeColors) {
  const auto voltages = voltages_up_to_relabeling(kite(), 3);
  int connected = 0;
  for (const auto& phi : voltages) {
    const CoveringGraph c = derive_nfold_cover(phi);
    if (!is_connected(c.graph)) continue;
    ++connected;
    EXPECT_EQ(chromatic_number(c.graph), 3);
  }
  EXPECT_GT(connected, 0);
}

}  // namespace
}  // namespace dcover
