#include <gtest/gtest.h>

#include <random>

#include "edgeideal/edgeideal.hpp"
#include "oracles.hpp"

using namespace edgeideal;

TEST(Covers, MaximalIndependentSetsMatchFilter) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    std::vector<std::uint64_t> fast;
    for (VertexSet s : maximal_independent_sets(g)) fast.push_back(s.bits());
    std::sort(fast.begin(), fast.end());
    EXPECT_EQ(fast, oracle::brute_mis(g));
  }
}

TEST(Covers, ReportAgreesWithOracle) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    const CoverReport r = cover_report(g);
    const auto [hi, lo] = oracle::mis_sizes(g);
    EXPECT_EQ(r.alpha, hi);
    EXPECT_EQ(r.bight, n - lo);
    EXPECT_EQ(r.ht, n - hi);
    EXPECT_EQ(r.well_covered, hi == lo);
    EXPECT_EQ(independence_number(g), hi);
    // Minimal vertex covers are complements of maximal independent sets.
    EXPECT_EQ(minimal_vertex_covers(g).size(), oracle::brute_mis(g).size());
  }
}

TEST(Covers, KnownValues) {
  EXPECT_TRUE(is_well_covered(cycle_graph(5)));
  EXPECT_FALSE(is_well_covered(path_graph(3)));
  EXPECT_TRUE(is_well_covered(path_graph(4)));
  EXPECT_FALSE(is_well_covered(cycle_graph(6)));
  const CoverReport k4 = cover_report(complete_graph(4));
  EXPECT_EQ(k4.alpha, 1);
  EXPECT_EQ(k4.ht, 3);
  EXPECT_EQ(k4.mis_count, 4);
  EXPECT_EQ(cover_report(Graph(0)).alpha, 0);
}

TEST(Matchings, AgreeWithEdgeSubsetOracle) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    if (g.edge_count() > 18) continue;
    const auto [m, im] = oracle::matching_numbers(g);
    EXPECT_EQ(matching_number(g), m);
    EXPECT_EQ(induced_matching_number(g), im);
  }
}

TEST(Matchings, KnownValues) {
  EXPECT_EQ(matching_number(cycle_graph(5)), 2);
  EXPECT_EQ(induced_matching_number(cycle_graph(5)), 1);
  EXPECT_EQ(induced_matching_number(path_graph(5)), 2);
  EXPECT_EQ(induced_matching_number(complete_graph(6)), 1);
  EXPECT_EQ(matching_number(complete_graph(6)), 3);
  // Worked corona: three non-K_1 cliques, one induced edge each.
  const Graph g = multi_clique_corona({path_graph(2), {{2, 3}, {1, 2}}});
  EXPECT_EQ(induced_matching_number(g), 3);
  EXPECT_THROW(induced_matching_number(Graph(25)), BoundExceeded);
}

TEST(Matchings, CoronaInducedMatchingFormula) {
  for (const CoronaSpec& spec : random_corona_specs(9, 80, 14, false))
    EXPECT_EQ(corona_induced_matching_count(spec), induced_matching_number(multi_clique_corona(spec)));
  const CoronaSpec k1{Graph(1), {{1}}};
  EXPECT_EQ(corona_induced_matching_count(k1), 1);
  EXPECT_EQ(nontrivial_clique_count(k1), 0);
}

TEST(TwoPure, MethodsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    for (int x = 0; x < n; ++x) {
      if (g.is_isolated(x)) {
        EXPECT_FALSE(is_two_pure_at(g, x));
        EXPECT_THROW(is_two_pure_at(g, x, TwoPureMethod::mis_extension), ValidationError);
        continue;
      }
      const bool def = is_two_pure_at(g, x, TwoPureMethod::definition);
      EXPECT_EQ(def, is_two_pure_at(g, x, TwoPureMethod::mis_extension));
      EXPECT_EQ(def, is_two_pure_at(g, x, TwoPureMethod::pendant_cover));
      // Oracle: both G and G - x well covered with the same alpha.
      const Graph minus = delete_vertex(g, x);
      const auto [a, b] = oracle::mis_sizes(g);
      const auto [c, d] = oracle::mis_sizes(minus);
      EXPECT_EQ(def, a == b && c == d && a == c);
    }
  }
}

TEST(TwoPure, Cycle) {
  // C_5 minus a vertex is P_4, which is well covered with the same alpha.
  EXPECT_EQ(two_pure_vertices(cycle_graph(5)), VertexSet::range(5));
  // P_4 minus an end vertex is P_3, not well covered.
  EXPECT_FALSE(is_two_pure_at(path_graph(4), 0));
}
