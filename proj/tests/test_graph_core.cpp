#include <gtest/gtest.h>

#include <random>

#include "edgeideal/edgeideal.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

CoronaSpec example_spec() { return {path_graph(2), {{2, 3}, {1, 2}}}; }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.back(), 5);
  EXPECT_EQ(s.without(3).to_vector(), (std::vector<int>{0, 5}));
  EXPECT_TRUE(VertexSet({0, 5}).is_subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(s.to_string(), "{0,3,5}");
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ValidationError);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), BoundExceeded);
}

TEST(Graph, SurgeriesAndComponents) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5);
  const Graph minus = delete_vertex(c5, 0);
  EXPECT_EQ(minus.vertex_count(), 4);
  EXPECT_EQ(minus.edge_count(), 3);
  const Graph far = delete_closed_neighborhood(c5, 0);
  EXPECT_EQ(far.vertex_count(), 2);
  EXPECT_EQ(far.edge_count(), 1);
  const Graph two = disjoint_union(path_graph(2), path_graph(3));
  EXPECT_EQ(two.components().size(), 2u);
  EXPECT_FALSE(two.is_connected());
  EXPECT_EQ(add_pendant(c5, 2).degree(2), 3);
}

TEST(Canonical, ClassCountsMatchKnownSequence) {
  // Isomorphism classes of graphs, all and connected, on n = 1..6 vertices.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), all[n - 1]) << n;
    EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n - 1]) << n;
  }
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(is_isomorphic(g, h));
  }
  EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
}

TEST(Constructions, RootedProductLayout) {
  RootedFamily fam{path_graph(2), {path_graph(3), complete_graph(3)}, {0, 1}, true};
  const Graph g = rooted_product(fam);
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edge_count(), 1 + 2 + 3);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(g.label(0), "x_1");
}

TEST(Constructions, StarConditionChecks) {
  RootedFamily edgeless{Graph(2), {Graph(1), Graph(1)}, {0, 0}, true};
  EXPECT_THROW(rooted_product(edgeless), ValidationError);
  edgeless.star_condition = false;
  EXPECT_EQ(rooted_product(edgeless).edge_count(), 0);
  RootedFamily one_root{Graph(1), {path_graph(2)}, {0}, true};
  EXPECT_THROW(rooted_product(one_root), ValidationError);
  RootedFamily disconnected{path_graph(2), {Graph(2), path_graph(2)}, {0, 0}, true};
  EXPECT_THROW(rooted_product(disconnected), ValidationError);
  RootedFamily bad_root{path_graph(2), {path_graph(2), path_graph(2)}, {0, 2}, false};
  EXPECT_THROW(rooted_product(bad_root), ValidationError);
}

TEST(Constructions, CoronaOfPointIsEdge) {
  const Graph g = corona(Graph(1), std::vector<Graph>{Graph(1)});
  EXPECT_TRUE(is_isomorphic(g, complete_graph(2)));
  const CoronaSpec spec{Graph(1), {{1}}};
  EXPECT_TRUE(is_isomorphic(multi_clique_corona(spec), complete_graph(2)));
  EXPECT_TRUE(is_isomorphic(multi_whisker_transform(spec), complete_graph(2)));
}

TEST(Constructions, ExampleCoronaAndTransform) {
  const CoronaSpec spec = example_spec();
  const Graph g = multi_clique_corona(spec);
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(corona_vertex_count(spec), 10);
  // base edge + per clique K_m: C(m,2) internal edges + m joins.
  EXPECT_EQ(g.edge_count(), 1 + (1 + 2) + (3 + 3) + (0 + 1) + (1 + 2));
  const Graph t = multi_whisker_transform(spec);
  EXPECT_EQ(t.vertex_count(), 14);
  EXPECT_EQ(transform_vertex_count(spec), 14);
  EXPECT_EQ(nontrivial_clique_count(spec), 3);
  const std::vector<std::string> labels{"x_1",       "x_2",       "y_{1_1,1}", "z_{1_1,0}", "z_{1_1,1}",
                                        "y_{1_2,1}", "y_{1_2,2}", "z_{1_2,0}", "z_{1_2,1}", "z_{1_2,2}",
                                        "z_{2_1,0}", "y_{2_2,1}", "z_{2_2,0}", "z_{2_2,1}"};
  EXPECT_EQ(t.labels(), labels);
  // Each whisker z is a leaf.
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.label(v)[0] == 'z') EXPECT_EQ(t.degree(v), 1) << t.label(v);
}

TEST(Constructions, CoronaLabelsFollowCliqueOrder) {
  const Graph g = multi_clique_corona(example_spec());
  EXPECT_EQ(g.label(2), "y_{1_1,1}");
  EXPECT_EQ(g.label(3), "y_{1_1,2}");
  EXPECT_EQ(g.label(4), "y_{1_2,1}");
  EXPECT_EQ(g.label(9), "y_{2_2,2}");
}

TEST(Constructions, SpecValidation) {
  EXPECT_THROW(multi_clique_corona({path_graph(2), {{1}}}), ValidationError);
  EXPECT_THROW(multi_clique_corona({path_graph(2), {{1}, {}}}), ValidationError);
  EXPECT_THROW(multi_clique_corona({path_graph(2), {{1}, {0}}}), ValidationError);
  EXPECT_THROW(multi_whisker_graph(path_graph(2), {1}), ValidationError);
}

TEST(Constructions, WhiskerAndCone) {
  const Graph w = whisker_graph(cycle_graph(4));
  EXPECT_EQ(w.vertex_count(), 8);
  EXPECT_EQ(w.edge_count(), 8);
  const Graph c = cone(path_graph(3));
  EXPECT_EQ(c.vertex_count(), 4);
  EXPECT_EQ(c.degree(3), 3);
}

TEST(Constructions, TransformCountMatchesGraph) {
  std::mt19937_64 rng(11);
  for (const CoronaSpec& spec : random_corona_specs(5, 40, 20, true)) {
    EXPECT_EQ(multi_clique_corona(spec).vertex_count(), corona_vertex_count(spec));
    EXPECT_EQ(multi_whisker_transform(spec).vertex_count(), transform_vertex_count(spec));
  }
}

TEST(JsonIo, GraphAndSpecRoundTrip) {
  const Graph g = multi_clique_corona(example_spec());
  const Graph back = graph_from_json(json::parse(to_json(g).dump()));
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.labels(), g.labels());
  const CoronaSpec spec = corona_spec_from_json(to_json(example_spec()));
  EXPECT_EQ(spec.cliques, example_spec().cliques);
  RootedFamily fam{path_graph(2), {path_graph(3), complete_graph(3)}, {0, 1}, true};
  const RootedFamily fam2 = rooted_family_from_json(to_json(fam));
  EXPECT_EQ(rooted_product(fam2), rooted_product(fam));
}

TEST(JsonIo, MalformedInputs) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 5]]})")), ValidationError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": "x", "edges": []})")), ParseError);
  EXPECT_THROW(corona_spec_from_json(json::parse(R"({"base": {"n": 1, "edges": []}, "cliques": [[0]]})")),
               ValidationError);
}
