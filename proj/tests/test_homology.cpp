#include <gtest/gtest.h>

#include <random>

#include "edgeideal/edgeideal.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

std::vector<long long> dims_of(const HomologyProfile& h) { return h.dims; }

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  const std::vector<std::vector<int>> tris{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<VertexSet> gens;
  for (const auto& t : tris) gens.push_back(VertexSet::from_vector(t));
  return SimplicialComplex(6, gens);
}

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<VertexSet> gens;
  for (int v = 0; v < n; ++v) gens.push_back(VertexSet::range(n).without(v));
  return SimplicialComplex(n, gens);
}

// Delta(G|W) on the full ground set of G.
SimplicialComplex restricted(const Graph& g, VertexSet w) {
  std::vector<VertexSet> gens;
  detail::for_each_maximal_independent_set(g, w, [&](VertexSet s) { gens.push_back(s); });
  return SimplicialComplex(g.vertex_count(), gens);
}

}  // namespace

TEST(Complex, DegenerateComplexes) {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::empty_complex(3);
  EXPECT_TRUE(v.is_void());
  EXPECT_FALSE(e.is_void());
  EXPECT_TRUE(e.is_empty_complex());
  EXPECT_EQ(e.dim(), -1);
  EXPECT_TRUE(reduced_homology(v, FieldSpec::gf2()).acyclic());
  EXPECT_EQ(reduced_homology(e, FieldSpec::gf2()).at(-1), 1);
  // Delta of the graph on no vertices is {empty}.
  EXPECT_TRUE(independence_complex(Graph(0)).is_empty_complex());
}

TEST(Complex, RejectsOutOfRangeGenerators) {
  EXPECT_THROW(SimplicialComplex(2, {VertexSet{0, 2}}), std::out_of_range);
  EXPECT_THROW(SimplicialComplex(65, {}), BoundExceeded);
  EXPECT_THROW(link(boundary_of_simplex(3), VertexSet::range(3)), ValidationError);
}

TEST(Homology, Spheres) {
  for (int n = 2; n <= 7; ++n) {
    const auto h = reduced_homology(boundary_of_simplex(n), FieldSpec::rationals());
    for (int i = -1; i <= n - 2; ++i) EXPECT_EQ(h.at(i), i == n - 2 ? 1 : 0) << n << " " << i;
  }
  // Delta(C_5) is a pentagon, a circle.
  EXPECT_EQ(dims_of(reduced_homology(independence_complex(cycle_graph(5)), FieldSpec::gf2())),
            (std::vector<long long>{0, 0, 1}));
}

TEST(Homology, FieldDependenceOnProjectivePlane) {
  const auto rp2 = projective_plane();
  EXPECT_EQ(dims_of(reduced_homology(rp2, FieldSpec::gf2())), (std::vector<long long>{0, 0, 1, 1}));
  EXPECT_EQ(dims_of(reduced_homology(rp2, FieldSpec::gf(3))), (std::vector<long long>{0, 0, 0, 0}));
  EXPECT_EQ(dims_of(reduced_homology(rp2, FieldSpec::rationals())), (std::vector<long long>{0, 0, 0, 0}));
  // Reisner: CM over GF(3) and Q, not over GF(2).
  EXPECT_FALSE(is_cohen_macaulay(rp2, FieldSpec::gf2()));
  EXPECT_TRUE(is_cohen_macaulay(rp2, FieldSpec::rationals()));
  EXPECT_TRUE(is_cohen_macaulay(rp2, FieldSpec::gf(3)));
}

TEST(Homology, AgreesWithDenseOracle) {
  std::mt19937_64 rng(201);
  const std::vector<std::pair<FieldSpec, int>> fields{
      {FieldSpec::gf2(), 2}, {FieldSpec::gf(3), 3}, {FieldSpec::gf(5), 5}, {FieldSpec::rationals(), 0}};
  for (int trial = 0; trial < 150; ++trial) {
    const int ground = 1 + static_cast<int>(rng() % 8);
    const auto facets = oracle::random_facets(rng, ground, 1 + static_cast<int>(rng() % 8), 4);
    const auto delta = oracle::to_complex(ground, facets);
    for (const auto& [field, p] : fields) {
      auto expected = oracle::brute_homology(facets, p);
      auto got = reduced_homology(delta, field).dims;
      EXPECT_EQ(got, expected) << "trial " << trial << " field " << field.name();
    }
  }
}

TEST(Homology, EulerCharacteristicMatchesFaceCounts) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int ground = 1 + static_cast<int>(rng() % 10);
    const auto delta = oracle::to_complex(ground, oracle::random_facets(rng, ground, 1 + static_cast<int>(rng() % 10), 5));
    const auto faces = delta.faces();
    for (const auto& f : {FieldSpec::gf2(), FieldSpec::rationals()})
      EXPECT_EQ(reduced_homology(delta, f).euler_characteristic(), faces.reduced_euler_characteristic());
  }
}

TEST(Homology, ConeIsAcyclic) {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const int ground = 1 + static_cast<int>(rng() % 8);
    const auto delta = oracle::to_complex(ground, oracle::random_facets(rng, ground, 1 + static_cast<int>(rng() % 8), 4));
    const auto point = SimplicialComplex::simplex(1);
    const auto c = join(delta, point);
    EXPECT_TRUE(reduced_homology(c, FieldSpec::gf2()).acyclic());
    EXPECT_TRUE(reduced_homology(c, FieldSpec::rationals()).acyclic());
    EXPECT_TRUE(reduced_homology(c.faces(), FieldSpec::gf(3)).acyclic());
  }
}

TEST(Homology, LinkAndDeletionOfIndependenceComplexes) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const auto delta = independence_complex(g);
    const int x = static_cast<int>(rng() % n);
    // del(x) = Delta(G - x) and lk(x) = Delta(G - N[x]) on the same ground set.
    EXPECT_EQ(deletion(delta, x), restricted(g, g.vertices().without(x)));
    EXPECT_EQ(link(delta, VertexSet{x}),
              restricted(g, g.vertices() - g.closed_neighbors(x)));
  }
}

TEST(CohenMacaulay, MatchesReisnerOracle) {
  std::mt19937_64 rng(205);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const auto facets = oracle::independence_facets(g);
    EXPECT_EQ(is_cohen_macaulay(g, FieldSpec::gf2()), oracle::cohen_macaulay(facets, 2));
    EXPECT_EQ(is_cohen_macaulay(g, FieldSpec::rationals()), oracle::cohen_macaulay(facets, 0));
  }
}

TEST(CohenMacaulay, KnownGraphs) {
  EXPECT_TRUE(is_cohen_macaulay(cycle_graph(5)));
  EXPECT_TRUE(is_cohen_macaulay(cycle_graph(3)));
  EXPECT_FALSE(is_cohen_macaulay(cycle_graph(4)));
  EXPECT_FALSE(is_cohen_macaulay(cycle_graph(6)));
  EXPECT_FALSE(is_cohen_macaulay(cycle_graph(7)));
  EXPECT_TRUE(is_cohen_macaulay(whisker_graph(cycle_graph(6))));
  EXPECT_TRUE(is_cohen_macaulay(path_graph(4)));
}

TEST(Serre, IndexAndLevels) {
  const auto c5 = independence_complex(cycle_graph(5));
  EXPECT_EQ(serre_index(c5), 2);
  EXPECT_TRUE(satisfies_serre(c5, 2));
  // Two disjoint edges: disconnected, pure, so (S_1) only.
  const auto two_edges = SimplicialComplex(4, {VertexSet{0, 1}, VertexSet{2, 3}});
  EXPECT_EQ(serre_index(two_edges), 1);
  EXPECT_FALSE(satisfies_serre(two_edges, 2));
  // Cohen-Macaulay means (S_r) for every r, so the index is the dimension + 1.
  const auto sphere = boundary_of_simplex(5);
  EXPECT_EQ(serre_index(sphere), 4);
  EXPECT_THROW(satisfies_serre(sphere, 0), ValidationError);
  // Non-pure complexes fail (S_2).
  const auto p3 = independence_complex(path_graph(3));
  EXPECT_FALSE(satisfies_serre(p3, 2));
}

TEST(Serre, CohenMacaulayImpliesEveryLevel) {
  std::mt19937_64 rng(206);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto delta = independence_complex(oracle::random_graph(rng, n, 0.4));
    const int d = delta.dim() + 1;
    if (is_cohen_macaulay(delta)) {
      EXPECT_EQ(serre_index(delta), d);
    } else if (d >= 1) {
      EXPECT_LT(serre_index(delta), d);
    }
  }
}

TEST(SequentiallyCm, KnownGraphs) {
  EXPECT_TRUE(is_sequentially_cm(independence_complex(path_graph(3))));
  EXPECT_FALSE(is_sequentially_cm(independence_complex(cycle_graph(4))));
  EXPECT_TRUE(is_sequentially_cm(independence_complex(cycle_graph(5))));
  EXPECT_FALSE(is_sequentially_cm(independence_complex(cycle_graph(7))));
  // Chordal graphs are sequentially CM.
  EXPECT_TRUE(is_sequentially_cm(independence_complex(star_graph(4))));
}

TEST(TwoVertexRoutes, AgreeOnRandomGraphs) {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.45);
    for (int x = 0; x < n; ++x) {
      if (g.is_isolated(x)) continue;
      EXPECT_EQ(is_2cm_at(g, x, FieldSpec::gf2(), TwoVertexRoute::definition),
                is_2cm_at(g, x, FieldSpec::gf2(), TwoVertexRoute::deletion_link));
      EXPECT_EQ(is_2serre_at(g, x, 2, FieldSpec::gf2(), TwoVertexRoute::definition),
                is_2serre_at(g, x, 2, FieldSpec::gf2(), TwoVertexRoute::deletion_link));
    }
  }
}

TEST(Linalg, RanksOfSmallMatrices) {
  // Boundary of a triangle: rank 2 in every characteristic.
  const auto tri = boundary_of_simplex(3).faces();
  const auto d1 = detail::boundary_matrix(tri, 2);
  EXPECT_EQ(detail::rank_gf2(d1), 2);
  EXPECT_EQ(detail::rank_gfp(d1, 3), 2);
  EXPECT_EQ(detail::rank_rational(d1), 2);
}
