#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "edgeideal/canonical.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/lru_cache.hpp"

namespace edgeideal {

/// Vertex decomposability summary of Delta(G).
struct ShedReport {
  bool vd = false;
  bool pure_vd = false;
  VertexSet shedding;
};

inline constexpr int kDecomposabilityBound = 24;
inline constexpr std::size_t kDefaultMemoEntries = 1 << 18;

namespace detail {

struct VdKey {
  bool canonical = false;
  CanonicalCode code;
  bool operator==(const VdKey&) const = default;
};

struct VdKeyHash {
  std::size_t operator()(const VdKey& k) const { return CanonicalCodeHash{}(k.code) ^ (k.canonical ? 0x51ED27 : 0); }
};

struct FacetKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::size_t h = key.size();
    for (std::uint64_t w : key) h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline LruCache<VdKey, bool, VdKeyHash>& graph_vd_cache() {
  static LruCache<VdKey, bool, VdKeyHash> cache(kDefaultMemoEntries);
  return cache;
}

inline LruCache<std::vector<std::uint64_t>, bool, FacetKeyHash>& complex_vd_cache() {
  static LruCache<std::vector<std::uint64_t>, bool, FacetKeyHash> cache(kDefaultMemoEntries);
  return cache;
}

/// Canonical code up to the canonical-labeling bound, exact adjacency above it.
inline VdKey graph_key(const Graph& h) {
  if (h.vertex_count() <= kDefaultCanonicalBound) return {true, canonical_code(h)};
  std::vector<int> identity(static_cast<std::size_t>(h.vertex_count()));
  std::iota(identity.begin(), identity.end(), 0);
  return {false, code_for(h.adjacency(), identity)};
}

/// Every maximal independent set of G|s - x meets N(x): the facets of the
/// deletion are facets of Delta(G|s).
inline bool shedding_condition(const Graph& g, VertexSet s, int x) {
  const VertexSet nx = g.neighbors(x) & s;
  bool ok = true;
  for_each_maximal_independent_set(g, s.without(x), [&](VertexSet a) {
    if (!a.intersects(nx)) ok = false;
  });
  return ok;
}

inline bool vd_within(const Graph& g, VertexSet s);

inline bool vd_connected(const Graph& g, VertexSet s) {
  const Graph h = induced_structure(g, s);
  if (h.edge_count() == 0) return true;
  const VdKey key = graph_key(h);
  if (auto hit = graph_vd_cache().get(key)) return *hit;
  bool result = false;
  const VertexSet all = h.vertices();
  for (int x : all) {
    if (h.is_isolated(x)) continue;
    if (!shedding_condition(h, all, x)) continue;
    if (vd_within(h, all - h.closed_neighbors(x)) && vd_within(h, all.without(x))) {
      result = true;
      break;
    }
  }
  graph_vd_cache().put(key, result);
  return result;
}

/// Delta(G|s) is vertex decomposable. A join is decomposable exactly when
/// both factors are, so components are handled separately.
inline bool vd_within(const Graph& g, VertexSet s) {
  bool edgeless = true;
  for (int v : s)
    if (g.neighbors(v).intersects(s)) {
      edgeless = false;
      break;
    }
  if (edgeless) return true;
  const Graph h = induced_structure(g, s);
  for (VertexSet comp : h.components())
    if (comp.size() > 1 && !vd_connected(h, comp)) return false;
  return true;
}

inline std::vector<std::uint64_t> facet_key(const SimplicialComplex& delta) {
  // Compress to the used vertices so the key ignores the ambient ground set.
  const VertexSet used = delta.vertex_set();
  std::vector<int> position(64, -1);
  int next = 0;
  for (int v : used) position[v] = next++;
  std::vector<std::uint64_t> key;
  key.reserve(delta.facets().size() + 1);
  key.push_back(static_cast<std::uint64_t>(next));
  for (VertexSet f : delta.facets()) {
    std::uint64_t bits = 0;
    for (int v : f) bits |= std::uint64_t{1} << position[v];
    key.push_back(bits);
  }
  std::sort(key.begin() + 1, key.end());
  return key;
}

/// Every facet of del(x) is a facet of delta.
inline bool complex_shedding_condition(const SimplicialComplex& delta, int x) {
  for (VertexSet f : delta.facets()) {
    if (!f.contains(x)) continue;
    const VertexSet rest = f.without(x);
    const bool covered = std::any_of(delta.facets().begin(), delta.facets().end(),
                                     [&](VertexSet g) { return !g.contains(x) && rest.is_subset_of(g); });
    if (!covered) return false;
  }
  return true;
}

}  // namespace detail

/// Vertex decomposability of an arbitrary complex. VOID, {empty} and simplices
/// are the base cases.
inline bool is_vertex_decomposable(const SimplicialComplex& delta) {
  if (delta.is_void() || delta.is_simplex()) return true;
  require_bound(delta.vertex_set().size() <= kDecomposabilityBound,
                "is_vertex_decomposable: complex exceeds " + std::to_string(kDecomposabilityBound) + " vertices");
  const auto key = detail::facet_key(delta);
  if (auto hit = detail::complex_vd_cache().get(key)) return *hit;
  bool result = false;
  for (int x : delta.vertex_set()) {
    if (!detail::complex_shedding_condition(delta, x)) continue;
    if (is_vertex_decomposable(link(delta, VertexSet{x})) && is_vertex_decomposable(deletion(delta, x))) {
      result = true;
      break;
    }
  }
  detail::complex_vd_cache().put(key, result);
  return result;
}

/// Vertex decomposability of Delta(G) by recursion on G - x and G - N[x].
inline bool is_vertex_decomposable(const Graph& g) {
  require_bound(g.vertex_count() <= kDecomposabilityBound,
                "is_vertex_decomposable: graph exceeds " + std::to_string(kDecomposabilityBound) + " vertices");
  return detail::vd_within(g, g.vertices());
}

/// x is a shedding vertex of Delta(G): the deletion's facets are facets, and
/// both the deletion and the link are vertex decomposable.
inline bool is_shedding_vertex(const Graph& g, int x) {
  const VertexSet all = g.vertices();
  if (!all.contains(x)) throw std::out_of_range("is_shedding_vertex: vertex out of range");
  return detail::shedding_condition(g, all, x) && detail::vd_within(g, all - g.closed_neighbors(x)) &&
         detail::vd_within(g, all.without(x));
}

/// Shed(G); empty when Delta(G) is not vertex decomposable. Every vertex is
/// tested.
inline VertexSet shedding_vertices(const Graph& g) {
  if (!is_vertex_decomposable(g)) return {};
  VertexSet out;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (is_shedding_vertex(g, x)) out.insert(x);
  return out;
}

inline bool is_pure_vertex_decomposable(const Graph& g) { return is_well_covered(g) && is_vertex_decomposable(g); }

inline ShedReport shed_report(const Graph& g) {
  ShedReport r;
  r.vd = is_vertex_decomposable(g);
  r.pure_vd = r.vd && is_well_covered(g);
  r.shedding = r.vd ? shedding_vertices(g) : VertexSet{};
  return r;
}

/// Drops all memoized decomposability results.
inline void clear_decomposability_cache() {
  detail::graph_vd_cache().clear();
  detail::complex_vd_cache().clear();
}

inline void set_decomposability_cache_capacity(std::size_t entries) {
  detail::graph_vd_cache().set_capacity(entries);
  detail::complex_vd_cache().set_capacity(entries);
}

}  // namespace edgeideal
