#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgeideal/covers.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// All faces of a complex grouped by cardinality: by_size[k] holds the
/// (k-1)-dimensional faces sorted by bit pattern. A void complex has no rows;
/// every other complex has by_size[0] = {empty}.
struct FaceTable {
  std::vector<std::vector<VertexSet>> by_size;

  bool is_void() const { return by_size.empty(); }
  int dim() const { return static_cast<int>(by_size.size()) - 2; }
  long long face_count() const {
    long long total = 0;
    for (const auto& row : by_size) total += static_cast<long long>(row.size());
    return total;
  }
  /// Reduced Euler characteristic sum_i (-1)^i f_i, i from -1.
  long long reduced_euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < by_size.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * static_cast<long long>(by_size[k].size());
    return chi;
  }
};

/// Facet list over the ground set {0, ..., ground-1}.
///
/// Two degenerate values are kept apart: the void complex (no faces at all)
/// and the empty complex {empty set}, whose only face is the empty set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Complex generated by `generators`; non-maximal generators are dropped.
  SimplicialComplex(int ground, std::vector<VertexSet> generators) : ground_(ground) {
    if (ground < 0 || ground > VertexSet::kCapacity) throw BoundExceeded("complex ground set exceeds 64 vertices");
    const VertexSet all = VertexSet::range(ground);
    for (VertexSet g : generators)
      if (!g.is_subset_of(all)) throw std::out_of_range("complex generator outside ground set");
    facets_ = maximalize(std::move(generators));
  }

  static SimplicialComplex void_complex(int ground = 0) { return SimplicialComplex(ground, {}); }
  static SimplicialComplex empty_complex(int ground = 0) { return SimplicialComplex(ground, {VertexSet{}}); }
  static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {VertexSet::range(n)}); }

  int ground() const { return ground_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// The complex {empty set}.
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  bool is_simplex() const { return facets_.size() == 1; }

  /// max facet size - 1; -1 for {empty}; the void complex also reports -1.
  int dim() const {
    int best = 0;
    for (VertexSet f : facets_) best = std::max(best, f.size());
    return best - 1;
  }
  /// Union of the facets.
  VertexSet vertex_set() const {
    VertexSet out;
    for (VertexSet f : facets_) out |= f;
    return out;
  }
  bool contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.is_subset_of(f); });
  }
  bool is_facet(VertexSet face) const { return std::find(facets_.begin(), facets_.end(), face) != facets_.end(); }
  /// All facets share one cardinality.
  bool is_pure() const {
    if (facets_.empty()) return true;
    const int size = facets_[0].size();
    return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.size() == size; });
  }

  FaceTable faces() const {
    FaceTable table;
    if (facets_.empty()) return table;
    std::unordered_set<std::uint64_t> seen;
    table.by_size.resize(static_cast<std::size_t>(dim()) + 2);
    for (VertexSet f : facets_) {
      // Enumerate subsets of f by the standard submask walk.
      const std::uint64_t full = f.bits();
      std::uint64_t sub = full;
      while (true) {
        if (seen.insert(sub).second) table.by_size[VertexSet(sub).size()].push_back(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
    for (auto& row : table.by_size) std::sort(row.begin(), row.end(), BitsLess{});
    return table;
  }

  bool operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && facets_ == other.facets_;
  }

  /// Facets sorted by size then bit pattern, antichain enforced.
  static std::vector<VertexSet> maximalize(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
      return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    // Only strictly larger sets can contain s; they sit in kept[0, larger).
    std::size_t larger = 0;
    for (VertexSet s : sets) {
      while (larger < kept.size() && kept[larger].size() > s.size()) ++larger;
      if (std::none_of(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(larger),
                       [&](VertexSet k) { return s.is_subset_of(k); }))
        kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
  }

 private:
  int ground_ = 0;
  std::vector<VertexSet> facets_;
};

/// Delta(G): facets are the maximal independent sets. The graph on no
/// vertices gives {empty}.
inline SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex(g.vertex_count(), maximal_independent_sets(g));
}

/// Every independent set of G|within, as a face table. Avoids going through
/// the facet list when only faces are needed.
inline FaceTable independent_set_faces(const Graph& g, VertexSet within) {
  FaceTable table;
  table.by_size.push_back({VertexSet{}});
  const auto& adj = g.adjacency();
  // Depth-first extension by vertices larger than the current maximum.
  std::vector<std::pair<VertexSet, VertexSet>> stack{{VertexSet{}, within}};
  while (!stack.empty()) {
    auto [face, allowed] = stack.back();
    stack.pop_back();
    for (int v : allowed) {
      const VertexSet bigger = face.with(v);
      const std::uint64_t above = v == 63 ? 0 : (~std::uint64_t{0} << (v + 1));
      const VertexSet next = (allowed - adj[v]) & VertexSet(above);
      if (table.by_size.size() <= static_cast<std::size_t>(bigger.size())) table.by_size.emplace_back();
      table.by_size[bigger.size()].push_back(bigger);
      if (!next.empty()) stack.emplace_back(bigger, next);
    }
  }
  for (auto& row : table.by_size) std::sort(row.begin(), row.end(), BitsLess{});
  return table;
}

/// link_Delta(F) = { G in Delta : G and F disjoint, G u F in Delta }.
inline SimplicialComplex link(const SimplicialComplex& delta, VertexSet face) {
  if (!delta.contains(face)) throw ValidationError("link: " + face.to_string() + " is not a face");
  std::vector<VertexSet> gens;
  for (VertexSet f : delta.facets())
    if (face.is_subset_of(f)) gens.push_back(f - face);
  return SimplicialComplex(delta.ground(), std::move(gens));
}

/// del_Delta(x): faces avoiding x.
inline SimplicialComplex deletion(const SimplicialComplex& delta, int x) {
  std::vector<VertexSet> gens;
  for (VertexSet f : delta.facets()) gens.push_back(f.without(x));
  return SimplicialComplex(delta.ground(), std::move(gens));
}

/// Delta1 * Delta2 with Delta2's vertices shifted past Delta1's ground set.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int shift = a.ground();
  if (shift + b.ground() > VertexSet::kCapacity) throw BoundExceeded("join exceeds 64 vertices");
  std::vector<VertexSet> gens;
  for (VertexSet f : a.facets())
    for (VertexSet g : b.facets()) gens.push_back(f | VertexSet(shift < 64 ? g.bits() << shift : 0));
  return SimplicialComplex(shift + b.ground(), std::move(gens));
}

/// Complex generated by the i-dimensional faces.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& delta, int i) {
  if (delta.is_void() || i < -1 || i > delta.dim())
    throw ValidationError("pure_skeleton: dimension " + std::to_string(i) + " out of range");
  FaceTable faces = delta.faces();
  return SimplicialComplex(delta.ground(), faces.by_size[static_cast<std::size_t>(i) + 1]);
}

inline bool is_pure(const SimplicialComplex& delta) { return delta.is_pure(); }

}  // namespace edgeideal
