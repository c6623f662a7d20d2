#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/errors.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex, so n <= 64. Labels are
/// display names only; equality ignores them. Surgeries that reindex vertices
/// carry labels over, and an unlabeled graph gets 1-based labels naming the
/// original vertex, so results can always be traced back.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(check_count(n)) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  VertexSet vertices() const { return VertexSet::range(vertex_count()); }

  /// Open neighborhood N(v).
  VertexSet neighbors(int v) const { return adjacency_.at(check_vertex(v)); }
  /// Closed neighborhood N[v].
  VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
  /// Union of N[v] over v in `set`.
  VertexSet closed_neighbors(VertexSet set) const {
    VertexSet out = set;
    for (int v : set) out |= adjacency_[v];
    return out;
  }
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const { return neighbors(u).contains(check_vertex(v)); }
  bool is_isolated(int v) const { return neighbors(v).empty(); }

  int edge_count() const {
    int total = 0;
    for (const auto& row : adjacency_) total += row.size();
    return total / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_independent(VertexSet set) const {
    for (int v : set)
      if (adjacency_[v].intersects(set)) return false;
    return true;
  }

  bool is_connected() const {
    const int n = vertex_count();
    if (n <= 1) return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= adjacency_[v];
      frontier = next - seen;
      seen |= next;
    }
    return seen == vertices();
  }

  /// Vertex sets of the connected components, ordered by smallest element.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet left = vertices();
    while (!left.empty()) {
      VertexSet comp{left.front()};
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= adjacency_[v];
        frontier = next - comp;
        comp |= next;
      }
      out.push_back(comp);
      left -= comp;
    }
    return out;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("loop edge at vertex " + std::to_string(u));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }

  /// Appends a vertex adjacent to `neighbors`; returns its index.
  int add_vertex(VertexSet neighbors = {}, std::string label = {}) {
    const int v = vertex_count();
    if (v >= VertexSet::kCapacity) throw BoundExceeded("graph exceeds 64 vertices");
    if (!neighbors.is_subset_of(vertices())) throw std::out_of_range("add_vertex: neighbor out of range");
    if (has_labels()) labels_.push_back(label.empty() ? std::to_string(v + 1) : std::move(label));
    adjacency_.push_back(neighbors);
    for (int u : neighbors) adjacency_[u].insert(v);
    return v;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v; 1-based index when the graph is unlabeled.
  std::string label(int v) const {
    check_vertex(v);
    return has_labels() ? labels_[v] : std::to_string(v + 1);
  }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
      throw ValidationError("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  const std::vector<VertexSet>& adjacency() const { return adjacency_; }

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  static std::size_t check_count(int n) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (n > VertexSet::kCapacity) throw BoundExceeded("graph exceeds 64 vertices");
    return static_cast<std::size_t>(n);
  }
  int check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count()) + ")");
    return v;
  }

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

inline Graph new_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

namespace detail {

/// G|_W without labels, for internal recursion.
inline Graph induced_structure(const Graph& g, VertexSet keep) {
  std::vector<int> position(g.vertex_count(), -1);
  int next = 0;
  for (int v : keep) position[v] = next++;
  Graph out(next);
  for (int v : keep)
    for (int u : g.neighbors(v) & keep)
      if (u > v) out.add_edge(position[v], position[u]);
  return out;
}

}  // namespace detail

/// G|_W, reindexed densely in increasing order of W. The i-th vertex of the
/// result is the i-th smallest element of W and carries that vertex's label
/// (its 1-based index when G is unlabeled).
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) throw std::out_of_range("induced_subgraph: vertex out of range");
  Graph out = detail::induced_structure(g, keep);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(keep.size()));
  for (int v : keep) labels.push_back(g.label(v));
  out.set_labels(std::move(labels));
  return out;
}

/// G - v.
inline Graph delete_vertex(const Graph& g, int v) {
  g.neighbors(v);  // range check
  return induced_subgraph(g, g.vertices().without(v));
}

/// G - N[v].
inline Graph delete_closed_neighborhood(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() - g.closed_neighbors(v));
}

/// G - S for an arbitrary vertex set S.
inline Graph delete_vertices(const Graph& g, VertexSet remove) { return induced_subgraph(g, g.vertices() - remove); }

/// G + xy with a fresh vertex y adjacent only to x.
inline Graph add_pendant(const Graph& g, int v) {
  g.neighbors(v);  // range check
  Graph out = g;
  out.add_vertex(VertexSet{v});
  return out;
}

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  const int shift = a.vertex_count();
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  if (a.has_labels() || b.has_labels()) {
    std::vector<std::string> labels;
    for (int v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (int v = 0; v < b.vertex_count(); ++v) labels.push_back(b.has_labels() ? b.label(v) : std::to_string(v + 1 + shift));
    out.set_labels(std::move(labels));
  }
  return out;
}

/// sigma * G: vertex v of G becomes vertex perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw ValidationError("relabel: permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw ValidationError("relabel: not a permutation");
    hit[p] = true;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  if (g.has_labels()) {
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
    out.set_labels(std::move(labels));
  }
  return out;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle_graph needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Graph on n vertices whose edges are the set bits of `mask` over the
/// pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

}  // namespace edgeideal
