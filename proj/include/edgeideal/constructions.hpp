#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "edgeideal/covers.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Data of a rooted product: base graph G0 on m vertices, graphs H_1..H_m,
/// and a root x_i in each H_i that is identified with vertex i of G0.
struct RootedFamily {
  Graph base;
  std::vector<Graph> attached;
  std::vector<int> roots;
  /// Validate m >= 2, every H_i connected, result not edgeless.
  bool star_condition = false;
};

/// Multi-clique corona data: base graph on h vertices and, for each base
/// vertex, the sizes of the cliques hung from it.
struct CoronaSpec {
  Graph base;
  std::vector<std::vector<int>> cliques;
};

inline void validate(const CoronaSpec& spec) {
  const int h = spec.base.vertex_count();
  if (static_cast<int>(spec.cliques.size()) != h)
    throw ValidationError("corona spec: need one clique list per base vertex (" + std::to_string(h) + "), got " +
                          std::to_string(spec.cliques.size()));
  for (int i = 0; i < h; ++i) {
    if (spec.cliques[i].empty()) throw ValidationError("corona spec: base vertex " + std::to_string(i) + " has no cliques");
    for (int m : spec.cliques[i])
      if (m < 1) throw ValidationError("corona spec: clique sizes must be positive");
  }
}

inline int corona_vertex_count(const CoronaSpec& spec) {
  int total = spec.base.vertex_count();
  for (const auto& row : spec.cliques) total += std::accumulate(row.begin(), row.end(), 0);
  return total;
}

inline int transform_vertex_count(const CoronaSpec& spec) {
  int total = spec.base.vertex_count();
  for (const auto& row : spec.cliques)
    for (int m : row) total += 2 * m - 1;
  return total;
}

/// Number of attached cliques other than K_1.
inline int nontrivial_clique_count(const CoronaSpec& spec) {
  int count = 0;
  for (const auto& row : spec.cliques)
    for (int m : row) count += m > 1 ? 1 : 0;
  return count;
}

/// Number of non-K_1 cliques plus the independence number of the base
/// restricted to vertices that carry only K_1's.
inline int corona_induced_matching_count(const CoronaSpec& spec) {
  validate(spec);
  VertexSet whiskered;
  for (int i = 0; i < spec.base.vertex_count(); ++i)
    if (std::all_of(spec.cliques[i].begin(), spec.cliques[i].end(), [](int m) { return m == 1; })) whiskered.insert(i);
  return nontrivial_clique_count(spec) + independence_number(induced_subgraph(spec.base, whiskered));
}

namespace detail {

inline std::vector<std::string> base_labels(const Graph& base) {
  std::vector<std::string> labels;
  for (int v = 0; v < base.vertex_count(); ++v) labels.push_back("x_" + std::to_string(v + 1));
  return labels;
}

inline std::string clique_label(char letter, int i, int j, int k) {
  return std::string(1, letter) + "_{" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "," + std::to_string(k) + "}";
}

}  // namespace detail

/// Rooted product G0(H).
///
/// Layout: vertex i < m is x_i (the root of H_i, identified with vertex i of
/// G0); the non-root vertices of H_1, H_2, ... follow in order.
inline Graph rooted_product(const RootedFamily& fam) {
  const int m = fam.base.vertex_count();
  if (static_cast<int>(fam.attached.size()) != m || static_cast<int>(fam.roots.size()) != m)
    throw ValidationError("rooted product: need one attached graph and one root per base vertex");
  int total = m;
  for (int i = 0; i < m; ++i) {
    const int size = fam.attached[i].vertex_count();
    if (fam.roots[i] < 0 || fam.roots[i] >= size)
      throw ValidationError("rooted product: root " + std::to_string(fam.roots[i]) + " out of range for H_" + std::to_string(i + 1));
    total += size - 1;
  }
  if (fam.star_condition) {
    if (m < 2) throw ValidationError("rooted product: condition (*) needs at least two roots");
    for (int i = 0; i < m; ++i)
      if (!fam.attached[i].is_connected()) throw ValidationError("rooted product: H_" + std::to_string(i + 1) + " is not connected");
  }
  if (total > VertexSet::kCapacity) throw BoundExceeded("rooted product exceeds 64 vertices");

  Graph out(total);
  std::vector<std::string> labels = detail::base_labels(fam.base);
  for (auto [u, v] : fam.base.edges()) out.add_edge(u, v);
  int next = m;
  for (int i = 0; i < m; ++i) {
    const Graph& h = fam.attached[i];
    std::vector<int> where(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (v == fam.roots[i]) {
        where[v] = i;
      } else {
        where[v] = next++;
        labels.push_back("h_{" + std::to_string(i + 1) + "," + std::to_string(v + 1) + "}");
      }
    }
    for (auto [u, v] : h.edges()) out.add_edge(where[u], where[v]);
  }
  if (fam.star_condition && out.edge_count() == 0)
    throw ValidationError("rooted product: condition (*) violated, result has no edges");
  out.set_labels(std::move(labels));
  return out;
}

/// Multi-corona: base G plus, for each base vertex x_i, the graphs
/// attached[i][0], attached[i][1], ..., each fully joined to x_i.
///
/// Layout: base vertices first, then the attached graphs in (i, j) order.
inline Graph corona(const Graph& base, const std::vector<std::vector<Graph>>& attached) {
  const int h = base.vertex_count();
  if (static_cast<int>(attached.size()) != h) throw ValidationError("corona: need one attachment list per base vertex");
  int total = h;
  for (const auto& row : attached)
    for (const auto& g : row) {
      if (g.vertex_count() == 0) throw ValidationError("corona: attached graphs must have at least one vertex");
      total += g.vertex_count();
    }
  if (total > VertexSet::kCapacity) throw BoundExceeded("corona exceeds 64 vertices");
  Graph out(total);
  std::vector<std::string> labels = detail::base_labels(base);
  for (auto [u, v] : base.edges()) out.add_edge(u, v);
  int next = h;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < static_cast<int>(attached[i].size()); ++j) {
      const Graph& g = attached[i][j];
      const int offset = next;
      for (int k = 0; k < g.vertex_count(); ++k) {
        out.add_edge(i, offset + k);
        labels.push_back(detail::clique_label('y', i, j, k + 1));
      }
      for (auto [u, v] : g.edges()) out.add_edge(offset + u, offset + v);
      next += g.vertex_count();
    }
  }
  out.set_labels(std::move(labels));
  return out;
}

/// Ordinary corona G o H with exactly one attached graph per base vertex.
inline Graph corona(const Graph& base, const std::vector<Graph>& attached) {
  std::vector<std::vector<Graph>> rows;
  for (const auto& g : attached) rows.push_back({g});
  return corona(base, rows);
}

/// The cone over H with a new apex; the apex is the last vertex.
inline Graph cone(const Graph& h) {
  Graph out = h;
  if (out.has_labels()) out.add_vertex(out.vertices(), "apex");
  else out.add_vertex(out.vertices());
  return out;
}

/// Multi-clique corona G o H with H_i^j = K_{m_{i,j}}.
///
/// Layout: base vertices x_1..x_h, then clique vertices y_{(i,j),k} in
/// (i, j, k) lexicographic order.
inline Graph multi_clique_corona(const CoronaSpec& spec) {
  validate(spec);
  std::vector<std::vector<Graph>> attached(spec.cliques.size());
  for (std::size_t i = 0; i < spec.cliques.size(); ++i)
    for (int m : spec.cliques[i]) attached[i].push_back(complete_graph(m));
  return corona(spec.base, attached);
}

/// Multi-whisker graph: n_i pendant vertices on each base vertex x_i.
inline Graph multi_whisker_graph(const Graph& base, const std::vector<int>& whiskers) {
  CoronaSpec spec{base, {}};
  for (int count : whiskers) spec.cliques.emplace_back(count < 1 ? 0 : count, 1);
  if (static_cast<int>(whiskers.size()) != base.vertex_count()) throw ValidationError("multi-whisker: need one count per base vertex");
  return multi_clique_corona(spec);
}

/// One whisker on every vertex.
inline Graph whisker_graph(const Graph& base) {
  return multi_whisker_graph(base, std::vector<int>(base.vertex_count(), 1));
}

/// The multi-whisker transform G' of a multi-clique corona.
///
/// The last vertex of every clique K_m is dropped. Each surviving clique vertex
/// y_{(i,j),k}, k = 1..m-1, gets a whisker z_{(i,j),k}, and x_i gets one whisker
/// z_{(i,j),0} per clique. Layout: base vertices, then per clique in (i, j)
/// order the surviving y's followed by z_0, z_1, ..., z_{m-1}.
inline Graph multi_whisker_transform(const CoronaSpec& spec) {
  validate(spec);
  const int h = spec.base.vertex_count();
  const int total = transform_vertex_count(spec);
  if (total > VertexSet::kCapacity) throw BoundExceeded("transform exceeds 64 vertices");
  Graph out(total);
  std::vector<std::string> labels = detail::base_labels(spec.base);
  for (auto [u, v] : spec.base.edges()) out.add_edge(u, v);
  int next = h;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < static_cast<int>(spec.cliques[i].size()); ++j) {
      const int m = spec.cliques[i][j];
      const int ys = next;
      for (int k = 0; k < m - 1; ++k) {
        out.add_edge(i, ys + k);
        for (int l = 0; l < k; ++l) out.add_edge(ys + l, ys + k);
        labels.push_back(detail::clique_label('y', i, j, k + 1));
      }
      const int zs = ys + (m - 1);
      out.add_edge(i, zs);
      labels.push_back(detail::clique_label('z', i, j, 0));
      for (int k = 0; k < m - 1; ++k) {
        out.add_edge(ys + k, zs + 1 + k);
        labels.push_back(detail::clique_label('z', i, j, k + 1));
      }
      next = zs + m;
    }
  }
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace edgeideal
