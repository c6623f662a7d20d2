#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/canonical.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/json_io.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

inline constexpr int kMaxEnumerationOrder = 7;

/// One representative per isomorphism class of graphs on n vertices, each in
/// canonical labeling, sorted by canonical code.
///
/// Classes on k vertices come from classes on k - 1 vertices by adding a
/// vertex with every possible neighborhood.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only = false) {
  if (n < 0) throw ValidationError("enumerate_graphs: negative order");
  require_bound(n <= kMaxEnumerationOrder, "enumerate_graphs: order " + std::to_string(n) + " exceeds bound " +
                                               std::to_string(kMaxEnumerationOrder));
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const Graph& g : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph h = g;
        h.add_vertex(VertexSet(mask));
        CanonicalForm form = canonical_form(h);
        if (!next.count(form.code)) next.emplace(std::move(form.code), relabel(h, form.perm));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  if (!connected_only) return level;
  std::vector<Graph> out;
  for (auto& g : level)
    if (g.is_connected()) out.push_back(std::move(g));
  return out;
}

/// The two six-vertex Cohen-Macaulay graphs on which U(G) and Shed(G) differ.
/// Vertex 1 and vertex 4 (0-based) are the distinguished vertices.
inline Graph u_shed_witness_1() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}
inline Graph u_shed_witness_2() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
}

struct CensusRow {
  Graph graph;  // canonical labeling
  CanonicalCode code;
  bool connected = false;
  CoverReport covers;
  std::vector<std::pair<std::string, bool>> cm_by_field;
  std::vector<std::pair<std::string, bool>> s2_by_field;
  bool vd = false;
  bool pure_vd = false;
  VertexSet u;
  VertexSet shed;
  /// CM or (S_2) differs between the fields tested.
  bool field_dependent = false;
  /// "G1" / "G2" for the two U != Shed witnesses, else empty.
  std::string witness;

  bool cm_all() const {
    for (const auto& [f, v] : cm_by_field)
      if (!v) return false;
    return true;
  }
};

inline CensusRow census_row(const Graph& g, const std::vector<FieldSpec>& fields) {
  CensusRow row;
  const CanonicalForm form = canonical_form(g);
  row.graph = relabel(g, form.perm);
  row.code = form.code;
  row.connected = row.graph.is_connected();
  row.covers = cover_report(row.graph);
  const SimplicialComplex delta = independence_complex(row.graph);
  for (const auto& f : fields) {
    row.cm_by_field.emplace_back(f.name(), is_cohen_macaulay(delta, f));
    row.s2_by_field.emplace_back(f.name(), satisfies_serre(delta, 2, f));
  }
  for (std::size_t k = 1; k < fields.size(); ++k)
    if (row.cm_by_field[k].second != row.cm_by_field[0].second || row.s2_by_field[k].second != row.s2_by_field[0].second)
      row.field_dependent = true;
  const ShedReport shed = shed_report(row.graph);
  row.vd = shed.vd;
  row.pure_vd = shed.pure_vd;
  row.shed = shed.shedding;
  row.u = two_pure_vertices(row.graph);
  static const CanonicalCode w1 = canonical_code(u_shed_witness_1());
  static const CanonicalCode w2 = canonical_code(u_shed_witness_2());
  if (row.code == w1) row.witness = "G1";
  if (row.code == w2) row.witness = "G2";
  return row;
}

struct CensusOptions {
  int threads = 0;
  /// Orders above 6 need an explicit opt-in.
  bool allow_order_seven = false;
};

/// Rows for every well-covered class on 1..max_n vertices, sorted by (n, code).
inline std::vector<CensusRow> census(int max_n, const std::vector<FieldSpec>& fields, const CensusOptions& opts = {}) {
  if (fields.empty()) throw ValidationError("census: at least one field is required");
  require_bound(max_n <= (opts.allow_order_seven ? 7 : 6), "census: max order " + std::to_string(max_n) + " exceeds budget");
  std::vector<Graph> candidates;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& g : enumerate_graphs(n))
      if (is_well_covered(g)) candidates.push_back(std::move(g));
  return parallel_map(candidates.size(), opts.threads, [&](std::size_t i) { return census_row(candidates[i], fields); });
}

inline json to_json(const CensusRow& row) {
  json j;
  j["n"] = row.graph.vertex_count();
  j["edge_count"] = row.graph.edge_count();
  j["code"] = row.code.to_hex();
  j["edges"] = to_json(row.graph)["edges"];
  j["connected"] = row.connected;
  j["well_covered"] = row.covers.well_covered;
  j["alpha"] = row.covers.alpha;
  j["ht"] = row.covers.ht;
  j["bight"] = row.covers.bight;
  json cm = json::object(), s2 = json::object();
  for (const auto& [f, v] : row.cm_by_field) cm[f] = v;
  for (const auto& [f, v] : row.s2_by_field) s2[f] = v;
  j["cm"] = cm;
  j["s2"] = s2;
  j["vd"] = row.vd;
  j["pure_vd"] = row.pure_vd;
  j["U"] = row.u.to_vector();
  j["Shed"] = row.shed.to_vector();
  j["field_dependent"] = row.field_dependent;
  if (!row.witness.empty()) j["witness"] = row.witness;
  return j;
}

/// One JSON object per line.
inline std::string census_jsonl(const std::vector<CensusRow>& rows) {
  std::string out;
  for (const auto& row : rows) out += to_json(row).dump() + "\n";
  return out;
}

inline std::string census_table(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << " n  m  conn  alpha  cm  s2  vd  U               Shed            edges\n";
  for (const auto& row : rows) {
    auto flag = [](bool b) { return b ? "y" : "n"; };
    std::string cm, s2;
    for (const auto& [f, v] : row.cm_by_field) cm += flag(v);
    for (const auto& [f, v] : row.s2_by_field) s2 += flag(v);
    std::string edges;
    for (auto [u, v] : row.graph.edges()) edges += std::to_string(u) + std::to_string(v) + " ";
    char line[256];
    std::snprintf(line, sizeof line, "%2d %2d  %-4s  %5d  %-2s  %-2s  %-2s  %-15s %-15s %s", row.graph.vertex_count(),
                  row.graph.edge_count(), flag(row.connected), row.covers.alpha, cm.c_str(), s2.c_str(), flag(row.vd),
                  row.u.to_string().c_str(), row.shed.to_string().c_str(), edges.c_str());
    std::string text = line;
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text;
    if (!row.witness.empty()) out << "  [" << row.witness << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace edgeideal
