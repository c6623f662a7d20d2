#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/constructions.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"

namespace edgeideal {

using json = nlohmann::json;

namespace detail {

inline const json& field_of(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

inline int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(int_of(e, what));
  return out;
}

}  // namespace detail

inline json to_json(VertexSet s) { return s.to_vector(); }

inline json to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

inline Graph graph_from_json(const json& j) {
  const int n = detail::int_of(detail::field_of(j, "n", "graph"), "graph.n");
  if (n < 0) throw ValidationError("graph: negative vertex count");
  if (n > VertexSet::kCapacity) throw BoundExceeded("graph exceeds 64 vertices");
  Graph g(n);
  const json& edges = detail::field_of(j, "edges", "graph");
  if (!edges.is_array()) throw ParseError("graph.edges: expected an array");
  for (const auto& e : edges) {
    const auto pair = detail::int_list(e, "graph.edges");
    if (pair.size() != 2) throw ParseError("graph.edges: each edge needs two endpoints");
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
      throw ValidationError("graph.edges: endpoint out of range");
    g.add_edge(pair[0], pair[1]);
  }
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw ParseError("graph.labels: expected an array");
    std::vector<std::string> labels;
    for (const auto& l : *it) {
      if (!l.is_string()) throw ParseError("graph.labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
    g.set_labels(std::move(labels));
  }
  return g;
}

inline json to_json(const CoronaSpec& spec) { return {{"base", to_json(spec.base)}, {"cliques", spec.cliques}}; }

inline CoronaSpec corona_spec_from_json(const json& j) {
  CoronaSpec spec;
  spec.base = graph_from_json(detail::field_of(j, "base", "corona spec"));
  const json& cliques = detail::field_of(j, "cliques", "corona spec");
  if (!cliques.is_array()) throw ParseError("corona spec.cliques: expected an array");
  for (const auto& row : cliques) spec.cliques.push_back(detail::int_list(row, "corona spec.cliques"));
  validate(spec);
  return spec;
}

inline json to_json(const RootedFamily& fam) {
  json attached = json::array();
  for (const auto& h : fam.attached) attached.push_back(to_json(h));
  return {{"base", to_json(fam.base)}, {"attached", attached}, {"roots", fam.roots}, {"star_condition", fam.star_condition}};
}

inline RootedFamily rooted_family_from_json(const json& j) {
  RootedFamily fam;
  fam.base = graph_from_json(detail::field_of(j, "base", "rooted family"));
  const json& attached = detail::field_of(j, "attached", "rooted family");
  if (!attached.is_array()) throw ParseError("rooted family.attached: expected an array");
  for (const auto& h : attached) fam.attached.push_back(graph_from_json(h));
  fam.roots = detail::int_list(detail::field_of(j, "roots", "rooted family"), "rooted family.roots");
  if (auto it = j.find("star_condition"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("rooted family.star_condition: expected a boolean");
    fam.star_condition = it->get<bool>();
  }
  return fam;
}

/// {"base", "attached"}: attached[i] is one graph or a list of graphs.
inline std::pair<Graph, std::vector<std::vector<Graph>>> corona_input_from_json(const json& j) {
  Graph base = graph_from_json(detail::field_of(j, "base", "corona"));
  const json& attached = detail::field_of(j, "attached", "corona");
  if (!attached.is_array()) throw ParseError("corona.attached: expected an array");
  std::vector<std::vector<Graph>> rows;
  for (const auto& entry : attached) {
    std::vector<Graph> row;
    if (entry.is_array()) {
      for (const auto& h : entry) row.push_back(graph_from_json(h));
    } else {
      row.push_back(graph_from_json(entry));
    }
    rows.push_back(std::move(row));
  }
  return {std::move(base), std::move(rows)};
}

/// {"base", "whiskers": [n_1, ...]}.
inline std::pair<Graph, std::vector<int>> multi_whisker_input_from_json(const json& j) {
  Graph base = graph_from_json(detail::field_of(j, "base", "multi-whisker"));
  std::vector<int> whiskers = detail::int_list(detail::field_of(j, "whiskers", "multi-whisker"), "multi-whisker.whiskers");
  for (int w : whiskers)
    if (w < 1) throw ValidationError("multi-whisker: whisker counts must be positive");
  return {std::move(base), std::move(whiskers)};
}

inline json to_json(const SimplicialComplex& delta) {
  json facets = json::array();
  for (VertexSet f : delta.facets()) facets.push_back(f.to_vector());
  return {{"ground", delta.ground()}, {"facets", facets}, {"void", delta.is_void()}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  const int ground = detail::int_of(detail::field_of(j, "ground", "complex"), "complex.ground");
  if (ground < 0) throw ValidationError("complex: negative ground set size");
  if (ground > VertexSet::kCapacity) throw BoundExceeded("complex ground set exceeds 64 vertices");
  const json& facets = detail::field_of(j, "facets", "complex");
  if (!facets.is_array()) throw ParseError("complex.facets: expected an array");
  std::vector<VertexSet> gens;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : detail::int_list(f, "complex.facets")) {
      if (v < 0 || v >= ground) throw ValidationError("complex.facets: vertex out of range");
      s.insert(v);
    }
    gens.push_back(s);
  }
  if (auto it = j.find("void"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("complex.void: expected a boolean");
    if (it->get<bool>() != gens.empty()) throw ValidationError("complex: \"void\" disagrees with the facet list");
  }
  return SimplicialComplex(ground, std::move(gens));
}

inline json to_json(const CoverReport& r) {
  return {{"alpha", r.alpha}, {"ht", r.ht}, {"bight", r.bight}, {"well_covered", r.well_covered}, {"mis_count", r.mis_count}};
}

inline json to_json(const HomologyProfile& h) {
  json dims = json::object();
  for (int i = -1; i <= h.top(); ++i) dims[std::to_string(i)] = h.at(i);
  return dims;
}

inline json to_json(const ShedReport& r) {
  return {{"vd", r.vd}, {"pure_vd", r.pure_vd}, {"shedding", r.shedding.to_vector()}};
}

inline json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [pq, b] : t.entries) entries.push_back({pq.first, pq.second, b});
  return {{"n", t.n}, {"field", t.field.name()}, {"entries", entries}, {"reg", t.regularity()}, {"pd", t.projective_dimension()}};
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable t;
  if (auto it = j.find("n"); it != j.end()) t.n = detail::int_of(*it, "betti.n");
  t.field = FieldSpec::parse(detail::field_of(j, "field", "betti").get<std::string>());
  const json& entries = detail::field_of(j, "entries", "betti");
  if (!entries.is_array()) throw ParseError("betti.entries: expected an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw ParseError("betti.entries: expected [p, q, beta]");
    t.add(detail::int_of(e[0], "betti.p"), detail::int_of(e[1], "betti.q"), e[2].get<long long>());
  }
  return t;
}

}  // namespace edgeideal
