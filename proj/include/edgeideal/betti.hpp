#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/parallel.hpp"

namespace edgeideal {

/// Graded Betti numbers beta_{p,q} of S/I(G).
struct BettiTable {
  int n = 0;
  FieldSpec field = FieldSpec::gf2();
  std::map<std::pair<int, int>, long long> entries;

  long long at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int p, int q, long long count) {
    if (count == 0) return;
    entries[{p, q}] += count;
  }
  int regularity() const {
    int reg = 0;
    for (const auto& [pq, b] : entries) reg = std::max(reg, pq.second - pq.first);
    return reg;
  }
  int projective_dimension() const {
    int pd = 0;
    for (const auto& [pq, b] : entries) pd = std::max(pd, pq.first);
    return pd;
  }
  /// Entry-wise equality (n and field are not compared).
  bool same_entries(const BettiTable& other) const { return entries == other.entries; }

  /// Rows indexed by q - p, columns by p, as in the usual Betti diagram.
  std::string pretty() const {
    const int reg = regularity();
    const int pd = projective_dimension();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(reg) + 1,
                                                std::vector<std::string>(static_cast<std::size_t>(pd) + 1, "."));
    for (const auto& [pq, b] : entries) cells[pq.second - pq.first][pq.first] = std::to_string(b);
    std::vector<long long> totals(static_cast<std::size_t>(pd) + 1, 0);
    for (const auto& [pq, b] : entries) totals[pq.first] += b;
    std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 1, 1);
    for (int p = 0; p <= pd; ++p) {
      width[p] = std::max({width[p], std::to_string(p).size(), std::to_string(totals[p]).size()});
      for (const auto& row : cells) width[p] = std::max(width[p], row[p].size());
    }
    const std::size_t label = std::max<std::size_t>(6, std::to_string(reg).size() + 1);
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::ostringstream out;
    out << pad("", label);
    for (int p = 0; p <= pd; ++p) out << ' ' << pad(std::to_string(p), width[p]);
    out << '\n' << pad("total:", label);
    for (int p = 0; p <= pd; ++p) out << ' ' << pad(std::to_string(totals[p]), width[p]);
    out << '\n';
    for (int d = 0; d <= reg; ++d) {
      out << pad(std::to_string(d) + ":", label);
      for (int p = 0; p <= pd; ++p) out << ' ' << pad(cells[d][p], width[p]);
      out << '\n';
    }
    return out.str();
  }
};

struct BettiOptions {
  int threads = 0;  // 0: hardware concurrency
  int max_vertices = 16;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

namespace detail {

/// Hochster contributions of the subsets W with Gray-code ranks in [lo, hi).
inline void betti_chunk(const Graph& g, const FieldSpec& field, std::uint64_t lo, std::uint64_t hi,
                        std::map<std::pair<int, int>, long long>& acc) {
  const auto& adj = g.adjacency();
  for (std::uint64_t i = lo; i < hi; ++i) {
    const VertexSet w(i ^ (i >> 1));
    // An isolated vertex of G|W is a cone point of Delta(G)|W.
    bool cone = false;
    for (int v : w)
      if (!adj[v].intersects(w)) {
        cone = true;
        break;
      }
    if (cone) continue;
    const FaceTable faces = independent_set_faces(g, w);
    const HomologyProfile h = reduced_homology(faces, field);
    const int q = w.size();
    for (int k = -1; k <= h.top(); ++k)
      if (const long long d = h.at(k); d != 0) acc[{q - k - 1, q}] += d;
  }
}

}  // namespace detail

/// beta_{p,q}(S/I(G)) = sum over |W| = q of dim H~_{q-p-1}(Delta(G)|W).
inline BettiTable betti_table(const Graph& g, const FieldSpec& field = FieldSpec::gf2(), const BettiOptions& opts = {}) {
  const int n = g.vertex_count();
  require_bound(n <= opts.max_vertices,
                "betti_table: " + std::to_string(n) + " vertices exceeds bound " + std::to_string(opts.max_vertices));
  const std::uint64_t total = std::uint64_t{1} << n;
  require_bound(total <= opts.max_subsets, "betti_table: subset count exceeds budget");
  // Fixed chunking keeps the reduction independent of the thread count.
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 64);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  auto partial = parallel_map(chunks, opts.threads, [&](std::size_t c) {
    std::map<std::pair<int, int>, long long> acc;
    const std::uint64_t lo = c * chunk;
    detail::betti_chunk(g, field, lo, std::min(total, lo + chunk), acc);
    return acc;
  });
  BettiTable table;
  table.n = n;
  table.field = field;
  for (const auto& acc : partial)
    for (const auto& [pq, b] : acc) table.add(pq.first, pq.second, b);
  return table;
}

inline int regularity(const Graph& g, const FieldSpec& field = FieldSpec::gf2(), const BettiOptions& opts = {}) {
  return betti_table(g, field, opts).regularity();
}

inline int projective_dimension(const Graph& g, const FieldSpec& field = FieldSpec::gf2(), const BettiOptions& opts = {}) {
  return betti_table(g, field, opts).projective_dimension();
}

/// S/I(K_n) has a linear resolution with beta_{p,p+1} = p * C(n, p+1).
inline BettiTable complete_graph_betti_oracle(int n) {
  if (n < 2) throw ValidationError("complete_graph_betti_oracle needs n >= 2");
  BettiTable table;
  table.n = n;
  table.add(0, 0, 1);
  for (int p = 1; p < n; ++p) {
    long long binom = 1;
    for (int k = 0; k < p + 1; ++k) binom = binom * (n - k) / (k + 1);
    table.add(p, p + 1, p * binom);
  }
  return table;
}

/// Table of a disjoint union from the tables of the parts.
inline BettiTable tensor_product(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  out.n = a.n + b.n;
  out.field = a.field;
  for (const auto& [pq1, b1] : a.entries)
    for (const auto& [pq2, b2] : b.entries) out.add(pq1.first + pq2.first, pq1.second + pq2.second, b1 * b2);
  return out;
}

}  // namespace edgeideal
