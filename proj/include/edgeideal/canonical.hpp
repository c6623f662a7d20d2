#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Isomorphism-class key: the upper-triangle adjacency bit string of a
/// canonical relabeling, plus the vertex count.
struct CanonicalCode {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = std::to_string(n) + ":";
    for (std::uint64_t w : words)
      for (int shift = 60; shift >= 0; shift -= 4) out += kDigits[(w >> shift) & 0xF];
    return out;
  }
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    std::size_t h = static_cast<std::size_t>(c.n) * 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t w : c.words) h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct CanonicalForm {
  CanonicalCode code;
  /// perm[v] is the canonical position of vertex v.
  std::vector<int> perm;
};

inline constexpr int kDefaultCanonicalBound = 10;

namespace detail {

using Partition = std::vector<std::vector<int>>;

/// Splits cells by (neighbor count in each cell) until stable. Cell order and
/// the order of split pieces depend only on isomorphism-invariant data.
inline void refine(const std::vector<VertexSet>& adj, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> masks;
    masks.reserve(cells.size());
    for (const auto& cell : cells) masks.push_back(VertexSet::from_vector(cell));
    Partition next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> sig(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = (adj[v] & masks[c]).size();
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t k = 1; k <= keyed.size(); ++k) {
        if (k == keyed.size() || keyed[k].first != keyed[start].first) {
          std::vector<int> piece;
          for (std::size_t t = start; t < k; ++t) piece.push_back(keyed[t].second);
          next.push_back(std::move(piece));
          start = k;
        }
      }
    }
    if (next.size() != cells.size()) changed = true;
    cells = std::move(next);
  }
}

inline CanonicalCode code_for(const std::vector<VertexSet>& adj, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  CanonicalCode code;
  code.n = n;
  const int bits = n * (n - 1) / 2;
  code.words.assign((bits + 63) / 64, 0);
  // Bit 0 of the string is the most significant bit of word 0, so word-wise
  // comparison is lexicographic comparison of the bit string.
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (adj[order[i]].contains(order[j])) code.words[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
  return code;
}

inline void search(const std::vector<VertexSet>& adj, Partition cells, CanonicalForm& best, bool& have_best) {
  refine(adj, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c[0]);
    CanonicalCode code = code_for(adj, order);
    if (!have_best || code < best.code) {
      best.code = std::move(code);
      best.perm.assign(order.size(), 0);
      for (std::size_t pos = 0; pos < order.size(); ++pos) best.perm[order[pos]] = static_cast<int>(pos);
      have_best = true;
    }
    return;
  }
  const std::size_t index = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> cell = *target;
  for (int v : cell) {
    Partition branch = cells;
    std::vector<int> rest;
    for (int u : cell)
      if (u != v) rest.push_back(u);
    branch[index] = {v};
    branch.insert(branch.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(rest));
    search(adj, std::move(branch), best, have_best);
  }
}

}  // namespace detail

/// Canonical labeling by individualization and refinement: the minimum
/// adjacency code over the leaves of the search tree. The leaf set is an
/// isomorphism invariant, so equal codes <=> isomorphic graphs.
inline CanonicalForm canonical_form(const Graph& g, int max_n = kDefaultCanonicalBound) {
  const int n = g.vertex_count();
  require_bound(n <= max_n, "canonical_code: " + std::to_string(n) + " vertices exceeds bound " + std::to_string(max_n));
  CanonicalForm best;
  if (n == 0) return best;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  // Seed with degree classes, low degree first.
  std::vector<int> sorted = all;
  std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  detail::Partition cells;
  for (int v : sorted) {
    if (cells.empty() || g.degree(cells.back()[0]) != g.degree(v)) cells.push_back({});
    cells.back().push_back(v);
  }
  bool have = false;
  detail::search(g.adjacency(), std::move(cells), best, have);
  return best;
}

inline CanonicalCode canonical_code(const Graph& g, int max_n = kDefaultCanonicalBound) {
  return canonical_form(g, max_n).code;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int max_n = kDefaultCanonicalBound) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a, max_n) == canonical_code(b, max_n);
}

/// G relabeled into its canonical vertex order.
inline Graph canonical_graph(const Graph& g, int max_n = kDefaultCanonicalBound) {
  return relabel(g, canonical_form(g, max_n).perm);
}

}  // namespace edgeideal
