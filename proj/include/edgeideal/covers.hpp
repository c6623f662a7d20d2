#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

inline constexpr int kEnumerationBound = 24;

/// Independence number, cover heights and well-coveredness of one graph.
struct CoverReport {
  int alpha = 0;
  int ht = 0;
  int bight = 0;
  bool well_covered = true;
  long long mis_count = 0;
};

namespace detail {

/// Bron-Kerbosch with pivoting on the complement of G|within: maximal cliques
/// of the complement are the maximal independent sets.
template <typename Emit>
void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet within, VertexSet chosen, VertexSet candidates,
                   VertexSet excluded, Emit& emit) {
  if (candidates.empty()) {
    if (excluded.empty()) emit(chosen);
    return;
  }
  // Complement neighborhood of v inside `within`.
  auto co = [&](int v) { return within - adj[v].with(v); };
  int pivot = -1;
  int best = -1;
  for (int u : candidates | excluded) {
    const int score = (candidates & co(u)).size();
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (int v : candidates - co(pivot)) {
    const VertexSet nv = co(v);
    bron_kerbosch(adj, within, chosen.with(v), candidates & nv, excluded & nv, emit);
    candidates.erase(v);
    excluded.insert(v);
  }
}

template <typename Emit>
void for_each_maximal_independent_set(const Graph& g, VertexSet within, Emit&& emit) {
  require_bound(within.size() <= kEnumerationBound,
                "maximal independent set enumeration: " + std::to_string(within.size()) + " vertices exceeds bound " +
                    std::to_string(kEnumerationBound));
  bron_kerbosch(g.adjacency(), within, VertexSet{}, within, VertexSet{}, emit);
}

/// Sizes of the smallest and largest maximal independent set of G|within.
inline std::pair<int, int> mis_size_range(const Graph& g, VertexSet within) {
  int lo = 64, hi = -1;
  for_each_maximal_independent_set(g, within, [&](VertexSet s) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
  });
  return {lo, hi};
}

/// alpha(G|within).
inline int independence_number(const Graph& g, VertexSet within) { return mis_size_range(g, within).second; }

inline bool is_well_covered(const Graph& g, VertexSet within) {
  auto [lo, hi] = mis_size_range(g, within);
  return lo == hi;
}

}  // namespace detail

/// Inclusion-maximal independent sets, sorted lexicographically.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  detail::for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

/// Inclusion-minimal vertex covers (complements of maximal independent sets),
/// sorted lexicographically.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  std::vector<VertexSet> out;
  const VertexSet all = g.vertices();
  detail::for_each_maximal_independent_set(g, all, [&](VertexSet s) { out.push_back(all - s); });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

inline int independence_number(const Graph& g) { return detail::independence_number(g, g.vertices()); }

inline CoverReport cover_report(const Graph& g) {
  CoverReport r;
  int lo = 64, hi = -1;
  detail::for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet s) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
    ++r.mis_count;
  });
  const int n = g.vertex_count();
  r.alpha = hi;
  r.ht = n - hi;
  r.bight = n - lo;
  r.well_covered = lo == hi;
  return r;
}

/// All maximal independent sets share one size (Delta(G) is pure).
inline bool is_well_covered(const Graph& g) { return detail::is_well_covered(g, g.vertices()); }

enum class TwoPureMethod { definition, mis_extension, pendant_cover };

/// 2-purity of G with respect to x, decided three independent ways.
///
/// definition:    G pure, G - x pure, alpha(G) = alpha(G - x).
/// mis_extension: G well-covered and every maximal independent set A containing
///                x has a maximal independent set B, x not in B, B > A - {x}.
/// pendant_cover: G well-covered and every minimal vertex cover C of G + xy
///                meets V(G) in exactly ht(I(G)) vertices.
///
/// The last two require x to be non-isolated; the definition returns false for
/// an isolated x since alpha always drops.
inline bool is_two_pure_at(const Graph& g, int x, TwoPureMethod method = TwoPureMethod::definition) {
  const VertexSet all = g.vertices();
  if (!all.contains(x)) throw std::out_of_range("is_two_pure_at: vertex out of range");
  if (method != TwoPureMethod::definition && g.is_isolated(x))
    throw ValidationError("is_two_pure_at: x must not be isolated for this method");

  auto [lo, hi] = detail::mis_size_range(g, all);
  if (lo != hi) return false;
  switch (method) {
    case TwoPureMethod::definition: {
      auto [dlo, dhi] = detail::mis_size_range(g, all.without(x));
      return dlo == dhi && dhi == hi;
    }
    case TwoPureMethod::mis_extension: {
      std::vector<VertexSet> sets;
      detail::for_each_maximal_independent_set(g, all, [&](VertexSet s) { sets.push_back(s); });
      for (VertexSet a : sets) {
        if (!a.contains(x)) continue;
        const VertexSet rest = a.without(x);
        const bool extends =
            std::any_of(sets.begin(), sets.end(), [&](VertexSet b) { return !b.contains(x) && rest.is_subset_of(b); });
        if (!extends) return false;
      }
      return true;
    }
    case TwoPureMethod::pendant_cover: {
      const Graph plus = add_pendant(g, x);
      const int ht = g.vertex_count() - hi;
      for (VertexSet c : minimal_vertex_covers(plus))
        if ((c & all).size() != ht) return false;
      return true;
    }
  }
  return false;
}

/// U(G): the vertices at which G is 2-pure.
inline VertexSet two_pure_vertices(const Graph& g) {
  VertexSet out;
  for (int x = 0; x < g.vertex_count(); ++x)
    if (is_two_pure_at(g, x, TwoPureMethod::definition)) out.insert(x);
  return out;
}

inline VertexSet u_set(const Graph& g) { return two_pure_vertices(g); }

namespace detail {

// m(S): skip the smallest vertex, or match it to a neighbor in S.
inline int matching_number(const std::vector<VertexSet>& adj, VertexSet s, std::unordered_map<std::uint64_t, int>& memo) {
  if (s.size() < 2) return 0;
  if (auto it = memo.find(s.bits()); it != memo.end()) return it->second;
  const int v = s.front();
  const VertexSet rest = s.without(v);
  int best = matching_number(adj, rest, memo);
  for (int u : adj[v] & rest) best = std::max(best, 1 + matching_number(adj, rest.without(u), memo));
  memo.emplace(s.bits(), best);
  return best;
}

// im(S): S holds the vertices still usable as endpoints. Choosing edge uv
// removes N[u] and N[v], which keeps the chosen edges pairwise non-adjacent.
inline int induced_matching_number(const std::vector<VertexSet>& adj, VertexSet s,
                                   std::unordered_map<std::uint64_t, int>& memo) {
  // Drop vertices with no usable neighbor.
  VertexSet live;
  for (int v : s)
    if (adj[v].intersects(s)) live.insert(v);
  if (live.empty()) return 0;
  if (auto it = memo.find(live.bits()); it != memo.end()) return it->second;
  const int v = live.front();
  int best = induced_matching_number(adj, live.without(v), memo);
  for (int u : adj[v] & live) {
    const VertexSet gone = adj[v].with(v) | adj[u].with(u);
    best = std::max(best, 1 + induced_matching_number(adj, live - gone, memo));
  }
  memo.emplace(live.bits(), best);
  return best;
}

}  // namespace detail

/// Maximum matching size m(G).
inline int matching_number(const Graph& g) {
  require_bound(g.vertex_count() <= kEnumerationBound, "matching_number: graph exceeds enumeration bound");
  std::unordered_map<std::uint64_t, int> memo;
  return detail::matching_number(g.adjacency(), g.vertices(), memo);
}

/// Maximum induced matching size im(G).
inline int induced_matching_number(const Graph& g) {
  require_bound(g.vertex_count() <= kEnumerationBound, "induced_matching_number: graph exceeds enumeration bound");
  std::unordered_map<std::uint64_t, int> memo;
  return detail::induced_matching_number(g.adjacency(), g.vertices(), memo);
}

}  // namespace edgeideal
