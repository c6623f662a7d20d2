#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/covers.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/linalg.hpp"

namespace edgeideal {

/// dim H~_i for i = -1 .. top().
struct HomologyProfile {
  FieldSpec field = FieldSpec::gf2();
  std::vector<long long> dims;  // dims[i + 1] = dim H~_i

  int top() const { return static_cast<int>(dims.size()) - 2; }
  long long at(int i) const {
    const long long k = static_cast<long long>(i) + 1;
    return k < 0 || k >= static_cast<long long>(dims.size()) ? 0 : dims[static_cast<std::size_t>(k)];
  }
  bool acyclic() const {
    return std::all_of(dims.begin(), dims.end(), [](long long d) { return d == 0; });
  }
  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * dims[k];
    return chi;
  }
};

inline constexpr long long kDefaultFaceBudget = 2'000'000;

namespace detail {

/// Boundary map from faces of size k to faces of size k - 1 (k >= 1).
inline SparseMatrix boundary_matrix(const FaceTable& faces, std::size_t k) {
  SparseMatrix m;
  const auto& lower = faces.by_size[k - 1];
  m.cols = static_cast<int>(lower.size());
  m.rows.reserve(faces.by_size[k].size());
  for (VertexSet f : faces.by_size[k]) {
    std::vector<std::pair<int, int>> row;
    row.reserve(k);
    int sign = 1;
    for (int v : f) {
      const VertexSet g = f.without(v);
      auto it = std::lower_bound(lower.begin(), lower.end(), g, BitsLess{});
      row.emplace_back(static_cast<int>(it - lower.begin()), sign);
      sign = -sign;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

/// Facets share a vertex: the complex is a cone.
inline bool is_cone(const std::vector<VertexSet>& facets) {
  if (facets.empty()) return false;
  VertexSet common = facets[0];
  for (VertexSet f : facets) common &= f;
  return !common.empty();
}

}  // namespace detail

/// Reduced homology from the face table, dimensions -1 .. min(dim, max_dim).
inline HomologyProfile reduced_homology(const FaceTable& faces, const FieldSpec& field, int max_dim = INT_MAX) {
  HomologyProfile out;
  out.field = field;
  if (faces.is_void()) {
    out.dims.assign(1, 0);
    return out;
  }
  require_bound(faces.face_count() <= kDefaultFaceBudget, "reduced_homology: face count exceeds budget");
  const int top = std::min(faces.dim(), max_dim);
  if (field.is_rational()) {
    // dim H~_i over Q never exceeds dim H~_i over GF(2), so a vanishing GF(2)
    // answer is exact over Q as well.
    HomologyProfile mod2 = reduced_homology(faces, FieldSpec::gf2(), max_dim);
    if (mod2.acyclic()) {
      mod2.field = field;
      return mod2;
    }
  }
  const std::size_t kmax = faces.by_size.size() - 1;  // largest face size
  // rank[k] = rank of the boundary from size-k faces to size-(k-1) faces.
  std::vector<long long> rank(kmax + 2, 0);
  const std::size_t need = std::min<std::size_t>(kmax, static_cast<std::size_t>(top) + 2);
  for (std::size_t k = 1; k <= need; ++k) rank[k] = matrix_rank(detail::boundary_matrix(faces, k), field);
  out.dims.resize(static_cast<std::size_t>(top) + 2);
  for (int i = -1; i <= top; ++i) {
    const std::size_t k = static_cast<std::size_t>(i + 1);
    out.dims[k] = static_cast<long long>(faces.by_size[k].size()) - rank[k] - rank[k + 1];
  }
  return out;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& delta, const FieldSpec& field, int max_dim = INT_MAX) {
  if (delta.is_void()) return reduced_homology(FaceTable{}, field, max_dim);
  if (detail::is_cone(delta.facets())) {
    HomologyProfile out;
    out.field = field;
    out.dims.assign(static_cast<std::size_t>(std::min(delta.dim(), max_dim)) + 2, 0);
    return out;
  }
  return reduced_homology(delta.faces(), field, max_dim);
}

namespace detail {

/// H~_i(link F) = 0 for all i <= upto(|F|, dim link F), over every face F.
template <typename Bound>
bool links_vanish(const SimplicialComplex& delta, const FieldSpec& field, Bound upto) {
  const FaceTable faces = delta.faces();
  for (const auto& row : faces.by_size) {
    for (VertexSet f : row) {
      std::vector<VertexSet> gens;
      for (VertexSet g : delta.facets())
        if (f.is_subset_of(g)) gens.push_back(g - f);
      SimplicialComplex lk(delta.ground(), std::move(gens));
      const int limit = upto(f.size(), lk.dim());
      if (limit < -1) continue;
      if (limit == -1) {
        if (lk.is_empty_complex()) return false;
        continue;
      }
      if (is_cone(lk.facets())) continue;
      const HomologyProfile h = reduced_homology(lk, field, limit);
      for (int i = -1; i <= limit; ++i)
        if (h.at(i) != 0) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Reisner: H~_i(link F) = 0 for i < dim link F, every face F.
inline bool is_cohen_macaulay(const SimplicialComplex& delta, const FieldSpec& field = FieldSpec::gf2()) {
  if (delta.is_void()) return true;
  // Links of facets of a non-pure complex already witness failure below;
  // checking purity first just skips the sweep.
  if (!delta.is_pure()) return false;
  return detail::links_vanish(delta, field, [](int, int link_dim) { return link_dim - 1; });
}

/// Homological (S_r): H~_i(link F) = 0 for i <= r - 2 and |F| <= d - i - 2,
/// d = dim + 1. r is clamped to d.
inline bool satisfies_serre(const SimplicialComplex& delta, int r, const FieldSpec& field = FieldSpec::gf2()) {
  if (r < 1) throw ValidationError("satisfies_serre: r must be at least 1");
  if (delta.is_void()) return true;
  const int d = delta.dim() + 1;
  r = std::min(r, d);
  if (r <= 1) return true;
  // The i = -1 condition forces every facet to have size d.
  if (!delta.is_pure()) return false;
  return detail::links_vanish(delta, field, [&](int face_size, int) { return std::min(r - 2, d - face_size - 2); });
}

/// max { r <= d : (S_r) }, 0 when d = 0.
inline int serre_index(const SimplicialComplex& delta, const FieldSpec& field = FieldSpec::gf2()) {
  if (delta.is_void()) return 0;
  const int d = delta.dim() + 1;
  if (d <= 1) return d;
  int best = 1;
  for (int r = 2; r <= d; ++r) {
    if (!satisfies_serre(delta, r, field)) break;
    best = r;
  }
  return best;
}

/// Every pure skeleton is Cohen-Macaulay.
inline bool is_sequentially_cm(const SimplicialComplex& delta, const FieldSpec& field = FieldSpec::gf2()) {
  if (delta.is_void()) return true;
  for (int i = -1; i <= delta.dim(); ++i)
    if (!is_cohen_macaulay(pure_skeleton(delta, i), field)) return false;
  return true;
}

inline bool is_cohen_macaulay(const Graph& g, const FieldSpec& field = FieldSpec::gf2()) {
  return is_cohen_macaulay(independence_complex(g), field);
}

inline bool satisfies_serre(const Graph& g, int r, const FieldSpec& field = FieldSpec::gf2()) {
  return satisfies_serre(independence_complex(g), r, field);
}

enum class TwoVertexRoute { definition, deletion_link };

namespace detail {

template <typename Holds>
bool two_property_at(const Graph& g, int x, TwoVertexRoute route, Holds holds) {
  if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  const Graph minus = delete_vertex(g, x);
  if (route == TwoVertexRoute::definition)
    return independence_number(g) == independence_number(minus) && holds(g) && holds(minus);
  const Graph far = delete_closed_neighborhood(g, x);
  return independence_number(minus) == independence_number(far) + 1 && holds(minus) && holds(far);
}

}  // namespace detail

/// 2-(S_r) at x. definition: G and G - x satisfy (S_r), alpha(G) = alpha(G - x).
/// deletion_link: G - x and G - N[x] satisfy (S_r), alpha(G - x) = alpha(G - N[x]) + 1.
inline bool is_2serre_at(const Graph& g, int x, int r, const FieldSpec& field = FieldSpec::gf2(),
                         TwoVertexRoute route = TwoVertexRoute::definition) {
  if (r < 2) throw ValidationError("is_2serre_at: r must be at least 2");
  return detail::two_property_at(g, x, route, [&](const Graph& h) { return satisfies_serre(h, r, field); });
}

/// 2-CM at x, with the same two routes.
inline bool is_2cm_at(const Graph& g, int x, const FieldSpec& field = FieldSpec::gf2(),
                      TwoVertexRoute route = TwoVertexRoute::definition) {
  return detail::two_property_at(g, x, route, [&](const Graph& h) { return is_cohen_macaulay(h, field); });
}

}  // namespace edgeideal
