#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgeideal/field.hpp"

namespace edgeideal {

/// Integer matrix stored by rows as (column, value) pairs.
struct SparseMatrix {
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> rows;
};

namespace detail {

inline int rank_gf2(const SparseMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivots;
  std::vector<int> pivot_of(static_cast<std::size_t>(m.cols), -1);
  std::vector<std::uint64_t> row(words);
  for (const auto& entries : m.rows) {
    std::fill(row.begin(), row.end(), 0);
    for (auto [c, v] : entries)
      if (v & 1) row[c / 64] ^= std::uint64_t{1} << (c % 64);
    for (std::size_t w = 0; w < words;) {
      if (row[w] == 0) {
        ++w;
        continue;
      }
      const int c = static_cast<int>(w * 64) + __builtin_ctzll(row[w]);
      const int p = pivot_of[c];
      if (p < 0) {
        pivot_of[c] = static_cast<int>(pivots.size());
        pivots.push_back(row);
        break;
      }
      const auto& pr = pivots[p];
      for (std::size_t k = w; k < words; ++k) row[k] ^= pr[k];
    }
  }
  return static_cast<int>(pivots.size());
}

inline int rank_gfp(const SparseMatrix& m, int p) {
  const std::size_t cols = static_cast<std::size_t>(m.cols);
  std::vector<std::vector<int>> pivots;
  std::vector<int> pivot_of(cols, -1);
  std::vector<long long> row(cols);
  auto inverse = [p](long long a) {
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (const auto& entries : m.rows) {
    std::fill(row.begin(), row.end(), 0);
    for (auto [c, v] : entries) row[c] = ((row[c] + v) % p + p) % p;
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      const int piv = pivot_of[c];
      if (piv < 0) {
        // Normalize so the pivot entry is 1.
        const long long inv = inverse(row[c]);
        std::vector<int> stored(cols);
        for (std::size_t k = c; k < cols; ++k) stored[k] = static_cast<int>(row[k] * inv % p);
        pivot_of[c] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(stored));
        break;
      }
      const long long factor = row[c];
      const auto& pr = pivots[piv];
      for (std::size_t k = c; k < cols; ++k) row[k] = ((row[k] - factor * pr[k]) % p + p) % p;
    }
  }
  return static_cast<int>(pivots.size());
}

struct Overflow {};

template <typename T>
T checked_mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  } else {
    return a * b;
  }
}

template <typename T>
T checked_sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  } else {
    return a - b;
  }
}

/// Fraction-free (Bareiss) elimination; every division is exact.
template <typename T>
int rank_bareiss(const SparseMatrix& m) {
  const std::size_t rows = m.rows.size();
  const std::size_t cols = static_cast<std::size_t>(m.cols);
  std::vector<std::vector<T>> a(rows, std::vector<T>(cols, T(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (auto [c, v] : m.rows[r]) a[r][c] += T(v);
  T prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const T& pv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        T value = checked_sub(checked_mul(pv, a[i][j]), checked_mul(lead, a[rank][j]));
        a[i][j] = value / prev;
      }
      a[i][c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return static_cast<int>(rank);
}

inline int rank_rational(const SparseMatrix& m) {
  try {
    return rank_bareiss<std::int64_t>(m);
  } catch (const Overflow&) {
    return rank_bareiss<boost::multiprecision::cpp_int>(m);
  }
}

}  // namespace detail

/// Exact rank of an integer matrix read over the given field.
inline int matrix_rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.rows.empty() || m.cols == 0) return 0;
  if (field.is_rational()) return detail::rank_rational(m);
  if (field.characteristic() == 2) return detail::rank_gf2(m);
  return detail::rank_gfp(m, field.characteristic());
}

}  // namespace edgeideal
