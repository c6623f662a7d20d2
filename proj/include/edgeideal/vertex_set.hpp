#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideal {

/// A subset of {0, ..., 63} packed into one machine word.
///
/// Every combinatorial object in the library (independent sets, covers,
/// faces, induced-subgraph supports) is a VertexSet, so ground sets are
/// capped at 64 vertices. Enumeration bounds elsewhere are far below that.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet range(int n) {
    if (n < 0 || n > kCapacity) throw std::out_of_range("VertexSet::range: n out of range");
    return VertexSet(n == kCapacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  /// Largest element; undefined on the empty set.
  constexpr int back() const { return 63 - std::countl_zero(bits_); }

  void insert(int v) {
    check(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) {
    check(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  static void check(int v) {
    if (v < 0 || v >= kCapacity) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing element sequences, so {0,2} < {1}
/// and {1} < {1,3}.
inline bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int low = std::countr_zero(diff);
  // All elements below `low` are shared. Whichever set owns `low` is smaller,
  // unless the other set has nothing left, in which case it is a prefix.
  const std::uint64_t above = low == 63 ? 0 : (~std::uint64_t{0} << (low + 1));
  if (a.contains(low)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Orders by the raw bit pattern; used for hashing-free deduplication.
struct BitsLess {
  bool operator()(VertexSet a, VertexSet b) const { return a.bits() < b.bits(); }
};

}  // namespace edgeideal
