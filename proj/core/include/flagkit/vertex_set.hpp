#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "flagkit/error.hpp"

namespace flagkit {

using Vertex = int;
using Count = std::int64_t;

/// A finite set of vertex labels in [0, 64), stored as a bitmask.
///
/// Iteration visits members in increasing order. The 64-vertex ceiling is the
/// ground-set limit for every complex in the library; inserting a larger label
/// raises GroundSetTooLarge.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
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

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }
  explicit VertexSet(const std::vector<Vertex>& members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static VertexSet range(int n) {
    check_label(n - 1);
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet singleton(Vertex v) {
    check_label(v);
    return from_bits(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
  }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  void insert(Vertex v) {
    check_label(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    if (v >= 0 && v < kMaxVertices) bits_ &= ~(std::uint64_t{1} << v);
  }
  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  /// Smallest member; undefined on the empty set.
  constexpr Vertex min() const { return std::countr_zero(bits_); }
  /// Largest member; undefined on the empty set.
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Orders by bitmask value, which is colex order within a fixed cardinality.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  static void check_label(Vertex v) {
    if (v >= kMaxVertices) throw Error(Errc::GroundSetTooLarge, "vertex label " + std::to_string(v) + " exceeds 63");
    if (v < -1) throw Error(Errc::BadParameter, "negative vertex label");
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of sorted member lists; the canonical order for output.
inline bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// Visits every subset of `s` (including the empty set and `s` itself).
template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = full;
  while (true) {
    fn(VertexSet::from_bits(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace flagkit
