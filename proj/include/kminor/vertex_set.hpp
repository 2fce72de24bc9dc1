#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace kminor {

/// A subset of vertex indices 0..63 packed into one machine word.
class VertexSet {
 public:
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
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  /// The set {0, ..., n-1}.
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace kminor
