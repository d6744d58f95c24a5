#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace a22 {

// Subset of the coordinate indices {1, ..., 10}, stored as a bitmask
// (bit i-1 represents index i).
class IndexSet {
 public:
  static constexpr int kUniverse = 10;
  static constexpr std::uint16_t kFullMask = (1u << kUniverse) - 1;

  constexpr IndexSet() = default;
  constexpr IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }
  static constexpr IndexSet from_mask(std::uint16_t mask) {
    IndexSet s;
    s.mask_ = mask & kFullMask;
    return s;
  }
  static constexpr IndexSet full() { return from_mask(kFullMask); }
  static IndexSet from_vector(const std::vector<int>& indices);

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr void insert(int i) { mask_ |= static_cast<std::uint16_t>(1u << (i - 1)); }
  constexpr void erase(int i) { mask_ &= static_cast<std::uint16_t>(~(1u << (i - 1))); }

  constexpr bool is_subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr IndexSet complement() const { return from_mask(~mask_ & kFullMask); }
  constexpr IndexSet operator|(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr bool disjoint(IndexSet o) const { return (mask_ & o.mask_) == 0; }

  // Sorted 1-based indices.
  std::vector<int> to_vector() const;
  std::string to_string() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint16_t mask_ = 0;
};

// Lexicographic order on the sorted member indices, used for every canonical listing.
bool lex_less(IndexSet a, IndexSet b);

}  // namespace a22
