#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace trop {

// Dictionary order on ascending member lists of two bitmask-encoded sets:
// {} < {1} < {1,2} < {1,2,3} < {1,3} < {2}. A set that is a prefix of
// another compares smaller.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (0 - diff);
  const std::uint64_t above = ~(low | (low - 1));
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

inline constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Subset of a 1-based ground set [n], n <= 64, stored as a bitmask
// (element e <-> bit e-1). The universal currency: circuits, supports,
// deletion/contraction selections.
class ElementSet {
 public:
  static constexpr int kMaxGroundSize = 64;

  constexpr ElementSet() = default;

  static constexpr ElementSet from_mask(std::uint64_t mask) {
    return ElementSet(mask);
  }
  static ElementSet of(std::initializer_list<int> elems);
  // Throws InvalidInput("out-of-range") unless every element is in 1..64.
  static ElementSet from_elements(const std::vector<int>& elems);

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const {
    return e >= 1 && e <= kMaxGroundSize && ((bits_ >> (e - 1)) & 1) != 0;
  }
  // Smallest member of a nonempty set.
  int min_element() const { return std::countr_zero(bits_) + 1; }
  // Ascending 1-based members; the canonical serialization.
  std::vector<int> elements() const;
  std::string to_string() const;

  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet o) const {
    return bits_ != o.bits_ && subset_of(o);
  }
  constexpr bool intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  static bool lex_less(ElementSet a, ElementSet b) {
    return mask_lex_less(a.bits_, b.bits_);
  }
  // Cardinality first, lex_less on ties: the canonical circuit order.
  static bool canonical_less(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return mask_lex_less(a.bits_, b.bits_);
  }

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Renumbers the bits of m that survive in `keep`: the i-th lowest bit of
// `keep` maps to bit i. m must be a submask of keep.
inline std::uint64_t compress_mask(std::uint64_t m, std::uint64_t keep) {
  std::uint64_t out = 0;
  int idx = 0;
  for (std::uint64_t k = keep; k != 0; k &= k - 1, ++idx) {
    if (m & (k & (0 - k))) out |= std::uint64_t{1} << idx;
  }
  return out;
}

// Calls fn(mask) for every size-r submask of `universe`, in dictionary
// order of the ascending member lists. fn may return void, or bool where
// true stops the enumeration early (and is propagated).
template <typename Fn>
bool for_each_combination(std::uint64_t universe, int r, Fn&& fn) {
  std::vector<int> pos;  // bit positions of universe, ascending
  for (std::uint64_t u = universe; u != 0; u &= u - 1) {
    pos.push_back(std::countr_zero(u));
  }
  const int m = static_cast<int>(pos.size());
  if (r < 0 || r > m) return false;

  auto invoke = [&](std::uint64_t mask) -> bool {
    if constexpr (std::is_same_v<decltype(fn(mask)), bool>) {
      return fn(mask);
    } else {
      fn(mask);
      return false;
    }
  };

  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i = 0; i < r; ++i) mask |= std::uint64_t{1} << pos[idx[i]];
    if (invoke(mask)) return true;
    if (r == 0) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace trop
