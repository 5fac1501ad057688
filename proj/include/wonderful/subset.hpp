#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wonderful/error.hpp"

namespace wonderful {

inline constexpr int kMaxRank = 32;

/// A subset of the simple-root index set I, stored as a bitmask.
///
/// Indices are 0-based throughout the library; the text formats use the
/// 1-based labels 1..n (see `labels()` / `from_labels()`).
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_mask(std::uint32_t mask) {
    Subset s;
    s.mask_ = mask;
    return s;
  }

  static constexpr Subset full(int rank) {
    return from_mask(rank >= kMaxRank ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }

  static Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  static Subset from_indices(const std::vector<int>& indices) {
    Subset s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  /// Builds from 1-based labels.
  static Subset from_labels(const std::vector<int>& labels) {
    Subset s;
    for (int l : labels) {
      if (l < 1 || l > kMaxRank) throw Error("invalid generator");
      s = s.with(l - 1);
    }
    return s;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }
  constexpr Subset with(int i) const { return from_mask(mask_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(int i) const { return from_mask(mask_ & ~(std::uint32_t{1} << i)); }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  std::vector<int> labels() const {
    std::vector<int> out = members();
    for (int& i : out) ++i;
    return out;
  }

  /// "{1,2}" style rendering with 1-based labels.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first) s += ',';
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return from_mask(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// All subsets of `s`, in increasing mask order.
inline std::vector<Subset> subsets_of(Subset s) {
  std::vector<Subset> out;
  std::uint32_t m = s.mask();
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(Subset::from_mask(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
  return out;
}

/// Canonical subset order used by every listing: larger subsets first, then
/// lexicographic on the sorted label list.
inline bool subset_listing_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.members() < b.members();
}

}  // namespace wonderful
