#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tug/errors.hpp"

namespace tug {

/// Hard cap on the player count (worth tables are dense, 2^n entries).
inline constexpr int kMaxPlayers = 20;

inline void validate_player_count(int n) {
  if (n < 2) throw PlayerCountTooSmall("player count must be at least 2, got " + std::to_string(n));
  if (n > kMaxPlayers)
    throw PlayerCountTooSmall("player count capped at " + std::to_string(kMaxPlayers));
}

/// A coalition of players encoded as a bitmask: bit p-1 is set iff player p
/// (1-based, as in game files) belongs to the coalition. The empty set is
/// mask 0 and is a valid value for indexing purposes.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static constexpr Coalition empty() { return Coalition(0); }
  static constexpr Coalition grand(int n) { return Coalition((std::uint32_t{1} << n) - 1); }
  static Coalition single(int player) { return Coalition(std::uint32_t{1} << (player - 1)); }
  /// Builds a coalition from 1-based player numbers.
  static Coalition of(std::initializer_list<int> players) {
    std::uint32_t m = 0;
    for (int p : players) m |= std::uint32_t{1} << (p - 1);
    return Coalition(m);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(int player) const { return (mask_ >> (player - 1)) & 1u; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Coalition with(int player) const {
    return Coalition(mask_ | (std::uint32_t{1} << (player - 1)));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~(std::uint32_t{1} << (player - 1)));
  }
  constexpr Coalition complement(int n) const { return Coalition(grand(n).mask_ & ~mask_); }
  constexpr Coalition intersect(Coalition other) const { return Coalition(mask_ & other.mask_); }
  constexpr Coalition unite(Coalition other) const { return Coalition(mask_ | other.mask_); }

  /// 1-based member list in ascending order.
  std::vector<int> players() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// Canonical text form, e.g. "1,3" (empty string for the empty set).
  std::string to_string() const {
    std::string out;
    for (int p : players()) {
      if (!out.empty()) out += ',';
      out += std::to_string(p);
    }
    return out;
  }

  friend constexpr bool operator==(Coalition a, Coalition b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(Coalition a, Coalition b) { return a.mask_ != b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// Number of coalitions (including the empty set) on n players.
inline constexpr std::uint32_t subset_count(int n) { return std::uint32_t{1} << n; }

}  // namespace tug
