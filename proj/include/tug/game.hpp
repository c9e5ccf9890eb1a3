#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tug/coalition.hpp"
#include "tug/errors.hpp"
#include "tug/numeric.hpp"

namespace tug {

/// Payoff vector: pay(p) is the payoff of 1-based player p.
template <class R>
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(int n) : pay_(static_cast<std::size_t>(n), ScalarTraits<R>::zero()) {}
  explicit Allocation(std::vector<R> pay) : pay_(std::move(pay)) {}

  int players() const { return static_cast<int>(pay_.size()); }
  const R& pay(int player) const { return pay_[player - 1]; }
  R& pay(int player) { return pay_[player - 1]; }
  const std::vector<R>& values() const { return pay_; }
  std::vector<R>& values() { return pay_; }

  R total() const {
    R sum = ScalarTraits<R>::zero();
    for (const R& x : pay_) sum += x;
    return sum;
  }
  R mean() const { return total() / ScalarTraits<R>::from_long(players()); }

  friend bool operator==(const Allocation& a, const Allocation& b) { return a.pay_ == b.pay_; }

 private:
  std::vector<R> pay_;
};

template <class R>
bool allocations_close(const Allocation<R>& a, const Allocation<R>& b, double tol = kTolEq) {
  if (a.players() != b.players()) return false;
  for (int p = 1; p <= a.players(); ++p)
    if (!close(a.pay(p), b.pay(p), tol)) return false;
  return true;
}

/// TU-game on a fixed player set: a dense table of 2^n coalition worths
/// indexed by Coalition::mask(), with worth(empty) pinned to zero.
/// Immutable after construction; all operations below return new games.
template <class R>
class Game {
 public:
  /// Zero game on n players.
  explicit Game(int n) : n_(n), worth_(subset_count(n), ScalarTraits<R>::zero()) {
    validate_player_count(n);
  }

  Game(int n, std::vector<R> worths) : n_(n), worth_(std::move(worths)) {
    validate_player_count(n);
    if (worth_.size() != subset_count(n)) throw Error("worth table size must be 2^n");
    if (!(worth_[0] == ScalarTraits<R>::zero()))
      throw NonZeroEmptySet("worth of the empty coalition must be 0");
    for (const R& x : worth_)
      if (!ScalarTraits<R>::finite(x)) throw Error("game worths must be finite");
  }

  int players() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }
  std::uint32_t table_size() const { return subset_count(n_); }

  const R& worth(Coalition s) const { return worth_[s.mask()]; }
  const R& worth(std::uint32_t mask) const { return worth_[mask]; }
  const R& grand_worth() const { return worth_[grand().mask()]; }
  const std::vector<R>& table() const { return worth_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.n_ == b.n_ && a.worth_ == b.worth_;
  }

 private:
  int n_;
  std::vector<R> worth_;
};

template <class R>
bool games_close(const Game<R>& a, const Game<R>& b, double tol = kTolEq) {
  if (a.players() != b.players()) return false;
  for (std::uint32_t m = 0; m < a.table_size(); ++m)
    if (!close(a.worth(m), b.worth(m), tol)) return false;
  return true;
}

/// Permutation of the player set; map(p) is the image of 1-based player p.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
    const int n = static_cast<int>(map_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int image : map_) {
      if (image < 1 || image > n || seen[static_cast<std::size_t>(image - 1)])
        throw InvalidPermutation("permutation map is not a bijection on {1..n}");
      seen[static_cast<std::size_t>(image - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 1);
    return Permutation(std::move(m));
  }

  int players() const { return static_cast<int>(map_.size()); }
  int apply(int player) const { return map_[player - 1]; }

  Coalition apply(Coalition s) const {
    std::uint32_t out = 0;
    for (int p = 1; p <= players(); ++p)
      if (s.contains(p)) out |= std::uint32_t{1} << (apply(p) - 1);
    return Coalition(out);
  }

  Permutation inverse() const {
    std::vector<int> inv(map_.size());
    for (int p = 1; p <= players(); ++p) inv[static_cast<std::size_t>(apply(p) - 1)] = p;
    return Permutation(std::move(inv));
  }

  /// (this ∘ other)(p) = this(other(p)).
  Permutation compose(const Permutation& other) const {
    std::vector<int> out(map_.size());
    for (int p = 1; p <= players(); ++p) out[p - 1] = apply(other.apply(p));
    return Permutation(std::move(out));
  }

  const std::vector<int>& map() const { return map_; }

 private:
  std::vector<int> map_;
};

// ---------------------------------------------------------------------------
// Game constructors
// ---------------------------------------------------------------------------

/// u_T(S) = 1 iff T ⊆ S.
template <class R>
Game<R> unanimity_game(int n, Coalition t) {
  validate_player_count(n);
  if (t.is_empty()) throw EmptyCoalition("unanimity game needs a nonempty coalition");
  std::vector<R> w(subset_count(n), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < subset_count(n); ++m)
    if (t.subset_of(Coalition(m))) w[m] = ScalarTraits<R>::from_long(1);
  return Game<R>(n, std::move(w));
}

/// e_S(T) = 1 iff T = S. Spans the game space; used for coefficient extraction.
template <class R>
Game<R> indicator_game(int n, Coalition s) {
  validate_player_count(n);
  if (s.is_empty()) throw EmptyCoalition("indicator game needs a nonempty coalition");
  std::vector<R> w(subset_count(n), ScalarTraits<R>::zero());
  w[s.mask()] = ScalarTraits<R>::from_long(1);
  return Game<R>(n, std::move(w));
}

/// v*(S) = v(N) - v(N\S).
template <class R>
Game<R> dual_game(const Game<R>& v) {
  const std::uint32_t full = v.grand().mask();
  std::vector<R> w(v.table_size());
  for (std::uint32_t m = 0; m <= full; ++m) w[m] = v.worth(full) - v.worth(full & ~m);
  return Game<R>(v.players(), std::move(w));
}

/// Additive game induced by x: worth(S) = sum of x over S.
template <class R>
Game<R> additive_game(const Allocation<R>& x) {
  const int n = x.players();
  std::vector<R> w(subset_count(n), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < subset_count(n); ++m) {
    const int low = std::countr_zero(m) + 1;
    w[m] = w[m & (m - 1)] + x.pay(low);
  }
  return Game<R>(n, std::move(w));
}

/// (πv)(πS) = v(S).
template <class R>
Game<R> permute_game(const Game<R>& v, const Permutation& pi) {
  if (pi.players() != v.players()) throw InvalidPermutation("permutation size mismatch");
  std::vector<R> w(v.table_size());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) w[pi.apply(Coalition(m)).mask()] = v.worth(m);
  return Game<R>(v.players(), std::move(w));
}

/// v^t: equal to v except worth(N) = t.
template <class R>
Game<R> replace_grand(const Game<R>& v, const R& t) {
  std::vector<R> w = v.table();
  w[v.grand().mask()] = t;
  return Game<R>(v.players(), std::move(w));
}

/// Nullified game v|_S: worth(T) = v(T ∩ S). Players outside S become null.
template <class R>
Game<R> nullified_game(const Game<R>& v, Coalition s) {
  std::vector<R> w(v.table_size());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) w[m] = v.worth(m & s.mask());
  return Game<R>(v.players(), std::move(w));
}

/// Pointwise linear combination of same-population games.
template <class R>
Game<R> linear_combination(const std::vector<std::pair<R, const Game<R>*>>& terms) {
  if (terms.empty()) throw Error("linear_combination needs at least one term");
  const int n = terms.front().second->players();
  std::vector<R> w(subset_count(n), ScalarTraits<R>::zero());
  for (const auto& [coeff, game] : terms) {
    if (game->players() != n)
      throw MixedPlayerCount("linear_combination requires a common player count");
    for (std::uint32_t m = 0; m < subset_count(n); ++m) w[m] += coeff * game->worth(m);
  }
  w[0] = ScalarTraits<R>::zero();
  return Game<R>(n, std::move(w));
}

template <class R>
Game<R> linear_combination(std::initializer_list<std::pair<R, const Game<R>*>> terms) {
  return linear_combination(std::vector<std::pair<R, const Game<R>*>>(terms));
}

/// Set of players whose marginal contribution is zero everywhere
/// (exact in rational mode, |margin| <= tol absolute in float mode).
template <class R>
Coalition null_players(const Game<R>& v, double tol = kTolNull) {
  const int n = v.players();
  std::uint32_t nulls = 0;
  for (int p = 1; p <= n; ++p) {
    const std::uint32_t bit = std::uint32_t{1} << (p - 1);
    bool is_null = true;
    for (std::uint32_t m = 0; m < v.table_size() && is_null; ++m) {
      if (m & bit) continue;
      const R margin = v.worth(m | bit) - v.worth(m);
      if constexpr (ScalarTraits<R>::exact) {
        is_null = margin == ScalarTraits<R>::zero();
      } else {
        is_null = ScalarTraits<R>::abs(margin) <= tol;
      }
    }
    if (is_null) nulls |= bit;
  }
  return Coalition(nulls);
}

}  // namespace tug
