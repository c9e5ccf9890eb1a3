#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tug/game.hpp"
#include "tug/solution.hpp"

namespace tug {

enum class ReducedGameKind { AC, HM, F, M, CompUp, CompDownInsider, CompDownOutsider };

inline const char* to_string(ReducedGameKind k) {
  switch (k) {
    case ReducedGameKind::AC: return "AC";
    case ReducedGameKind::HM: return "HM";
    case ReducedGameKind::F: return "F";
    case ReducedGameKind::M: return "M";
    case ReducedGameKind::CompUp: return "U";
    case ReducedGameKind::CompDownInsider: return "D_I";
    case ReducedGameKind::CompDownOutsider: return "D_O";
  }
  return "?";
}

/// U(x,v)(S) = v(S) - sum_{i in S} x_i.
template <class R>
Game<R> comp_up_residual(const Allocation<R>& x, const Game<R>& v) {
  const Game<R> xhat = additive_game(x);
  std::vector<R> w(v.table_size());
  for (std::uint32_t m = 0; m < v.table_size(); ++m) w[m] = v.worth(m) - xhat.worth(m);
  return Game<R>(v.players(), std::move(w));
}

/// D_I(x,v): worth(N) = v(N); worth(S) = sum_{i in S} x_i for S ⊊ N.
template <class R>
Game<R> comp_down_insider(const Allocation<R>& x, const Game<R>& v) {
  std::vector<R> w = additive_game(x).table();
  w[v.grand().mask()] = v.grand_worth();
  return Game<R>(v.players(), std::move(w));
}

/// D_O(x,v): worth(S) = v(N) - sum_{i not in S} x_i for S ≠ ∅.
template <class R>
Game<R> comp_down_outsider(const Allocation<R>& x, const Game<R>& v) {
  const int n = v.players();
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m) {
    R outside = ScalarTraits<R>::zero();
    for (int p = 1; p <= n; ++p)
      if (!(m >> (p - 1) & 1u)) outside += x.pay(p);
    w[m] = v.grand_worth() - outside;
  }
  return Game<R>(n, std::move(w));
}

/// R^{AC,S}(x,v)(T) = v(T) - sum_{i in T\S} x_i. The axiom quantifies over
/// nonempty S ⊊ N; S = ∅ is allowed here as plumbing, S = N is rejected.
template <class R>
Game<R> reduce_ac(const Allocation<R>& x, const Game<R>& v, Coalition s) {
  if (s == v.grand()) throw NotProperSubset("active coalition must be a proper subset of N");
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m) {
    R deducted = ScalarTraits<R>::zero();
    std::uint32_t outsiders = m & ~s.mask();
    for (; outsiders != 0; outsiders &= outsiders - 1)
      deducted += x.pay(std::countr_zero(outsiders) + 1);
    w[m] = v.worth(m) - deducted;
  }
  return Game<R>(v.players(), std::move(w));
}

namespace detail {

inline void require_reducible(Coalition s, const char* which) {
  if (s.size() < 2)
    throw CoalitionTooSmall(std::string(which) + " reduction needs |S| >= 2, got |S| = " +
                            std::to_string(s.size()));
}

}  // namespace detail

/// R^{HM,S}(φ(v),v)(T) = v(T ∪ (N\S)) - sum_{j in N\S} φ_j(v|_{T ∪ (N\S)})
/// when T ∩ S ≠ ∅, else 0. Takes the rule itself: the right-hand side needs
/// φ on every nullified game v|_{T ∪ (N\S)}, not just the allocation φ(v).
/// Rule evaluations are memoized per call on the nullifying coalition.
template <class R>
Game<R> reduce_hm(const SolutionRule<R>& rule, const Game<R>& v, Coalition s) {
  detail::require_reducible(s, "HM");
  const int n = v.players();
  const std::uint32_t outside = s.complement(n).mask();
  std::unordered_map<std::uint32_t, Allocation<R>> memo;
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m) {
    if ((m & s.mask()) == 0) continue;
    const std::uint32_t base = m | outside;
    auto it = memo.find(base);
    if (it == memo.end()) it = memo.emplace(base, rule(nullified_game(v, Coalition(base)))).first;
    R deducted = ScalarTraits<R>::zero();
    for (std::uint32_t o = outside; o != 0; o &= o - 1)
      deducted += it->second.pay(std::countr_zero(o) + 1);
    w[m] = v.worth(base) - deducted;
  }
  return Game<R>(n, std::move(w));
}

/// R^{F,S}(φ(v),v)(T) = v(N) - sum_{j in N\S} φ_j(v|_{j}) if S ⊆ T,
/// else v(T ∩ S).
template <class R>
Game<R> reduce_f(const SolutionRule<R>& rule, const Game<R>& v, Coalition s) {
  detail::require_reducible(s, "F");
  const int n = v.players();
  R deducted = ScalarTraits<R>::zero();
  for (std::uint32_t o = s.complement(n).mask(); o != 0; o &= o - 1) {
    const int j = std::countr_zero(o) + 1;
    deducted += rule(nullified_game(v, Coalition::single(j))).pay(j);
  }
  const R top = v.grand_worth() - deducted;
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m)
    w[m] = s.subset_of(Coalition(m)) ? top : v.worth(m & s.mask());
  w[0] = ScalarTraits<R>::zero();
  return Game<R>(n, std::move(w));
}

/// R^{M,S}(φ(v),v)(T) = v(T ∪ (N\S)) - sum_{j in N\S} φ_j(v*|_{j})
/// when T ∩ S ≠ ∅, else 0. Note v*|_{j} = (v(N)-v(N\{j})) u_{j}.
template <class R>
Game<R> reduce_m(const SolutionRule<R>& rule, const Game<R>& v, Coalition s) {
  detail::require_reducible(s, "M");
  const int n = v.players();
  const Game<R> dual = dual_game(v);
  R deducted = ScalarTraits<R>::zero();
  for (std::uint32_t o = s.complement(n).mask(); o != 0; o &= o - 1) {
    const int j = std::countr_zero(o) + 1;
    deducted += rule(nullified_game(dual, Coalition::single(j))).pay(j);
  }
  const std::uint32_t outside = s.complement(n).mask();
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m)
    if ((m & s.mask()) != 0) w[m] = v.worth(m | outside) - deducted;
  return Game<R>(n, std::move(w));
}

template <class R>
Game<R> reduce(ReducedGameKind kind, const SolutionRule<R>& rule, const Game<R>& v, Coalition s) {
  switch (kind) {
    case ReducedGameKind::HM: return reduce_hm(rule, v, s);
    case ReducedGameKind::F: return reduce_f(rule, v, s);
    case ReducedGameKind::M: return reduce_m(rule, v, s);
    default: throw Error("reduce() dispatches the nullified-game reductions only");
  }
}

}  // namespace tug
