#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tug/game.hpp"
#include "tug/rng.hpp"

namespace tug {

/// How axiom checkers sample: trial count, player-count range, worth range,
/// and the seed everything is derived from. Reproducible by construction.
struct SamplePlan {
  int trials = 200;
  int n_min = 3;
  int n_max = 4;
  double worth_lo = -10.0;
  double worth_hi = 10.0;
  std::uint64_t seed = 0xC0FFEE;
  double tol = kTolCheck;  // verdict tolerance; ignored in rational mode

  static SamplePlan with_n(int n, int trials = 200, std::uint64_t seed = 0xC0FFEE) {
    SamplePlan p;
    p.n_min = p.n_max = n;
    p.trials = trials;
    p.seed = seed;
    return p;
  }
};

/// One uniform worth draw. Rational mode draws on the grid k/16 so that
/// exact suites stay exact while covering the same range.
template <class R>
R sample_worth(Rng& rng, double lo, double hi) {
  if constexpr (ScalarTraits<R>::exact) {
    const long long den = 16;
    const long long klo = static_cast<long long>(lo * den);
    const long long khi = static_cast<long long>(hi * den);
    return Rational(rng.uniform_int(klo, khi), den);
  } else {
    return rng.uniform(lo, hi);
  }
}

template <class R>
Game<R> sample_uniform_game(int n, Rng& rng, double lo = -10.0, double hi = 10.0) {
  std::vector<R> w(subset_count(n), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < subset_count(n); ++m) w[m] = sample_worth<R>(rng, lo, hi);
  return Game<R>(n, std::move(w));
}

template <class R>
Allocation<R> sample_allocation(int n, Rng& rng, double lo = -10.0, double hi = 10.0) {
  Allocation<R> x(n);
  for (int p = 1; p <= n; ++p) x.pay(p) = sample_worth<R>(rng, lo, hi);
  return x;
}

inline Permutation sample_permutation(int n, Rng& rng) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(map[i], map[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  return Permutation(std::move(map));
}

// ---------------------------------------------------------------------------
// Named generators (the CLI `gen` registry; structured samplers for axioms
// whose hypotheses quantify over measure-zero game classes).
// ---------------------------------------------------------------------------

template <class R>
Game<R> generate_additive_game(int n, Rng& rng, double lo, double hi) {
  return additive_game(sample_allocation<R>(n, rng, lo, hi));
}

/// Random mixture of n unanimity games with uniform coefficients.
template <class R>
Game<R> generate_unanimity_mixture(int n, Rng& rng, double lo, double hi) {
  Game<R> acc(n);
  for (int k = 0; k < n; ++k) {
    const Coalition t(static_cast<std::uint32_t>(rng.uniform_int(1, subset_count(n) - 1)));
    const Game<R> u = unanimity_game<R>(n, t);
    const R c = sample_worth<R>(rng, lo, hi);
    acc = linear_combination<R>({{ScalarTraits<R>::from_long(1), &acc}, {c, &u}});
  }
  return acc;
}

/// w|_{i,j} for uniform w: every player other than i and j is null.
template <class R>
Game<R> generate_two_active(int n, int i, int j, Rng& rng, double lo, double hi) {
  return nullified_game(sample_uniform_game<R>(n, rng, lo, hi), Coalition::of({i, j}));
}

/// w|_{i} for uniform w: every player other than i is null.
template <class R>
Game<R> generate_single_active(int n, int i, Rng& rng, double lo, double hi) {
  return nullified_game(sample_uniform_game<R>(n, rng, lo, hi), Coalition::single(i));
}

/// Worth depends on coalition size only.
template <class R>
Game<R> generate_symmetric_game(int n, Rng& rng, double lo, double hi) {
  std::vector<R> by_size(static_cast<std::size_t>(n) + 1, ScalarTraits<R>::zero());
  for (int s = 1; s <= n; ++s) by_size[s] = sample_worth<R>(rng, lo, hi);
  std::vector<R> w(subset_count(n));
  for (std::uint32_t m = 0; m < subset_count(n); ++m)
    w[m] = by_size[static_cast<std::size_t>(Coalition(m).size())];
  return Game<R>(n, std::move(w));
}

/// Generator registry used by the CLI `gen` subcommand. `params` carries the
/// player arguments of two_active / single_active.
template <class R>
Game<R> generate_game(const std::string& name, int n, std::uint64_t seed,
                      const std::vector<int>& params = {}, double lo = -10.0, double hi = 10.0) {
  validate_player_count(n);
  Rng rng = Rng(seed).stream(0x6e67);  // one fixed stream per generator call
  if (name == "uniform") return sample_uniform_game<R>(n, rng, lo, hi);
  if (name == "additive") return generate_additive_game<R>(n, rng, lo, hi);
  if (name == "unanimity_mixture") return generate_unanimity_mixture<R>(n, rng, lo, hi);
  if (name == "symmetric") return generate_symmetric_game<R>(n, rng, lo, hi);
  if (name == "two_active") {
    if (params.size() != 2 || params[0] < 1 || params[0] > n || params[1] < 1 || params[1] > n ||
        params[0] == params[1])
      throw UnknownGenerator("two_active needs two distinct players in 1..n");
    return generate_two_active<R>(n, params[0], params[1], rng, lo, hi);
  }
  if (name == "single_active") {
    if (params.size() != 1 || params[0] < 1 || params[0] > n)
      throw UnknownGenerator("single_active needs one player in 1..n");
    return generate_single_active<R>(n, params[0], rng, lo, hi);
  }
  throw UnknownGenerator("unknown generator '" + name + "'");
}

}  // namespace tug
