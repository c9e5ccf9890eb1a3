#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tug/game.hpp"
#include "tug/linalg.hpp"
#include "tug/sampling.hpp"
#include "tug/solution.hpp"

namespace tug {

// ---------------------------------------------------------------------------
// Canonical values
// ---------------------------------------------------------------------------

/// Equal division of the grand-coalition worth.
template <class R>
Allocation<R> ed_value(const Game<R>& v) {
  const int n = v.players();
  Allocation<R> out(n);
  const R share = v.grand_worth() / ScalarTraits<R>::from_long(n);
  for (int p = 1; p <= n; ++p) out.pay(p) = share;
  return out;
}

/// Stand-alone worth plus equal split of the residual surplus.
template <class R>
Allocation<R> cis_value(const Game<R>& v) {
  const int n = v.players();
  R singles = ScalarTraits<R>::zero();
  for (int p = 1; p <= n; ++p) singles += v.worth(Coalition::single(p));
  const R residual = (v.grand_worth() - singles) / ScalarTraits<R>::from_long(n);
  Allocation<R> out(n);
  for (int p = 1; p <= n; ++p) out.pay(p) = v.worth(Coalition::single(p)) + residual;
  return out;
}

/// CIS value of the dual game.
template <class R>
Allocation<R> ensc_value(const Game<R>& v) {
  return cis_value(dual_game(v));
}

/// Subset-sum marginal form: sum over S not containing i of
/// |S|!(n-|S|-1)!/n! (v(S ∪ i) - v(S)).
template <class R>
Allocation<R> shapley_value(const Game<R>& v) {
  const int n = v.players();
  std::vector<R> weight(static_cast<std::size_t>(n));
  const BigInt nfact = factorial_big(n);
  for (int s = 0; s < n; ++s)
    weight[s] = fraction_as<R>(factorial_big(s) * factorial_big(n - s - 1), nfact);
  Allocation<R> out(n);
  for (std::uint32_t m = 0; m < v.table_size(); ++m) {
    const R& w = weight[static_cast<std::size_t>(Coalition(m).size())];
    for (int p = 1; p <= n; ++p) {
      const std::uint32_t bit = std::uint32_t{1} << (p - 1);
      if (m & bit) continue;
      out.pay(p) += w * (v.worth(m | bit) - v.worth(m));
    }
  }
  return out;
}

/// Size-s averaging value: v(N)/n plus (n-1)/s times the gap between the
/// overall and the i-excluding averages of size-s worths. psi^n is ED.
template <class R>
Allocation<R> psi_value(const Game<R>& v, int s) {
  const int n = v.players();
  if (s < 1 || s > n)
    throw SizeOutOfRange("psi size must lie in 1..n, got " + std::to_string(s));
  if (s == n) return ed_value(v);
  R total = ScalarTraits<R>::zero();
  std::vector<R> with(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m) {
    if (Coalition(m).size() != s) continue;
    total += v.worth(m);
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1)
      with[static_cast<std::size_t>(std::countr_zero(rest))] += v.worth(m);
  }
  const R inv_all = fraction_as<R>(1, binomial_big(n, s));
  const R inv_excl = fraction_as<R>(1, binomial_big(n - 1, s));
  const R scale = fraction_as<R>(n - 1, s);
  const R base = v.grand_worth() / ScalarTraits<R>::from_long(n);
  Allocation<R> out(n);
  for (int p = 1; p <= n; ++p) {
    const R without = total - with[static_cast<std::size_t>(p - 1)];
    out.pay(p) = base + scale * (total * inv_all - without * inv_excl);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight vectors
// ---------------------------------------------------------------------------

/// Size-rescaling weights: sigma(s) multiplies every worth of size s.
template <class R>
struct SigmaWeights {
  std::vector<R> sigma;  // sigma[s-1], s = 1..n

  int players() const { return static_cast<int>(sigma.size()); }
  const R& operator()(int s) const { return sigma[static_cast<std::size_t>(s - 1)]; }
  bool efficient() const { return sigma.back() == ScalarTraits<R>::from_long(1); }

  static SigmaWeights ones(int n) {
    return SigmaWeights{std::vector<R>(static_cast<std::size_t>(n), ScalarTraits<R>::from_long(1))};
  }
};

/// Affine mixing weights over psi^1..psi^n (psi^n = ED); must sum to 1.
template <class R>
struct AffineWeights {
  std::vector<R> alpha;  // alpha[s-1], s = 1..n

  explicit AffineWeights(std::vector<R> a) : alpha(std::move(a)) {
    R sum = ScalarTraits<R>::zero();
    for (const R& x : alpha) sum += x;
    if (!close(sum, ScalarTraits<R>::from_long(1)))
      throw WeightsNotAffine("affine weights must sum to 1");
  }

  int players() const { return static_cast<int>(alpha.size()); }
  const R& operator()(int s) const { return alpha[static_cast<std::size_t>(s - 1)]; }
  const R& last() const { return alpha.back(); }
};

/// Per-size weights of the least-square objective. m(s) >= 0 with at least
/// one strictly positive s in 1..n-1; m(0) only participates through the
/// include_empty sensitivity flag.
template <class R>
struct LSWeights {
  std::vector<R> m;  // m[s], s = 0..n

  explicit LSWeights(std::vector<R> weights) : m(std::move(weights)) {
    bool positive = false;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] < ScalarTraits<R>::zero()) throw Error("least-square weights must be nonnegative");
      if (s >= 1 && s + 1 < m.size() && m[s] > ScalarTraits<R>::zero()) positive = true;
    }
    if (!positive)
      throw Error("least-square weights need some m(s) > 0 with 1 <= s <= n-1");
  }

  /// Weights given as m(1..n); m(0) defaults to zero.
  static LSWeights from_sizes(std::vector<R> one_to_n) {
    std::vector<R> all;
    all.reserve(one_to_n.size() + 1);
    all.push_back(ScalarTraits<R>::zero());
    for (auto& x : one_to_n) all.push_back(std::move(x));
    return LSWeights(std::move(all));
  }

  int players() const { return static_cast<int>(m.size()) - 1; }
  const R& operator()(int s) const { return m[static_cast<std::size_t>(s)]; }
};

/// v_sigma(S) = sigma(|S|) v(S) for nonempty S, then the Shapley value.
template <class R>
Allocation<R> sigma_shapley_value(const Game<R>& v, const SigmaWeights<R>& sigma) {
  const int n = v.players();
  if (sigma.players() != n) throw MixedPlayerCount("sigma weights sized for a different n");
  std::vector<R> w(v.table_size(), ScalarTraits<R>::zero());
  for (std::uint32_t m = 1; m < v.table_size(); ++m) w[m] = sigma(Coalition(m).size()) * v.worth(m);
  return shapley_value(Game<R>(n, std::move(w)));
}

// ---------------------------------------------------------------------------
// Coefficient extraction (linear-rule representation) and the sigma fit
// ---------------------------------------------------------------------------

/// Representation of a linear rule: phi_i(v) = sum_S p_i(S) v(S), with the
/// symmetric (p_s, q_s) reduction when p_i(S) depends only on |S| and
/// membership, and the ELS flags p_n = 1/n, q_k = -k/(n-k) p_k.
template <class R>
struct LinearCoefficients {
  int n = 0;
  std::vector<std::vector<R>> per_player;  // [player-1][mask], nonempty masks
  bool symmetric = false;
  std::vector<R> p;  // p[s-1], s = 1..n
  std::vector<R> q;  // q[s-1], s = 1..n-1
  bool els = false;
};

/// Evaluates the rule on the indicator-game basis, so p_i(S) = rule_i(e_S).
/// A three-pair additivity spot-check guards against nonlinear rules.
template <class R>
LinearCoefficients<R> extract_coefficients(const SolutionRule<R>& rule, int n, double tol = kTolEq) {
  validate_player_count(n);
  Rng rng(0x11CEA5ED);
  for (int pair = 0; pair < 3; ++pair) {
    Rng t = rng.stream(static_cast<std::uint64_t>(pair));
    const Game<R> v = sample_uniform_game<R>(n, t);
    const Game<R> w = sample_uniform_game<R>(n, t);
    const Game<R> sum = linear_combination<R>(
        {{ScalarTraits<R>::from_long(1), &v}, {ScalarTraits<R>::from_long(1), &w}});
    const Allocation<R> lhs = rule(sum);
    const Allocation<R> rv = rule(v);
    const Allocation<R> rw = rule(w);
    for (int p = 1; p <= n; ++p)
      if (!close(lhs.pay(p), rv.pay(p) + rw.pay(p), tol))
        throw NotLinear("rule '" + rule.name + "' fails additivity spot-check");
  }

  LinearCoefficients<R> out;
  out.n = n;
  out.per_player.assign(static_cast<std::size_t>(n),
                        std::vector<R>(subset_count(n), ScalarTraits<R>::zero()));
  for (std::uint32_t m = 1; m < subset_count(n); ++m) {
    const Allocation<R> pay = rule(indicator_game<R>(n, Coalition(m)));
    for (int p = 1; p <= n; ++p) out.per_player[static_cast<std::size_t>(p - 1)][m] = pay.pay(p);
  }

  out.symmetric = true;
  out.p.assign(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  out.q.assign(static_cast<std::size_t>(n - 1), ScalarTraits<R>::zero());
  std::vector<bool> p_seen(static_cast<std::size_t>(n), false), q_seen(static_cast<std::size_t>(n - 1), false);
  for (std::uint32_t m = 1; m < subset_count(n) && out.symmetric; ++m) {
    const int s = Coalition(m).size();
    for (int p = 1; p <= n; ++p) {
      const R& coeff = out.per_player[static_cast<std::size_t>(p - 1)][m];
      if (Coalition(m).contains(p)) {
        if (!p_seen[static_cast<std::size_t>(s - 1)]) {
          out.p[static_cast<std::size_t>(s - 1)] = coeff;
          p_seen[static_cast<std::size_t>(s - 1)] = true;
        } else if (!close(out.p[static_cast<std::size_t>(s - 1)], coeff, tol)) {
          out.symmetric = false;
          break;
        }
      } else {
        if (!q_seen[static_cast<std::size_t>(s - 1)]) {
          out.q[static_cast<std::size_t>(s - 1)] = coeff;
          q_seen[static_cast<std::size_t>(s - 1)] = true;
        } else if (!close(out.q[static_cast<std::size_t>(s - 1)], coeff, tol)) {
          out.symmetric = false;
          break;
        }
      }
    }
  }
  if (!out.symmetric) {
    out.p.clear();
    out.q.clear();
    return out;
  }

  out.els = close(out.p.back(), fraction_as<R>(1, n), tol);
  for (int k = 1; k < n && out.els; ++k) {
    const R expected = -fraction_as<R>(k, n - k) * out.p[static_cast<std::size_t>(k - 1)];
    if (!close(out.q[static_cast<std::size_t>(k - 1)], expected, tol)) out.els = false;
  }
  return out;
}

/// sigma(s) = n C(n-1, s-1) p_s. Requires the symmetric form with
/// q_k = -k/(n-k) p_k; sigma-Shapley with the result reproduces the rule.
template <class R>
SigmaWeights<R> fit_sigma(const LinearCoefficients<R>& coeffs, double tol = kTolEq) {
  if (!coeffs.symmetric)
    throw NotSigmaRepresentable("coefficients lack the symmetric (p_s, q_s) form");
  const int n = coeffs.n;
  for (int k = 1; k < n; ++k) {
    const R expected = -fraction_as<R>(k, n - k) * coeffs.p[static_cast<std::size_t>(k - 1)];
    if (!close(coeffs.q[static_cast<std::size_t>(k - 1)], expected, tol))
      throw NotSigmaRepresentable("coefficients violate q_k = -k/(n-k) p_k");
  }
  SigmaWeights<R> out;
  out.sigma.resize(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s)
    out.sigma[static_cast<std::size_t>(s - 1)] =
        fraction_as<R>(BigInt(n) * binomial_big(n - 1, s - 1), 1) * coeffs.p[static_cast<std::size_t>(s - 1)];
  return out;
}

/// Recovers the affine psi-mixture weights of an ELS coefficient set:
/// alpha_s = p_s s C(n,s) / (n-1) for s < n, alpha_n = 1 - sum.
template <class R>
AffineWeights<R> affine_weights_of(const LinearCoefficients<R>& coeffs) {
  if (!coeffs.symmetric || !coeffs.els)
    throw NotSigmaRepresentable("affine weights need an ELS coefficient set");
  const int n = coeffs.n;
  std::vector<R> alpha(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  R used = ScalarTraits<R>::zero();
  for (int s = 1; s < n; ++s) {
    alpha[static_cast<std::size_t>(s - 1)] = coeffs.p[static_cast<std::size_t>(s - 1)] *
                                             fraction_as<R>(BigInt(s) * binomial_big(n, s), n - 1);
    used += alpha[static_cast<std::size_t>(s - 1)];
  }
  alpha.back() = ScalarTraits<R>::from_long(1) - used;
  return AffineWeights<R>(std::move(alpha));
}

// ---------------------------------------------------------------------------
// Potential
// ---------------------------------------------------------------------------

/// P(v) = sum over nonempty S of (|S|-1)!(n-|S|)!/n! v(S); the empty set is
/// excluded (its weight is undefined and v(empty) = 0 regardless).
/// Satisfies Sh_i(v) = P(v) - P(v|_{N\{i}}).
template <class R>
R potential(const Game<R>& v) {
  const int n = v.players();
  const BigInt nfact = factorial_big(n);
  std::vector<R> weight(static_cast<std::size_t>(n) + 1, ScalarTraits<R>::zero());
  for (int s = 1; s <= n; ++s)
    weight[static_cast<std::size_t>(s)] = fraction_as<R>(factorial_big(s - 1) * factorial_big(n - s), nfact);
  R out = ScalarTraits<R>::zero();
  for (std::uint32_t m = 1; m < v.table_size(); ++m)
    out += weight[static_cast<std::size_t>(Coalition(m).size())] * v.worth(m);
  return out;
}

// ---------------------------------------------------------------------------
// Least-square values
// ---------------------------------------------------------------------------

/// Minimizes sum_S m(|S|) (e(S,x) - mean excess)^2 over the efficiency
/// hyperplane, via the exact first-order stationarity system with one
/// Lagrange multiplier. The sum runs over nonempty S (matching the index
/// set of the mean excess); include_empty adds the S = empty term weighted
/// by m(0), which shifts the objective but not the minimizer.
template <class R>
Allocation<R> least_square_value(const Game<R>& v, const LSWeights<R>& weights,
                                 bool include_empty = false) {
  const int n = v.players();
  if (weights.players() != n) throw MixedPlayerCount("least-square weights sized for a different n");
  const std::uint32_t nsub = subset_count(n) - 1;
  const R c = fraction_as<R>(BigInt(1) << (n - 1), nsub);  // d(mean excess)/d(-x_i)
  R vbar = ScalarTraits<R>::zero();
  for (std::uint32_t m = 1; m <= nsub; ++m) vbar += v.worth(m);
  vbar = vbar / ScalarTraits<R>::from_long(nsub);

  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  detail::Matrix<R> a(dim, std::vector<R>(dim, ScalarTraits<R>::zero()));
  std::vector<R> b(dim, ScalarTraits<R>::zero());
  // Stationarity rows: for each i, sum_S m_s (e_S - mean)([i in S] - c) is
  // constant across i (the Lagrange column); expand e_S - mean in x.
  for (int i = 1; i <= n; ++i) {
    auto& row = a[static_cast<std::size_t>(i - 1)];
    for (std::uint32_t m = include_empty ? 0 : 1; m <= nsub; ++m) {
      const R& ms = weights(Coalition(m).size());
      if (ms == ScalarTraits<R>::zero()) continue;
      const R w = ms * ((Coalition(m).contains(i) ? ScalarTraits<R>::from_long(1)
                                                  : ScalarTraits<R>::zero()) -
                        c);
      if (w == ScalarTraits<R>::zero()) continue;
      b[static_cast<std::size_t>(i - 1)] -= w * (v.worth(m) - vbar);
      for (int j = 1; j <= n; ++j) {
        const R dcoeff = (Coalition(m).contains(j) ? ScalarTraits<R>::from_long(-1)
                                                   : ScalarTraits<R>::zero()) +
                         c;
        row[static_cast<std::size_t>(j - 1)] += w * dcoeff;
      }
    }
    row[dim - 1] = ScalarTraits<R>::from_long(1);
  }
  for (int j = 1; j <= n; ++j) a[dim - 1][static_cast<std::size_t>(j - 1)] = ScalarTraits<R>::from_long(1);
  b[dim - 1] = v.grand_worth();

  std::vector<R> solved = detail::solve_linear(std::move(a), std::move(b));
  solved.resize(static_cast<std::size_t>(n));
  return Allocation<R>(std::move(solved));
}

// ---------------------------------------------------------------------------
// Built-in rules
// ---------------------------------------------------------------------------

template <class R>
SolutionRule<R> ed_rule() {
  return {"ed", [](const Game<R>& v) { return ed_value(v); }, {}};
}

template <class R>
SolutionRule<R> cis_rule() {
  return {"cis", [](const Game<R>& v) { return cis_value(v); }, {}};
}

template <class R>
SolutionRule<R> ensc_rule() {
  return {"ensc", [](const Game<R>& v) { return ensc_value(v); }, {}};
}

template <class R>
SolutionRule<R> shapley_rule() {
  return {"shapley", [](const Game<R>& v) { return shapley_value(v); }, {}};
}

template <class R>
SolutionRule<R> psi_rule(int s) {
  return {"psi:" + std::to_string(s), [s](const Game<R>& v) { return psi_value(v, s); }, {}};
}

template <class R>
SolutionRule<R> sigma_shapley_rule(SigmaWeights<R> sigma, std::string name = "sigma-shapley") {
  return {std::move(name),
          [sigma = std::move(sigma)](const Game<R>& v) { return sigma_shapley_value(v, sigma); },
          {}};
}

/// Affine combination of the psi family; always an ELS value.
template <class R>
SolutionRule<R> affine_combination_rule(AffineWeights<R> alpha, std::string name = "affine") {
  return {std::move(name),
          [alpha = std::move(alpha)](const Game<R>& v) {
            const int n = v.players();
            if (alpha.players() != n) throw MixedPlayerCount("affine weights sized for a different n");
            Allocation<R> out(n);
            for (int s = 1; s <= n; ++s) {
              if (alpha(s) == ScalarTraits<R>::zero()) continue;
              const Allocation<R> part = psi_value(v, s);
              for (int p = 1; p <= n; ++p) out.pay(p) += alpha(s) * part.pay(p);
            }
            return out;
          },
          {}};
}

template <class R>
SolutionRule<R> least_square_rule(LSWeights<R> weights, std::string name = "least-square") {
  return {std::move(name),
          [weights = std::move(weights)](const Game<R>& v) {
            return least_square_value(v, weights);
          },
          {}};
}

// --- Counterexample rules used by the axiom-independence suites -------------

/// pay_i = v({i}).
template <class R>
SolutionRule<R> standalone_rule() {
  return {"standalone",
          [](const Game<R>& v) {
            Allocation<R> out(v.players());
            for (int p = 1; p <= v.players(); ++p) out.pay(p) = v.worth(Coalition::single(p));
            return out;
          },
          {}};
}

/// pay_i = v(N) - v(N\{i}).
template <class R>
SolutionRule<R> marginal_rule() {
  return {"marginal",
          [](const Game<R>& v) {
            Allocation<R> out(v.players());
            for (int p = 1; p <= v.players(); ++p)
              out.pay(p) = v.grand_worth() - v.worth(v.grand().without(p));
            return out;
          },
          {}};
}

/// pay_i = v(N) for the dictator, zero for everyone else.
template <class R>
SolutionRule<R> dictator_rule(int dictator) {
  return {"dictator:" + std::to_string(dictator),
          [dictator](const Game<R>& v) {
            if (dictator < 1 || dictator > v.players())
              throw DomainGuardFailed("dictator player out of range");
            Allocation<R> out(v.players());
            out.pay(dictator) = v.grand_worth();
            return out;
          },
          {}};
}

/// pay_i = v({i}) / sum_k v({k}) * v(N); needs a nonzero singleton sum.
template <class R>
SolutionRule<R> prop_division_rule() {
  auto singleton_sum = [](const Game<R>& v) {
    R s = ScalarTraits<R>::zero();
    for (int p = 1; p <= v.players(); ++p) s += v.worth(Coalition::single(p));
    return s;
  };
  return {"propdiv",
          [singleton_sum](const Game<R>& v) {
            const R s = singleton_sum(v);
            Allocation<R> out(v.players());
            for (int p = 1; p <= v.players(); ++p)
              out.pay(p) = v.worth(Coalition::single(p)) / s * v.grand_worth();
            return out;
          },
          [singleton_sum](const Game<R>& v) {
            const R s = singleton_sum(v);
            if constexpr (ScalarTraits<R>::exact) return s != ScalarTraits<R>::zero();
            else return std::fabs(ScalarTraits<R>::to_double(s)) > 1e-12;
          }};
}

namespace detail {

template <class R>
R integer_power(const R& base, long long e) {
  R out = ScalarTraits<R>::from_long(1);
  R acc = base;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) out *= acc;
    acc *= acc;
  }
  return out;
}

}  // namespace detail

/// pay_i = v({i})^alpha + (v(N) - sum_k v({k})^alpha)/n. Non-integer alpha
/// keeps the rule real-valued only on nonnegative singletons (guarded);
/// rational mode supports integer exponents only.
template <class R>
SolutionRule<R> power_rule(double alpha) {
  const bool integral = alpha == std::floor(alpha);
  const long long e = static_cast<long long>(alpha);
  auto pow_r = [alpha, integral, e](const R& base) -> R {
    if constexpr (ScalarTraits<R>::exact) {
      if (!integral || e < 0)
        throw DomainGuardFailed("power rule needs a nonnegative integer exponent in rational mode");
      return detail::integer_power(base, e);
    } else {
      return std::pow(base, alpha);
    }
  };
  auto guard = [alpha, integral](const Game<R>& v) {
    if (integral) return true;
    for (int p = 1; p <= v.players(); ++p)
      if (v.worth(Coalition::single(p)) < ScalarTraits<R>::zero()) return false;
    return true;
  };
  std::string name = "power:" + ScalarTraits<double>::str(alpha);
  return {std::move(name),
          [pow_r](const Game<R>& v) {
            const int n = v.players();
            R powered = ScalarTraits<R>::zero();
            Allocation<R> out(n);
            for (int p = 1; p <= n; ++p) {
              out.pay(p) = pow_r(v.worth(Coalition::single(p)));
              powered += out.pay(p);
            }
            const R residual = (v.grand_worth() - powered) / ScalarTraits<R>::from_long(n);
            for (int p = 1; p <= n; ++p) out.pay(p) += residual;
            return out;
          },
          std::move(guard)};
}

}  // namespace tug
