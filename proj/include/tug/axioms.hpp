#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tug/game.hpp"
#include "tug/linalg.hpp"
#include "tug/sampling.hpp"
#include "tug/solution.hpp"
#include "tug/transforms.hpp"
#include "tug/values.hpp"

namespace tug {

/// Everything needed to replay a violation: the offending game(s), the
/// quantifier instantiation, and both sides of the failed equality.
template <class R>
struct Witness {
  Game<R> game;
  std::optional<Game<R>> second_game;  // linearity needs a pair
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<R> expected;
  std::vector<R> actual;
  R deviation = ScalarTraits<R>::zero();
  int trial = 0;
};

/// Verdict of one falsification run. Checkers are falsifiers, not provers:
/// a clean run means "passed the sample", never "proved".
template <class R>
struct CheckReport {
  std::string axiom;
  std::string rule;
  bool violated = false;
  int trials_run = 0;
  std::uint64_t seed = 0;
  std::optional<Witness<R>> witness;

  bool passed_sample() const { return !violated; }
};

namespace detail {

inline int pick_n(const SamplePlan& plan, Rng& rng) {
  if (plan.n_min == plan.n_max) return plan.n_min;
  return static_cast<int>(rng.uniform_int(plan.n_min, plan.n_max));
}

template <class R, class Fn>
Game<R> sample_admissible(const SolutionRule<R>& rule, Rng& rng, Fn&& make) {
  for (int tries = 0; tries < 256; ++tries) {
    Game<R> g = make(rng);
    if (rule.admits(g)) return g;
  }
  throw DomainGuardFailed("sampler cannot reach the domain of rule '" + rule.name + "'");
}

template <class R>
Game<R> sample_admissible_uniform(const SolutionRule<R>& rule, int n, Rng& rng,
                                  const SamplePlan& plan) {
  return sample_admissible(rule, rng, [&](Rng& r) {
    return sample_uniform_game<R>(n, r, plan.worth_lo, plan.worth_hi);
  });
}

template <class R>
R max_deviation(const std::vector<R>& a, const std::vector<R>& b) {
  R out = ScalarTraits<R>::zero();
  for (std::size_t k = 0; k < a.size(); ++k)
    out = std::max(out, ScalarTraits<R>::abs(a[k] - b[k]));
  return out;
}

template <class R>
bool vectors_close(const std::vector<R>& a, const std::vector<R>& b, double tol) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!close(a[k], b[k], tol)) return false;
  return true;
}

template <class R>
CheckReport<R> fresh_report(const char* axiom, const SolutionRule<R>& rule,
                            const SamplePlan& plan) {
  CheckReport<R> rep;
  rep.axiom = axiom;
  rep.rule = rule.name;
  rep.seed = plan.seed;
  return rep;
}

template <class R>
void record(CheckReport<R>& rep, Witness<R> w) {
  w.deviation = max_deviation(w.expected, w.actual);
  rep.violated = true;
  rep.witness = std::move(w);
}

/// Values of t exercised by the composition checkers: the two pivotal
/// values first (t = v(N) drives the renegotiation lemmas), then draws.
template <class R>
std::vector<R> composition_ts(const Game<R>& v, Rng& rng, int extra = 3) {
  std::vector<R> ts{v.grand_worth(), ScalarTraits<R>::zero()};
  for (int k = 0; k < extra; ++k) ts.push_back(sample_worth<R>(rng, -20.0, 20.0));
  return ts;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Basic axioms
// ---------------------------------------------------------------------------

/// (E): payoffs sum to v(N).
template <class R>
CheckReport<R> check_E(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("E", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const Game<R> v = detail::sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const R total = rule(v).total();
    if (!close(total, v.grand_worth(), plan.tol)) {
      detail::record(rep, Witness<R>{v, {}, {{"trial", std::to_string(trial)}},
                                     {v.grand_worth()}, {total}});
    }
  }
  return rep;
}

/// (L): phi(cv + c'w) = c phi(v) + c' phi(w).
template <class R>
CheckReport<R> check_L(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("L", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    bool done = false;
    for (int tries = 0; tries < 64 && !done; ++tries) {
      const Game<R> v = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
      const Game<R> w = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
      const R c = sample_worth<R>(rng, -5.0, 5.0);
      const R cp = sample_worth<R>(rng, -5.0, 5.0);
      const Game<R> combo = linear_combination<R>({{c, &v}, {cp, &w}});
      if (!rule.admits(v) || !rule.admits(w) || !rule.admits(combo)) continue;
      done = true;
      rep.trials_run = trial + 1;
      const Allocation<R> lhs = rule(combo);
      const Allocation<R> rv = rule(v);
      const Allocation<R> rw = rule(w);
      std::vector<R> rhs(static_cast<std::size_t>(n));
      for (int p = 1; p <= n; ++p) rhs[static_cast<std::size_t>(p - 1)] = c * rv.pay(p) + cp * rw.pay(p);
      if (!detail::vectors_close(lhs.values(), rhs, plan.tol)) {
        detail::record(rep, Witness<R>{v, w,
                                       {{"trial", std::to_string(trial)},
                                        {"c", ScalarTraits<R>::str(c)},
                                        {"c'", ScalarTraits<R>::str(cp)}},
                                       rhs, lhs.values()});
      }
    }
    if (!done) throw DomainGuardFailed("linearity sampler cannot stay in the rule's domain");
  }
  return rep;
}

/// (SYM): phi_i(v) = phi_{pi(i)}(pi v); exhaustive over all permutations for
/// n <= 6, sampled beyond.
template <class R>
CheckReport<R> check_SYM(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("SYM", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const Game<R> v = detail::sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const Allocation<R> base = rule(v);
    std::vector<Permutation> perms;
    if (n <= 6) {
      std::vector<int> map(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i + 1;
      do perms.emplace_back(map);
      while (std::next_permutation(map.begin(), map.end()));
    } else {
      for (int k = 0; k < 24; ++k) perms.push_back(sample_permutation(n, rng));
    }
    for (const Permutation& pi : perms) {
      const Game<R> pv = permute_game(v, pi);
      if (!rule.admits(pv)) continue;
      const Allocation<R> moved = rule(pv);
      std::vector<R> expected(static_cast<std::size_t>(n)), actual(static_cast<std::size_t>(n));
      for (int p = 1; p <= n; ++p) {
        expected[static_cast<std::size_t>(p - 1)] = base.pay(p);
        actual[static_cast<std::size_t>(p - 1)] = moved.pay(pi.apply(p));
      }
      if (!detail::vectors_close(expected, actual, plan.tol)) {
        std::string pi_text;
        for (int p = 1; p <= n; ++p) pi_text += (p > 1 ? "," : "") + std::to_string(pi.apply(p));
        detail::record(rep, Witness<R>{v, {}, {{"trial", std::to_string(trial)}, {"pi", pi_text}},
                                       expected, actual});
        break;
      }
    }
  }
  return rep;
}

/// (IGP): phi(additive x) = x.
template <class R>
CheckReport<R> check_IGP(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("IGP", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    Allocation<R> x(n);
    Game<R> xhat(n);
    bool ok = false;
    for (int tries = 0; tries < 256 && !ok; ++tries) {
      x = sample_allocation<R>(n, rng, plan.worth_lo, plan.worth_hi);
      xhat = additive_game(x);
      ok = rule.admits(xhat);
    }
    if (!ok) throw DomainGuardFailed("additive sampler cannot reach rule domain");
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(xhat);
    if (!detail::vectors_close(pay.values(), x.values(), plan.tol)) {
      detail::record(rep, Witness<R>{xhat, {}, {{"trial", std::to_string(trial)}},
                                     x.values(), pay.values()});
    }
  }
  return rep;
}

/// (RNP): phi(additive(phi(v))) = phi(v).
template <class R>
CheckReport<R> check_RNP(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("RNP", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const Game<R> v = detail::sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(v);
    const Game<R> renegotiated = additive_game(pay);
    if (!rule.admits(renegotiated)) continue;  // instance undefined for the rule
    const Allocation<R> again = rule(renegotiated);
    if (!detail::vectors_close(again.values(), pay.values(), plan.tol)) {
      detail::record(rep, Witness<R>{v, {}, {{"trial", std::to_string(trial)}},
                                     pay.values(), again.values()});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Composition axioms
// ---------------------------------------------------------------------------

namespace detail {

enum class Composition { Up, DownInsider, DownOutsider };

/// Shared driver for (CU), (CD_I), (CD_O): per sampled game, instantiate t
/// at the pivotal values and random draws. Derived games rejected by the
/// domain guard are skipped: the axioms quantify over the rule's domain.
template <class R>
CheckReport<R> check_composition(Composition which, const SolutionRule<R>& rule,
                                 const SamplePlan& plan) {
  const char* axiom = which == Composition::Up ? "CU"
                      : which == Composition::DownInsider ? "CDI"
                                                          : "CDO";
  auto rep = fresh_report(axiom, rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = pick_n(plan, rng);
    const Game<R> v = sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const Allocation<R> direct = rule(v);
    for (const R& t : composition_ts(v, rng)) {
      const Game<R> vt = replace_grand(v, t);
      if (!rule.admits(vt)) continue;
      const Allocation<R> provisional = rule(vt);
      std::vector<R> actual;
      Game<R> transformed(n);
      if (which == Composition::Up) {
        transformed = comp_up_residual(provisional, v);
        if (!rule.admits(transformed)) continue;
        const Allocation<R> residual_pay = rule(transformed);
        actual.resize(static_cast<std::size_t>(n));
        for (int p = 1; p <= n; ++p)
          actual[static_cast<std::size_t>(p - 1)] = provisional.pay(p) + residual_pay.pay(p);
      } else {
        transformed = which == Composition::DownInsider ? comp_down_insider(provisional, v)
                                                        : comp_down_outsider(provisional, v);
        if (!rule.admits(transformed)) continue;
        actual = rule(transformed).values();
      }
      if (!vectors_close(direct.values(), actual, plan.tol)) {
        record(rep, Witness<R>{v, transformed,
                               {{"trial", std::to_string(trial)}, {"t", ScalarTraits<R>::str(t)}},
                               direct.values(), actual});
        break;
      }
    }
  }
  return rep;
}

}  // namespace detail

template <class R>
CheckReport<R> check_CU(const SolutionRule<R>& rule, const SamplePlan& plan) {
  return detail::check_composition(detail::Composition::Up, rule, plan);
}

template <class R>
CheckReport<R> check_CDI(const SolutionRule<R>& rule, const SamplePlan& plan) {
  return detail::check_composition(detail::Composition::DownInsider, rule, plan);
}

template <class R>
CheckReport<R> check_CDO(const SolutionRule<R>& rule, const SamplePlan& plan) {
  return detail::check_composition(detail::Composition::DownOutsider, rule, plan);
}

// ---------------------------------------------------------------------------
// Consistency axioms
// ---------------------------------------------------------------------------

/// (AC): exhaustive over every nonempty proper S and every i in S.
template <class R>
CheckReport<R> check_AC(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("AC", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const Game<R> v = detail::sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(v);
    for (std::uint32_t s = 1; s + 1 < subset_count(n) && !rep.violated; ++s) {
      const Coalition active(s);
      const Game<R> reduced = reduce_ac(pay, v, active);
      if (!rule.admits(reduced)) continue;
      const Allocation<R> reduced_pay = rule(reduced);
      std::vector<R> expected, actual;
      for (int p : active.players()) {
        expected.push_back(pay.pay(p));
        actual.push_back(reduced_pay.pay(p));
      }
      if (!detail::vectors_close(expected, actual, plan.tol)) {
        detail::record(rep, Witness<R>{v, reduced,
                                       {{"trial", std::to_string(trial)}, {"S", active.to_string()}},
                                       expected, actual});
      }
    }
  }
  return rep;
}

/// (TLB): for each pair (i,j), fit a linear gamma on the marginal-difference
/// vectors of the indicator games plus 16 random games, then demand the fit
/// explains the reduced-game payoff difference on the fitting set and on
/// fresh sampled games.
template <class R>
CheckReport<R> check_TLB(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("TLB", rule, plan);
  Rng root(plan.seed);

  for (int n = plan.n_min; n <= plan.n_max && !rep.violated; ++n) {
    // marginal-difference vector d(v) = (v(T+i) - v(T+j))_{T subset N\{i,j}}
    const auto diff_vector = [n](const Game<R>& v, int i, int j) {
      std::vector<int> others;
      for (int p = 1; p <= n; ++p)
        if (p != i && p != j) others.push_back(p);
      const int dim = n - 2;
      std::vector<R> d(std::size_t{1} << dim);
      for (std::uint32_t k = 0; k < (std::uint32_t{1} << dim); ++k) {
        std::uint32_t t = 0;
        for (int b = 0; b < dim; ++b)
          if (k >> b & 1u) t |= std::uint32_t{1} << (others[static_cast<std::size_t>(b)] - 1);
        d[k] = v.worth(t | (std::uint32_t{1} << (i - 1))) - v.worth(t | (std::uint32_t{1} << (j - 1)));
      }
      return d;
    };
    const auto reduced_diff = [&rule](const Game<R>& v, int i, int j) {
      const Allocation<R> pay = rule(v);
      const Allocation<R> rp = rule(reduce_ac(pay, v, Coalition::of({i, j})));
      return rp.pay(i) - rp.pay(j);
    };

    std::vector<Game<R>> fit_set;
    for (std::uint32_t m = 1; m < subset_count(n); ++m)
      fit_set.push_back(indicator_game<R>(n, Coalition(m)));
    Rng fit_rng = root.stream(0xF17 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 16; ++k)
      fit_set.push_back(sample_uniform_game<R>(n, fit_rng, plan.worth_lo, plan.worth_hi));

    for (int i = 1; i <= n && !rep.violated; ++i) {
      for (int j = i + 1; j <= n && !rep.violated; ++j) {
        detail::Matrix<R> rows;
        std::vector<R> targets;
        for (const Game<R>& g : fit_set) {
          rows.push_back(diff_vector(g, i, j));
          targets.push_back(reduced_diff(g, i, j));
        }
        const std::vector<R> gamma = detail::least_squares(rows, targets);
        const auto residual_at = [&](const Game<R>& g) {
          const std::vector<R> d = diff_vector(g, i, j);
          R predicted = ScalarTraits<R>::zero();
          for (std::size_t k = 0; k < d.size(); ++k) predicted += gamma[k] * d[k];
          return std::pair<R, R>(predicted, reduced_diff(g, i, j));
        };
        const auto flag = [&](const Game<R>& g, const char* stage) {
          const auto [predicted, observed] = residual_at(g);
          if (close(predicted, observed, plan.tol)) return false;
          detail::record(rep, Witness<R>{g, {},
                                         {{"pair", std::to_string(i) + "," + std::to_string(j)},
                                          {"stage", stage},
                                          {"n", std::to_string(n)}},
                                         {predicted}, {observed}});
          return true;
        };
        for (const Game<R>& g : fit_set)
          if (flag(g, "fit")) break;
        if (rep.violated) break;
        for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
          Rng rng = root.stream(0x7E57 + static_cast<std::uint64_t>(trial));
          rep.trials_run = std::max(rep.trials_run, trial + 1);
          flag(sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi), "fresh");
        }
      }
    }
  }
  return rep;
}

/// (CM): raising one coalition's worth must not hurt its members. Sampled
/// single-coalition bumps, plus the nonnegative-coefficient certificate for
/// linear symmetric rules (a negative p_s yields a direct witness).
template <class R>
CheckReport<R> check_CM(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("CM", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    bool done = false;
    for (int tries = 0; tries < 64 && !done; ++tries) {
      const Game<R> w = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
      const Coalition t(static_cast<std::uint32_t>(rng.uniform_int(1, subset_count(n) - 1)));
      R delta = sample_worth<R>(rng, 0.0, 10.0);
      if (delta == ScalarTraits<R>::zero()) delta = ScalarTraits<R>::from_long(1);
      const Game<R> e = indicator_game<R>(n, t);
      const Game<R> v = linear_combination<R>({{ScalarTraits<R>::from_long(1), &w}, {delta, &e}});
      if (!rule.admits(w) || !rule.admits(v)) continue;
      done = true;
      rep.trials_run = trial + 1;
      const Allocation<R> before = rule(w);
      const Allocation<R> after = rule(v);
      for (int p : t.players()) {
        const bool ok = [&] {
          if constexpr (ScalarTraits<R>::exact) return after.pay(p) >= before.pay(p);
          else
            return ScalarTraits<R>::to_double(after.pay(p) - before.pay(p)) >=
                   -plan.tol * std::max({1.0, std::fabs(ScalarTraits<R>::to_double(after.pay(p))),
                                         std::fabs(ScalarTraits<R>::to_double(before.pay(p)))});
        }();
        if (!ok) {
          detail::record(rep, Witness<R>{w, v,
                                         {{"trial", std::to_string(trial)},
                                          {"T", t.to_string()},
                                          {"delta", ScalarTraits<R>::str(delta)},
                                          {"i", std::to_string(p)}},
                                         {before.pay(p)}, {after.pay(p)}});
          break;
        }
      }
    }
  }
  if (!rep.violated) {
    // certificate route: for linear symmetric rules p_s < 0 (s < n) is a
    // constructive violation with v = w + e_T on the zero game w
    const int n = plan.n_max;
    try {
      const LinearCoefficients<R> coeffs = extract_coefficients(rule, n);
      if (coeffs.symmetric) {
        for (int s = 1; s < n && !rep.violated; ++s) {
          const R& ps = coeffs.p[static_cast<std::size_t>(s - 1)];
          const bool negative = ScalarTraits<R>::exact
                                    ? ps < ScalarTraits<R>::zero()
                                    : ScalarTraits<R>::to_double(ps) < -plan.tol;
          if (!negative) continue;
          std::uint32_t mask = (std::uint32_t{1} << s) - 1;  // first size-s coalition
          const Game<R> w(n);
          const Game<R> v = indicator_game<R>(n, Coalition(mask));
          const Allocation<R> before = rule(w);
          const Allocation<R> after = rule(v);
          detail::record(rep, Witness<R>{w, v,
                                         {{"certificate", "p_" + std::to_string(s) + " < 0"},
                                          {"T", Coalition(mask).to_string()},
                                          {"delta", "1"},
                                          {"i", "1"}},
                                         {before.pay(1)}, {after.pay(1)}});
        }
      }
    } catch (const Error&) {
      // nonlinear or guard-limited rule: sampling alone decides
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Two-player and nullified-game axioms
// ---------------------------------------------------------------------------

/// (EG): on games where everyone outside {i,j} is null, gains over the
/// stand-alone worths are equal. Sampler draws w|_{i,j}, with forced
/// degenerate instances (w|_{i} and the zero game) mixed in.
template <class R>
CheckReport<R> check_EG(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("EG", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const int i = static_cast<int>(rng.uniform_int(1, n));
    int j = static_cast<int>(rng.uniform_int(1, n - 1));
    if (j >= i) ++j;
    const auto make = [&](Rng& r) {
      const Game<R> w = sample_uniform_game<R>(n, r, plan.worth_lo, plan.worth_hi);
      if (trial == 0) return Game<R>(n);                                      // zero game
      if (trial % 7 == 3) return nullified_game(w, Coalition::single(i));     // j null too
      return nullified_game(w, Coalition::of({i, j}));
    };
    const Game<R> v = detail::sample_admissible(rule, rng, make);
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(v);
    const R gain_i = pay.pay(i) - v.worth(Coalition::single(i));
    const R gain_j = pay.pay(j) - v.worth(Coalition::single(j));
    if (!close(gain_i, gain_j, plan.tol)) {
      detail::record(rep, Witness<R>{v, {},
                                     {{"trial", std::to_string(trial)},
                                      {"i", std::to_string(i)},
                                      {"j", std::to_string(j)}},
                                     {gain_i}, {gain_j}});
    }
  }
  return rep;
}

/// (MR): when every other player is null, player i receives v(N).
template <class R>
CheckReport<R> check_MR(const SolutionRule<R>& rule, const SamplePlan& plan) {
  auto rep = detail::fresh_report("MR", rule, plan);
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const int i = static_cast<int>(rng.uniform_int(1, n));
    const auto make = [&](Rng& r) {
      if (trial == 0) return Game<R>(n);  // all-null edge: every i qualifies
      const Game<R> w = sample_uniform_game<R>(n, r, plan.worth_lo, plan.worth_hi);
      return nullified_game(w, Coalition::single(i));
    };
    const Game<R> v = detail::sample_admissible(rule, rng, make);
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(v);
    if (!close(pay.pay(i), v.grand_worth(), plan.tol)) {
      detail::record(rep, Witness<R>{v, {},
                                     {{"trial", std::to_string(trial)}, {"i", std::to_string(i)}},
                                     {v.grand_worth()}, {pay.pay(i)}});
    }
  }
  return rep;
}

/// (I-NGC): exhaustive over every S with |S| >= 2 and every i in S.
template <class R>
CheckReport<R> check_NGC(ReducedGameKind kind, const SolutionRule<R>& rule,
                         const SamplePlan& plan) {
  if (plan.n_min < 3) throw PlayerCountTooSmall("nullified-game consistency needs n >= 3");
  const std::string axiom = std::string(to_string(kind)) + "-NGC";
  CheckReport<R> rep;
  rep.axiom = axiom;
  rep.rule = rule.name;
  rep.seed = plan.seed;
  Rng root(plan.seed);
  for (int trial = 0; trial < plan.trials && !rep.violated; ++trial) {
    Rng rng = root.stream(static_cast<std::uint64_t>(trial));
    const int n = detail::pick_n(plan, rng);
    const Game<R> v = detail::sample_admissible_uniform(rule, n, rng, plan);
    rep.trials_run = trial + 1;
    const Allocation<R> pay = rule(v);
    for (std::uint32_t s = 1; s < subset_count(n) && !rep.violated; ++s) {
      const Coalition keep(s);
      if (keep.size() < 2) continue;
      const Game<R> reduced = reduce(kind, rule, v, keep);
      if (!rule.admits(reduced)) continue;
      const Allocation<R> reduced_pay = rule(reduced);
      std::vector<R> expected, actual;
      for (int p : keep.players()) {
        expected.push_back(pay.pay(p));
        actual.push_back(reduced_pay.pay(p));
      }
      if (!detail::vectors_close(expected, actual, plan.tol)) {
        detail::record(rep, Witness<R>{v, reduced,
                                       {{"trial", std::to_string(trial)}, {"S", keep.to_string()}},
                                       expected, actual});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {"E",  "L",   "SYM", "IGP",    "RNP",   "CU",
                                                 "CDI", "CDO", "AC",  "TLB",    "CM",    "EG",
                                                 "MR",  "HM-NGC", "F-NGC", "M-NGC"};
  return names;
}

template <class R>
CheckReport<R> run_check(const std::string& axiom, const SolutionRule<R>& rule,
                         const SamplePlan& plan) {
  if (axiom == "E") return check_E(rule, plan);
  if (axiom == "L") return check_L(rule, plan);
  if (axiom == "SYM") return check_SYM(rule, plan);
  if (axiom == "IGP") return check_IGP(rule, plan);
  if (axiom == "RNP") return check_RNP(rule, plan);
  if (axiom == "CU") return check_CU(rule, plan);
  if (axiom == "CDI") return check_CDI(rule, plan);
  if (axiom == "CDO") return check_CDO(rule, plan);
  if (axiom == "AC") return check_AC(rule, plan);
  if (axiom == "TLB") return check_TLB(rule, plan);
  if (axiom == "CM") return check_CM(rule, plan);
  if (axiom == "EG") return check_EG(rule, plan);
  if (axiom == "MR") return check_MR(rule, plan);
  if (axiom == "HM-NGC") return check_NGC(ReducedGameKind::HM, rule, plan);
  if (axiom == "F-NGC") return check_NGC(ReducedGameKind::F, rule, plan);
  if (axiom == "M-NGC") return check_NGC(ReducedGameKind::M, rule, plan);
  throw Error("unknown axiom '" + axiom + "'");
}

}  // namespace tug
