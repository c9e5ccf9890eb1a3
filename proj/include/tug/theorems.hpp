#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tug/axioms.hpp"
#include "tug/game.hpp"
#include "tug/sampling.hpp"
#include "tug/solution.hpp"
#include "tug/transforms.hpp"
#include "tug/values.hpp"

namespace tug {

template <class R>
struct ClauseResult {
  std::string claim;
  bool ok = false;
  std::string detail;                      // short human-readable outcome
  std::optional<CheckReport<R>> report;    // present when backed by a checker
};

/// Outcome of one executable verification suite. Clauses are sampled
/// confirmations, never proofs; `refuted` means some clause found a
/// counterexample to the claim as stated.
template <class R>
struct SuiteResult {
  std::string suite;
  std::vector<ClauseResult<R>> clauses;
  std::uint64_t seed = 0;

  bool confirmed() const {
    for (const auto& c : clauses)
      if (!c.ok) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Panels: n-adaptive affine combinations derived from seeds, so a single
// rule object works across the plan's player-count range.
// ---------------------------------------------------------------------------

namespace detail {

/// Affine psi-mixture weights derived from (seed, n): the last weight is
/// pinned to beta = beta_num/beta_den, sizes 1..n-2 are dyadic grid draws,
/// and size n-1 absorbs the remainder so the weights sum to one.
template <class R>
AffineWeights<R> seeded_affine_weights(int n, std::uint64_t seed, long long beta_num,
                                       long long beta_den) {
  Rng rng(Rng::mix(seed) ^ static_cast<std::uint64_t>(n) * 0x9e37ULL);
  std::vector<R> alpha(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  const R beta = fraction_as<R>(beta_num, beta_den);
  R used = beta;
  for (int s = 1; s <= n - 2; ++s) {
    alpha[static_cast<std::size_t>(s - 1)] = fraction_as<R>(rng.uniform_int(-16, 16), 16);
    used += alpha[static_cast<std::size_t>(s - 1)];
  }
  alpha[static_cast<std::size_t>(n - 2)] = ScalarTraits<R>::from_long(1) - used;
  alpha[static_cast<std::size_t>(n - 1)] = beta;
  return AffineWeights<R>(std::move(alpha));
}

}  // namespace detail

/// ELS rule phi = sum_s alpha_s psi^s with alpha_n = beta fixed and the other
/// weights drawn from `seed` (per player count, so the rule is n-adaptive).
template <class R>
SolutionRule<R> seeded_affine_rule(std::uint64_t seed, long long beta_num, long long beta_den,
                                   std::string name) {
  return {std::move(name),
          [seed, beta_num, beta_den](const Game<R>& v) {
            const AffineWeights<R> alpha =
                detail::seeded_affine_weights<R>(v.players(), seed, beta_num, beta_den);
            const int n = v.players();
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

/// Sigma-Shapley rule with per-n weights derived from `seed`; sigma(n) = 1
/// when `efficient`, otherwise sigma(n) is a grid draw as well.
template <class R>
SolutionRule<R> seeded_sigma_rule(std::uint64_t seed, bool efficient, std::string name) {
  return {std::move(name),
          [seed, efficient](const Game<R>& v) {
            const int n = v.players();
            Rng rng(Rng::mix(seed) ^ static_cast<std::uint64_t>(n) * 0x51D3ULL);
            SigmaWeights<R> sigma;
            sigma.sigma.resize(static_cast<std::size_t>(n));
            for (int s = 1; s <= n; ++s)
              sigma.sigma[static_cast<std::size_t>(s - 1)] = fraction_as<R>(rng.uniform_int(-32, 32), 16);
            if (efficient) sigma.sigma.back() = ScalarTraits<R>::from_long(1);
            return sigma_shapley_value(v, sigma);
          },
          {}};
}

// ---------------------------------------------------------------------------
// Reconstruction from the nullified-game consistency axioms
// ---------------------------------------------------------------------------

/// Computes the unique allocation implied by (E) + (EG) + (kind-NGC).
///
/// F: pairwise gaps are the stand-alone gaps, plus efficiency.
/// M: pairwise gaps are the complement-marginal gaps, plus efficiency.
/// HM: induction on the null-player count. Base |Null| >= n-1 by
/// (E)+(EG)+(MR); base |Null| = n-2 by the two-equation system (EG gap and
/// the reduced grand worth); the step derives, for non-null i and j,
///   phi_i(v) - phi_j(v) = [phi_i + phi_j](v|_{N\j}) - [phi_i + phi_j](v|_{N\i}),
/// which recurses on strictly-more-null games only, null players receive 0,
/// and efficiency pins the level. Memoized on the nullified worth table.
template <class R>
Allocation<R> reconstruct_from_ngc(ReducedGameKind kind, const Game<R>& v) {
  const int n = v.players();
  if (n < 3) throw PlayerCountTooSmall("nullified-game reconstruction needs n >= 3");
  if (kind == ReducedGameKind::F) {
    R singles = ScalarTraits<R>::zero();
    for (int p = 1; p <= n; ++p) singles += v.worth(Coalition::single(p));
    Allocation<R> out(n);
    for (int p = 1; p <= n; ++p)
      out.pay(p) = (v.grand_worth() - singles) / ScalarTraits<R>::from_long(n) +
                   v.worth(Coalition::single(p));
    return out;
  }
  if (kind == ReducedGameKind::M) {
    R complements = ScalarTraits<R>::zero();
    for (int p = 1; p <= n; ++p) complements += v.worth(v.grand().without(p));
    Allocation<R> out(n);
    for (int p = 1; p <= n; ++p)
      out.pay(p) = (v.grand_worth() + complements) / ScalarTraits<R>::from_long(n) -
                   v.worth(v.grand().without(p));
    return out;
  }
  if (kind != ReducedGameKind::HM)
    throw Error("reconstruction is defined for the HM/F/M consistency axioms");

  std::map<std::vector<R>, Allocation<R>> memo;
  auto solve = [&](auto&& self, const Game<R>& g) -> const Allocation<R>& {
    auto it = memo.find(g.table());
    if (it != memo.end()) return it->second;
    const Coalition nulls = null_players(g);
    std::vector<int> active;
    for (int p = 1; p <= n; ++p)
      if (!nulls.contains(p)) active.push_back(p);
    Allocation<R> pay(n);
    if (active.size() == 1) {
      pay.pay(active[0]) = g.grand_worth();
    } else if (active.size() == 2) {
      const int i = active[0], j = active[1];
      const R gap = g.worth(Coalition::single(i)) - g.worth(Coalition::single(j));
      const R both = g.worth(Coalition::of({i, j}));
      const R two = ScalarTraits<R>::from_long(2);
      pay.pay(i) = (both + gap) / two;
      pay.pay(j) = (both - gap) / two;
    } else if (active.size() > 2) {
      const int lead = active[0];
      const Allocation<R>& drop_lead = self(self, nullified_game(g, g.grand().without(lead)));
      std::vector<R> gaps;  // phi_lead - phi_j
      R gap_sum = ScalarTraits<R>::zero();
      for (std::size_t k = 1; k < active.size(); ++k) {
        const int j = active[k];
        const Allocation<R>& drop_j = self(self, nullified_game(g, g.grand().without(j)));
        R gap = (drop_j.pay(lead) + drop_j.pay(j)) - (drop_lead.pay(lead) + drop_lead.pay(j));
        gap_sum += gap;
        gaps.push_back(std::move(gap));
      }
      const R lead_pay =
          (g.grand_worth() + gap_sum) / ScalarTraits<R>::from_long(static_cast<long long>(active.size()));
      pay.pay(lead) = lead_pay;
      for (std::size_t k = 1; k < active.size(); ++k) pay.pay(active[k]) = lead_pay - gaps[k - 1];
    }
    return memo.emplace(g.table(), std::move(pay)).first->second;
  };
  return solve(solve, v);
}

// ---------------------------------------------------------------------------
// Suite machinery
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
void expect_verdict(SuiteResult<R>& suite, const std::string& claim, CheckReport<R> report,
                    bool expect_pass) {
  ClauseResult<R> clause;
  clause.claim = claim;
  clause.ok = report.passed_sample() == expect_pass;
  clause.detail = std::string(report.passed_sample() ? "passed_sample" : "violated") +
                  (clause.ok ? "" : " (contrary to the stated claim)");
  clause.report = std::move(report);
  suite.clauses.push_back(std::move(clause));
}

template <class R>
void expect_true(SuiteResult<R>& suite, const std::string& claim, bool ok,
                 std::string detail = "") {
  suite.clauses.push_back(ClauseResult<R>{claim, ok, std::move(detail), std::nullopt});
}

/// Verdict cache for implication testing; nullopt = not evaluable for the
/// rule (a domain guard blocked the checker's sampler).
template <class R>
class VerdictTable {
 public:
  VerdictTable(const std::vector<SolutionRule<R>>& panel, const SamplePlan& plan)
      : panel_(panel), plan_(plan) {}

  std::optional<bool> passes(std::size_t rule_idx, const std::string& axiom) {
    const auto key = std::make_pair(rule_idx, axiom);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<bool> verdict;
    try {
      verdict = run_check(axiom, panel_[rule_idx], plan_).passed_sample();
    } catch (const DomainGuardFailed&) {
      verdict = std::nullopt;
    }
    cache_.emplace(key, verdict);
    return verdict;
  }

  const SolutionRule<R>& rule(std::size_t idx) const { return panel_[idx]; }
  std::size_t size() const { return panel_.size(); }

 private:
  const std::vector<SolutionRule<R>>& panel_;
  SamplePlan plan_;
  std::map<std::pair<std::size_t, std::string>, std::optional<bool>> cache_;
};

/// Records one material implication (all premises pass => conclusion passes)
/// for every rule on which all involved axioms are evaluable.
template <class R>
void check_implication(SuiteResult<R>& suite, VerdictTable<R>& table,
                       const std::vector<std::string>& premises, const std::string& conclusion,
                       const std::string& lemma_name) {
  for (std::size_t k = 0; k < table.size(); ++k) {
    bool all_premises = true;
    bool evaluable = true;
    for (const auto& prem : premises) {
      const auto v = table.passes(k, prem);
      if (!v.has_value()) {
        evaluable = false;
        break;
      }
      all_premises = all_premises && *v;
    }
    if (!evaluable || !all_premises) continue;
    const auto concl = table.passes(k, conclusion);
    if (!concl.has_value()) continue;
    expect_true(suite,
                lemma_name + ": " + table.rule(k).name + " satisfies the premises, so " +
                    conclusion + " must hold",
                *concl, *concl ? "implication held on the sample" : "conclusion violated");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorem suites
// ---------------------------------------------------------------------------

/// ELS values are exactly the efficient sigma-Shapley values: coefficient
/// extraction, the sigma fit, round-trips, and the converse direction.
template <class R>
SuiteResult<R> verify_theorem1(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "t1";
  suite.seed = plan.seed;
  std::vector<SolutionRule<R>> rules = {shapley_rule<R>(), cis_rule<R>(), ensc_rule<R>(),
                                        ed_rule<R>(), psi_rule<R>(2)};
  rules.push_back(seeded_affine_rule<R>(plan.seed + 1, 0, 1, "combo#1"));
  rules.push_back(seeded_affine_rule<R>(plan.seed + 2, 0, 1, "combo#2"));
  rules.push_back(seeded_affine_rule<R>(plan.seed + 3, 1, 4, "combo#3(a_n=1/4)"));

  Rng root(plan.seed);
  for (int n = plan.n_min; n <= plan.n_max; ++n) {
    for (const auto& rule : rules) {
      const std::string tag = rule.name + ", n=" + std::to_string(n);
      LinearCoefficients<R> coeffs;
      try {
        coeffs = extract_coefficients(rule, n);
      } catch (const NotLinear&) {
        detail::expect_true(suite, tag + ": linear;", false, "extraction failed");
        continue;
      }
      detail::expect_true(suite, tag + ": symmetric coefficients with the ELS conditions",
                          coeffs.symmetric && coeffs.els);
      if (!(coeffs.symmetric && coeffs.els)) continue;
      const SigmaWeights<R> sigma = fit_sigma(coeffs);
      detail::expect_true(suite, tag + ": fitted sigma has sigma(n) = 1",
                          close(sigma(n), ScalarTraits<R>::from_long(1), plan.tol));
      bool round_trip = true;
      for (int trial = 0; trial < plan.trials && round_trip; ++trial) {
        Rng rng = root.stream(Rng::mix(static_cast<std::uint64_t>(n)) + static_cast<std::uint64_t>(trial));
        const Game<R> v = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
        round_trip = allocations_close(sigma_shapley_value(v, sigma), rule(v), plan.tol);
      }
      detail::expect_true(suite, tag + ": sigma-Shapley round-trip reproduces the rule",
                          round_trip);
    }
  }

  // Converse: efficient sigma weights give ELS values.
  SamplePlan axiom_plan = plan;
  axiom_plan.trials = std::min(plan.trials, 60);
  for (int k = 1; k <= 3; ++k) {
    const auto rule = seeded_sigma_rule<R>(plan.seed + 0x5150 + static_cast<std::uint64_t>(k), true,
                                           "sigma#" + std::to_string(k));
    detail::expect_verdict(suite, rule.name + " (sigma(n)=1) satisfies (E)",
                           check_E(rule, axiom_plan), true);
    detail::expect_verdict(suite, rule.name + " (sigma(n)=1) satisfies (L)",
                           check_L(rule, axiom_plan), true);
    detail::expect_verdict(suite, rule.name + " (sigma(n)=1) satisfies (SYM)",
                           check_SYM(rule, axiom_plan), true);
  }
  // Unconstrained sigma: total payoff scales by sigma(n).
  for (int k = 1; k <= 2; ++k) {
    bool scaling = true;
    for (int n = plan.n_min; n <= plan.n_max && scaling; ++n) {
      Rng rng(Rng::mix(plan.seed + 0xA1FA) ^ static_cast<std::uint64_t>(n) * 0x51D3ULL);
      SigmaWeights<R> sigma;
      sigma.sigma.resize(static_cast<std::size_t>(n));
      Rng srng(Rng::mix(plan.seed + 0x77 + static_cast<std::uint64_t>(k)) ^
               static_cast<std::uint64_t>(n) * 0x51D3ULL);
      for (int s = 1; s <= n; ++s)
        sigma.sigma[static_cast<std::size_t>(s - 1)] = fraction_as<R>(srng.uniform_int(-32, 32), 16);
      for (int trial = 0; trial < std::min(plan.trials, 40) && scaling; ++trial) {
        Rng t = rng.stream(static_cast<std::uint64_t>(trial));
        const Game<R> v = sample_uniform_game<R>(n, t, plan.worth_lo, plan.worth_hi);
        const R total = sigma_shapley_value(v, sigma).total();
        scaling = close(total, sigma(n) * v.grand_worth(), plan.tol);
      }
    }
    detail::expect_true(suite,
                        "unconstrained sigma#" + std::to_string(k) +
                            ": total sigma-Shapley payoff equals sigma(n) v(N)",
                        scaling);
  }
  return suite;
}

/// Composition dichotomy: (CU)/(CD_I)/(CD_O) hold exactly for the alpha_n = 0
/// affine combinations and ED; mixtures with alpha_n in (0,1) fail all three;
/// proportional division (outside (L)) keeps (CU)/(CD_I) but not (CD_O).
template <class R>
SuiteResult<R> verify_theorem2(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "t2";
  suite.seed = plan.seed;
  struct Member {
    SolutionRule<R> rule;
    bool cu, cdi, cdo;
  };
  std::vector<Member> panel;
  panel.push_back({shapley_rule<R>(), true, true, true});
  panel.push_back({cis_rule<R>(), true, true, true});
  panel.push_back({ensc_rule<R>(), true, true, true});
  panel.push_back({ed_rule<R>(), true, true, true});
  for (int k = 1; k <= 8; ++k)
    panel.push_back({seeded_affine_rule<R>(plan.seed + 0x200 + static_cast<std::uint64_t>(k), 0, 1,
                                           "combo#" + std::to_string(k)),
                     true, true, true});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x300, 1, 4, "mixture(a_n=1/4)"), false, false, false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x301, 1, 2, "mixture(a_n=1/2)"), false, false, false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x302, 3, 4, "mixture(a_n=3/4)"), false, false, false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x303, 5, 8, "mixture(a_n=5/8)"), false, false, false});
  panel.push_back({prop_division_rule<R>(), true, true, false});

  for (const auto& member : panel) {
    detail::expect_verdict(suite, member.rule.name + " vs (CU)", check_CU(member.rule, plan),
                           member.cu);
    detail::expect_verdict(suite, member.rule.name + " vs (CD_I)", check_CDI(member.rule, plan),
                           member.cdi);
    detail::expect_verdict(suite, member.rule.name + " vs (CD_O)", check_CDO(member.rule, plan),
                           member.cdo);
  }
  return suite;
}

/// Active-player consistency: (AC) holds exactly for the alpha_n = 0
/// combinations; plus the Corollary 1 premise panel and Lemma 6.
/// One clause carries the stated claim that the power rule keeps (AC);
/// the checker refutes it exactly (n=2, v=(0,0,2), S={1} already breaks
/// it) and the suite reports the refutation rather than masking it.
template <class R>
SuiteResult<R> verify_theorem3(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "t3";
  suite.seed = plan.seed;
  struct Member {
    SolutionRule<R> rule;
    bool combo;  // alpha_n = 0 affine combination
  };
  std::vector<Member> panel;
  panel.push_back({shapley_rule<R>(), true});
  panel.push_back({cis_rule<R>(), true});
  panel.push_back({ensc_rule<R>(), true});
  for (int k = 1; k <= 8; ++k)
    panel.push_back({seeded_affine_rule<R>(plan.seed + 0x400 + static_cast<std::uint64_t>(k), 0, 1,
                                           "combo#" + std::to_string(k)),
                     true});
  panel.push_back({ed_rule<R>(), false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x500, 1, 4, "mixture(a_n=1/4)"), false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x501, 1, 2, "mixture(a_n=1/2)"), false});
  panel.push_back({seeded_affine_rule<R>(plan.seed + 0x502, 3, 4, "mixture(a_n=3/4)"), false});

  for (const auto& member : panel)
    detail::expect_verdict(suite, member.rule.name + " vs (AC)", check_AC(member.rule, plan),
                           member.combo);

  const auto power2 = power_rule<R>(2.0);
  detail::expect_verdict(suite, "power:2 satisfies (E)", check_E(power2, plan), true);
  detail::expect_verdict(suite, "power:2 satisfies (AC) [stated claim]",
                         check_AC(power2, plan), true);
  detail::expect_verdict(suite, "power:2 violates (TLB)", check_TLB(power2, plan), false);
  detail::expect_verdict(suite, "power:2 violates (L)", check_L(power2, plan), false);
  detail::expect_verdict(suite, "power:2 violates (RNP)", check_RNP(power2, plan), false);

  // Corollary 1 premise panel and Lemma 6 over the same rules.
  std::vector<SolutionRule<R>> lemma_panel;
  for (auto& member : panel) lemma_panel.push_back(member.rule);
  lemma_panel.push_back(power2);
  SamplePlan table_plan = plan;
  table_plan.trials = std::min(plan.trials, 40);
  detail::VerdictTable<R> table(lemma_panel, table_plan);
  for (std::size_t k = 0; k < lemma_panel.size(); ++k) {
    const auto e = table.passes(k, "E");
    const auto tlb = table.passes(k, "TLB");
    const auto sym = table.passes(k, "SYM");
    if (e && tlb && sym && *e && *tlb && *sym) {
      const auto ac = table.passes(k, "AC");
      const bool combo = k < panel.size() && panel[k].combo;
      if (ac.has_value())
        detail::expect_true(suite,
                            "corollary 1: for " + lemma_panel[k].name +
                                " (E,TLB,SYM hold), (AC) iff affine combination",
                            *ac == combo);
    }
  }
  detail::check_implication(suite, table, {"E", "L", "AC"}, "RNP", "lemma 6");
  return suite;
}

/// Least-square values: (AC) + (CM) hold for sampled weight vectors, their
/// coefficients are alpha_n = 0 ELS, and the CM-violating combination is not
/// reproducible by any least-square weights (nonnegativity certificate).
template <class R>
SuiteResult<R> verify_corollary2(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "c2";
  suite.seed = plan.seed;
  for (int k = 1; k <= 4; ++k) {
    const std::uint64_t mseed = plan.seed + 0x600 + static_cast<std::uint64_t>(k);
    // n-adaptive least-square rule: per-n positive grid weights from mseed
    SolutionRule<R> rule{
        "least-square#" + std::to_string(k),
        [mseed](const Game<R>& v) {
          const int n = v.players();
          Rng rng(Rng::mix(mseed) ^ static_cast<std::uint64_t>(n));
          std::vector<R> m(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
          for (int s = 1; s <= n; ++s)
            m[static_cast<std::size_t>(s - 1)] = fraction_as<R>(rng.uniform_int(1, 32), 16);
          return least_square_value(v, LSWeights<R>::from_sizes(std::move(m)));
        },
        {}};
    detail::expect_verdict(suite, rule.name + " satisfies (AC)", check_AC(rule, plan), true);
    detail::expect_verdict(suite, rule.name + " satisfies (CM)", check_CM(rule, plan), true);
    bool els_zero_last = true;
    for (int n = plan.n_min; n <= plan.n_max && els_zero_last; ++n) {
      const LinearCoefficients<R> coeffs = extract_coefficients(rule, n);
      els_zero_last = coeffs.symmetric && coeffs.els &&
                      close(affine_weights_of(coeffs).last(), ScalarTraits<R>::zero(), plan.tol);
    }
    detail::expect_true(suite, rule.name + ": coefficients are alpha_n = 0 ELS", els_zero_last);
  }

  // 2 psi^1 - psi^2: affine, violates (CM), and carries a negative size-2
  // coefficient, so no nonnegative least-square weights reproduce it.
  SolutionRule<R> bad{"2psi1-psi2",
                      [](const Game<R>& v) {
                        const Allocation<R> a = psi_value(v, 1);
                        const Allocation<R> b = psi_value(v, 2);
                        Allocation<R> out(v.players());
                        const R two = ScalarTraits<R>::from_long(2);
                        for (int p = 1; p <= v.players(); ++p)
                          out.pay(p) = two * a.pay(p) - b.pay(p);
                        return out;
                      },
                      {}};
  detail::expect_verdict(suite, "2psi1-psi2 violates (CM)", check_CM(bad, plan), false);
  bool has_negative = true;
  for (int n = std::max(3, plan.n_min); n <= std::max(3, plan.n_max) && has_negative; ++n) {
    const LinearCoefficients<R> coeffs = extract_coefficients(bad, n);
    bool neg = false;
    for (int s = 1; s < n; ++s)
      neg = neg || ScalarTraits<R>::to_double(coeffs.p[static_cast<std::size_t>(s - 1)]) < 0.0;
    has_negative = coeffs.symmetric && neg;
  }
  detail::expect_true(suite,
                      "2psi1-psi2 has a negative p_s, so no least-square weights reproduce it",
                      has_negative);
  return suite;
}

/// The 3x3 value-vs-consistency matrix plus the independence examples.
template <class R>
SuiteResult<R> verify_theorem4(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "t4";
  suite.seed = plan.seed;
  const std::vector<std::pair<SolutionRule<R>, ReducedGameKind>> diagonal = {
      {shapley_rule<R>(), ReducedGameKind::HM},
      {cis_rule<R>(), ReducedGameKind::F},
      {ensc_rule<R>(), ReducedGameKind::M}};
  const std::vector<SolutionRule<R>> values = {shapley_rule<R>(), cis_rule<R>(), ensc_rule<R>()};
  const std::vector<ReducedGameKind> kinds = {ReducedGameKind::HM, ReducedGameKind::F,
                                              ReducedGameKind::M};
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t c = 0; c < kinds.size(); ++c) {
      const bool expect_pass = r == c;
      detail::expect_verdict(suite,
                             values[r].name + " vs (" + std::string(to_string(kinds[c])) + "-NGC)",
                             check_NGC(kinds[c], values[r], plan), expect_pass);
    }
  }
  for (const auto& [rule, kind] : diagonal) {
    detail::expect_verdict(suite, rule.name + " satisfies (E)", check_E(rule, plan), true);
    detail::expect_verdict(suite, rule.name + " satisfies (EG)", check_EG(rule, plan), true);
  }

  // Independence examples.
  const auto standalone = standalone_rule<R>();
  detail::expect_verdict(suite, "standalone violates (E)", check_E(standalone, plan), false);
  detail::expect_verdict(suite, "standalone satisfies (EG)", check_EG(standalone, plan), true);
  detail::expect_verdict(suite, "standalone satisfies (F-NGC)",
                         check_NGC(ReducedGameKind::F, standalone, plan), true);
  const auto marginal = marginal_rule<R>();
  detail::expect_verdict(suite, "marginal violates (E)", check_E(marginal, plan), false);
  detail::expect_verdict(suite, "marginal satisfies (EG)", check_EG(marginal, plan), true);
  // The stated claim credits the marginal rule with both nullified-game
  // consistencies; the constant-deduction algebra behind it only holds for
  // the M reduction, and the checker refutes the HM half exactly
  // (n=3, v(N)=5, all other worths 0, S={1,2}).
  detail::expect_verdict(suite, "marginal satisfies (HM-NGC) [stated claim]",
                         check_NGC(ReducedGameKind::HM, marginal, plan), true);
  detail::expect_verdict(suite, "marginal satisfies (M-NGC)",
                         check_NGC(ReducedGameKind::M, marginal, plan), true);
  const auto dictator = dictator_rule<R>(1);
  detail::expect_verdict(suite, "dictator satisfies (E)", check_E(dictator, plan), true);
  detail::expect_verdict(suite, "dictator violates (EG)", check_EG(dictator, plan), false);
  for (const auto kind : kinds)
    detail::expect_verdict(suite,
                           "dictator satisfies (" + std::string(to_string(kind)) + "-NGC)",
                           check_NGC(kind, dictator, plan), true);

  // Reconstruction: the axioms pin the three values constructively.
  Rng root(plan.seed);
  const int recon_trials = std::min(plan.trials, 60);
  for (const auto& [kind, target, tname] :
       std::vector<std::tuple<ReducedGameKind, SolutionRule<R>, std::string>>{
           {ReducedGameKind::HM, shapley_rule<R>(), "shapley"},
           {ReducedGameKind::F, cis_rule<R>(), "cis"},
           {ReducedGameKind::M, ensc_rule<R>(), "ensc"}}) {
    bool all_equal = true;
    for (int trial = 0; trial < recon_trials && all_equal; ++trial) {
      Rng rng = root.stream(0x4E6C + static_cast<std::uint64_t>(trial));
      const int n = detail::pick_n(plan, rng);
      Game<R> v = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
      if (trial % 3 == 2)  // null-laden instances exercise the recursion bases
        v = nullified_game(v, Coalition(static_cast<std::uint32_t>(
                                  rng.uniform_int(1, subset_count(n) - 1))));
      all_equal = allocations_close(reconstruct_from_ngc(kind, v), target(v), plan.tol);
    }
    detail::expect_true(suite,
                        "reconstruct_from_ngc(" + std::string(to_string(kind)) + ") equals " + tname,
                        all_equal);
  }
  return suite;
}

/// Implication lemmas, the psi inessential-game property, the Eq. (1)
/// identity on additive games, and null preservation under the HM reduction.
template <class R>
SuiteResult<R> verify_lemmas(const SamplePlan& plan) {
  SuiteResult<R> suite;
  suite.suite = "lemmas";
  suite.seed = plan.seed;

  // Lemma 3: psi^s satisfies (IGP) for every s <= n-1.
  for (int n = plan.n_min; n <= plan.n_max; ++n) {
    SamplePlan np = plan;
    np.n_min = np.n_max = n;
    np.trials = std::min(plan.trials, 60);
    for (int s = 1; s < n; ++s)
      detail::expect_verdict(suite, "psi^" + std::to_string(s) + " satisfies (IGP), n=" + std::to_string(n),
                             check_IGP(psi_rule<R>(s), np), true);
  }

  // Eq. (1): affine rules act on additive games as alpha_n xbar + (1-alpha_n) x.
  {
    bool holds = true;
    Rng root(plan.seed);
    for (const auto& [beta_num, beta_den] : std::vector<std::pair<long long, long long>>{{0, 1}, {1, 2}}) {
      const auto rule = seeded_affine_rule<R>(plan.seed + 0x800, beta_num, beta_den, "eq1-combo");
      const R beta = fraction_as<R>(beta_num, beta_den);
      for (int trial = 0; trial < std::min(plan.trials, 60) && holds; ++trial) {
        Rng rng = root.stream(0xE01 + static_cast<std::uint64_t>(trial));
        const int n = detail::pick_n(plan, rng);
        const Allocation<R> x = sample_allocation<R>(n, rng, plan.worth_lo, plan.worth_hi);
        const Allocation<R> got = rule(additive_game(x));
        const R xbar = x.mean();
        for (int p = 1; p <= n && holds; ++p) {
          const R expected = beta * xbar + (ScalarTraits<R>::from_long(1) - beta) * x.pay(p);
          holds = close(got.pay(p), expected, plan.tol);
        }
      }
    }
    detail::expect_true(suite, "Eq.(1): affine rule on additive x gives a_n xbar + (1-a_n) x", holds);
  }

  // Implication lemmas over the rule panel.
  std::vector<SolutionRule<R>> panel = {shapley_rule<R>(), cis_rule<R>(),  ensc_rule<R>(),
                                        ed_rule<R>(),      psi_rule<R>(2), standalone_rule<R>(),
                                        marginal_rule<R>(), dictator_rule<R>(1),
                                        prop_division_rule<R>(), power_rule<R>(2.0)};
  panel.push_back(seeded_affine_rule<R>(plan.seed + 0x900, 0, 1, "combo#1"));
  panel.push_back(seeded_affine_rule<R>(plan.seed + 0x901, 1, 2, "mixture(a_n=1/2)"));
  SamplePlan table_plan = plan;
  table_plan.trials = std::min(plan.trials, 40);
  detail::VerdictTable<R> table(panel, table_plan);
  detail::check_implication(suite, table, {"L", "CU"}, "RNP", "lemma 4(i)");
  detail::check_implication(suite, table, {"E", "CDO"}, "RNP", "lemma 4(ii)");
  detail::check_implication(suite, table, {"E", "CDI"}, "RNP", "lemma 4(iii)");
  detail::check_implication(suite, table, {"L", "SYM"}, "TLB", "lemma 5(i)");
  detail::check_implication(suite, table, {"E", "TLB", "AC"}, "L", "lemma 5(ii)");
  detail::check_implication(suite, table, {"E", "L", "AC"}, "RNP", "lemma 6");
  detail::check_implication(suite, table, {"E", "EG"}, "MR", "lemma B.1");

  // Lemma C.2: null players stay null in the HM reduction dropping one other
  // player, with the Shapley value as the rule.
  {
    bool preserved = true;
    const auto shapley = shapley_rule<R>();
    Rng root(plan.seed);
    std::string failure;
    for (int trial = 0; trial < plan.trials && preserved; ++trial) {
      Rng rng = root.stream(0xC2 + static_cast<std::uint64_t>(trial));
      const int n = std::max(3, detail::pick_n(plan, rng));
      const Game<R> w = sample_uniform_game<R>(n, rng, plan.worth_lo, plan.worth_hi);
      // keep a proper subset active so null players certainly exist
      std::uint32_t keep = static_cast<std::uint32_t>(rng.uniform_int(1, subset_count(n) - 2));
      const Game<R> v = nullified_game(w, Coalition(keep));
      const Coalition nulls = null_players(v);
      for (int i = 1; i <= n && preserved; ++i) {
        if (!nulls.contains(i)) continue;
        for (int j = 1; j <= n && preserved; ++j) {
          if (j == i) continue;
          const Game<R> reduced = reduce_hm(shapley, v, v.grand().without(j));
          preserved = null_players(reduced).contains(i);
          if (!preserved)
            failure = "trial " + std::to_string(trial) + ", i=" + std::to_string(i) +
                      ", j=" + std::to_string(j);
        }
      }
    }
    detail::expect_true(suite, "lemma C.2: nulls of v stay null in the HM reduction", preserved,
                        failure);
  }
  return suite;
}

template <class R>
SuiteResult<R> run_suite(const std::string& id, const SamplePlan& plan) {
  if (id == "t1") return verify_theorem1<R>(plan);
  if (id == "t2") return verify_theorem2<R>(plan);
  if (id == "t3") return verify_theorem3<R>(plan);
  if (id == "t4") return verify_theorem4<R>(plan);
  if (id == "c2") return verify_corollary2<R>(plan);
  if (id == "lemmas") return verify_lemmas<R>(plan);
  throw Error("unknown suite '" + id + "' (expected t1|t2|t3|t4|c2|lemmas)");
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"t1", "t2", "t3", "t4", "c2", "lemmas"};
  return names;
}

}  // namespace tug
