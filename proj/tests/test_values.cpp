#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tug/rng.hpp"
#include "tug/sampling.hpp"
#include "tug/theorems.hpp"
#include "tug/values.hpp"

using namespace tug;

namespace {

template <class R>
R lit(long long num, long long den = 1) {
  return fraction_as<R>(num, den);
}

template <class R>
Allocation<R> alloc(std::vector<R> v) {
  return Allocation<R>(std::move(v));
}

}  // namespace

TEMPLATE_TEST_CASE("ED value", "[values]", double, Rational) {
  using R = TestType;
  std::vector<R> w(8, ScalarTraits<R>::zero());
  w[7] = lit<R>(9);
  const Game<R> v(3, std::move(w));
  REQUIRE(ed_value(v) == alloc<R>({lit<R>(3), lit<R>(3), lit<R>(3)}));
  REQUIRE(ed_value(Game<R>(3)) == Allocation<R>(3));

  Rng rng(3);
  const Game<R> g = sample_uniform_game<R>(4, rng);
  REQUIRE(ed_value(g) == psi_value(g, 4));
}

TEMPLATE_TEST_CASE("CIS value", "[values]", double, Rational) {
  using R = TestType;
  std::vector<R> w(8, ScalarTraits<R>::zero());
  w[0b001] = lit<R>(3);
  w[0b111] = lit<R>(9);
  const Game<R> v(3, std::move(w));
  REQUIRE(cis_value(v) == alloc<R>({lit<R>(5), lit<R>(2), lit<R>(2)}));

  Rng rng(5);
  const Allocation<R> x = sample_allocation<R>(4, rng);
  REQUIRE(allocations_close(cis_value(additive_game(x)), x));

  REQUIRE(allocations_close(cis_value(unanimity_game<R>(3, Coalition::of({1, 2}))),
                            alloc<R>({lit<R>(1, 3), lit<R>(1, 3), lit<R>(1, 3)})));
}

TEMPLATE_TEST_CASE("ENSC value", "[values]", double, Rational) {
  using R = TestType;
  REQUIRE(allocations_close(ensc_value(unanimity_game<R>(3, Coalition::of({1, 2}))),
                            alloc<R>({lit<R>(2, 3), lit<R>(2, 3), lit<R>(-1, 3)})));

  Rng rng(7);
  const Allocation<R> x = sample_allocation<R>(4, rng);
  REQUIRE(allocations_close(ensc_value(additive_game(x)), x));

  for (int trial = 0; trial < 10; ++trial) {
    Rng t = rng.stream(trial);
    const Game<R> v = sample_uniform_game<R>(4, t);
    REQUIRE(ensc_value(v) == cis_value(dual_game(v)));  // same computation path
  }
}

TEMPLATE_TEST_CASE("Shapley value", "[values]", double, Rational) {
  using R = TestType;
  const Game<R> u12 = unanimity_game<R>(3, Coalition::of({1, 2}));
  REQUIRE(allocations_close(shapley_value(u12), alloc<R>({lit<R>(1, 2), lit<R>(1, 2), lit<R>(0)})));
  REQUIRE(allocations_close(shapley_value(u12), oracles::shapley_by_permutations(u12)));

  Rng rng(11);
  const Game<R> sym = generate_symmetric_game<R>(4, rng, -8.0, 8.0);
  const Allocation<R> pay = shapley_value(sym);
  for (int p = 1; p <= 4; ++p)
    REQUIRE(close(pay.pay(p), sym.grand_worth() / lit<R>(4)));

  const Allocation<R> x = sample_allocation<R>(4, rng);
  REQUIRE(allocations_close(shapley_value(additive_game(x)), x));
}

TEMPLATE_TEST_CASE("Shapley consistency triangle", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(13);
  const int n_max = ScalarTraits<R>::exact ? 4 : 5;
  for (int n = 3; n <= n_max; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Rng t = rng.stream(static_cast<std::uint64_t>(n * 100 + trial));
      const Game<R> v = sample_uniform_game<R>(n, t);
      const Allocation<R> direct = shapley_value(v);
      REQUIRE(allocations_close(direct, oracles::shapley_by_permutations(v)));
      // potential-difference route
      const R pv = potential(v);
      for (int p = 1; p <= n; ++p) {
        const R diff = pv - potential(nullified_game(v, v.grand().without(p)));
        REQUIRE(close(direct.pay(p), diff));
      }
    }
  }
}

TEMPLATE_TEST_CASE("psi values", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(17);
  for (int n = 3; n <= 5; ++n) {
    Rng t = rng.stream(static_cast<std::uint64_t>(n));
    const Game<R> v = sample_uniform_game<R>(n, t);
    REQUIRE(allocations_close(psi_value(v, 1), cis_value(v)));
    REQUIRE(allocations_close(psi_value(v, n - 1), ensc_value(v)));
    // inessential-game property for every s <= n-1
    const Allocation<R> x = sample_allocation<R>(n, t);
    for (int s = 1; s < n; ++s) REQUIRE(allocations_close(psi_value(additive_game(x), s), x));
  }
  const Game<R> v3 = sample_uniform_game<R>(3, rng);
  REQUIRE_THROWS_AS(psi_value(v3, 0), SizeOutOfRange);
  REQUIRE_THROWS_AS(psi_value(v3, 4), SizeOutOfRange);
}

TEMPLATE_TEST_CASE("Dragan identity", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(19);
  const int n_max = ScalarTraits<R>::exact ? 5 : 6;
  for (int n = 3; n <= n_max; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Rng t = rng.stream(static_cast<std::uint64_t>(n * 50 + trial));
      const Game<R> v = sample_uniform_game<R>(n, t);
      Allocation<R> acc(n);
      for (int s = 1; s < n; ++s) {
        const Allocation<R> part = psi_value(v, s);
        for (int p = 1; p <= n; ++p) acc.pay(p) += part.pay(p);
      }
      const Allocation<R> sh = shapley_value(v);
      for (int p = 1; p <= n; ++p)
        REQUIRE(close(acc.pay(p) / lit<R>(n - 1), sh.pay(p)));
    }
  }
}

TEMPLATE_TEST_CASE("sigma-Shapley value", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(23);
  const Game<R> v = sample_uniform_game<R>(4, rng);
  REQUIRE(allocations_close(sigma_shapley_value(v, SigmaWeights<R>::ones(4)), shapley_value(v)));

  SigmaWeights<R> top_only{std::vector<R>(4, ScalarTraits<R>::zero())};
  top_only.sigma[3] = lit<R>(1);
  REQUIRE(allocations_close(sigma_shapley_value(v, top_only), ed_value(v)));

  // delta-discounted weights sigma(s) = delta^{n-s} keep sigma(n) = 1
  SigmaWeights<R> discounted{{lit<R>(1, 8), lit<R>(1, 4), lit<R>(1, 2), lit<R>(1)}};
  REQUIRE(discounted.efficient());
  const Allocation<R> pay = sigma_shapley_value(v, discounted);
  REQUIRE(close(pay.total(), v.grand_worth()));
}

TEMPLATE_TEST_CASE("affine combination rules", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(29);
  const int n = 4;
  const Game<R> v = sample_uniform_game<R>(n, rng);

  // uniform weights over s = 1..n-1 reproduce the Shapley value
  std::vector<R> uniform(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  for (int s = 1; s < n; ++s) uniform[static_cast<std::size_t>(s - 1)] = lit<R>(1, n - 1);
  REQUIRE(allocations_close(affine_combination_rule<R>(AffineWeights<R>(uniform))(v),
                            shapley_value(v)));

  std::vector<R> ed_only(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  ed_only.back() = lit<R>(1);
  REQUIRE(allocations_close(affine_combination_rule<R>(AffineWeights<R>(ed_only))(v), ed_value(v)));

  std::vector<R> cis_only(static_cast<std::size_t>(n), ScalarTraits<R>::zero());
  cis_only.front() = lit<R>(1);
  REQUIRE(allocations_close(affine_combination_rule<R>(AffineWeights<R>(cis_only))(v),
                            cis_value(v)));

  REQUIRE_THROWS_AS(AffineWeights<R>(std::vector<R>{lit<R>(1, 2), lit<R>(1, 4)}),
                    WeightsNotAffine);
}

TEMPLATE_TEST_CASE("coefficient extraction", "[values]", double, Rational) {
  using R = TestType;
  const int n = 4;
  const auto ed_coeffs = extract_coefficients(ed_rule<R>(), n);
  REQUIRE(ed_coeffs.symmetric);
  REQUIRE(ed_coeffs.els);
  REQUIRE(close(ed_coeffs.p.back(), lit<R>(1, n)));
  for (int s = 1; s < n; ++s) {
    REQUIRE(close(ed_coeffs.p[static_cast<std::size_t>(s - 1)], lit<R>(0)));
    REQUIRE(close(ed_coeffs.q[static_cast<std::size_t>(s - 1)], lit<R>(0)));
  }

  const auto cis_coeffs = extract_coefficients(cis_rule<R>(), n);
  REQUIRE(cis_coeffs.symmetric);
  REQUIRE(cis_coeffs.els);
  REQUIRE(close(cis_coeffs.p.front(), lit<R>(n - 1, n)));
  REQUIRE(close(cis_coeffs.q.front(), lit<R>(-1, n)));
  REQUIRE(close(cis_coeffs.p.back(), lit<R>(1, n)));
  REQUIRE(close(cis_coeffs.p[1], lit<R>(0)));
  // q_1 = -(1/(n-1)) p_1
  REQUIRE(close(cis_coeffs.q.front(), -lit<R>(1, n - 1) * cis_coeffs.p.front()));

  // sigma-Shapley coefficients satisfy q_k = -k/(n-k) p_k for random sigma
  SigmaWeights<R> sigma{{lit<R>(3, 4), lit<R>(-1, 2), lit<R>(5, 4), lit<R>(1)}};
  const auto sig_coeffs = extract_coefficients(sigma_shapley_rule<R>(sigma), n);
  REQUIRE(sig_coeffs.symmetric);
  for (int k = 1; k < n; ++k)
    REQUIRE(close(sig_coeffs.q[static_cast<std::size_t>(k - 1)],
                  -lit<R>(k, n - k) * sig_coeffs.p[static_cast<std::size_t>(k - 1)]));

  REQUIRE_THROWS_AS(extract_coefficients(power_rule<R>(2.0), 3), NotLinear);
  // asymmetric rules have no (p_s, q_s) reduction
  const auto dict_coeffs = extract_coefficients(dictator_rule<R>(1), 3);
  REQUIRE_FALSE(dict_coeffs.symmetric);
}

TEMPLATE_TEST_CASE("sigma fit", "[values]", double, Rational) {
  using R = TestType;
  const int n = 4;
  const auto sh_sigma = fit_sigma(extract_coefficients(shapley_rule<R>(), n));
  for (int s = 1; s <= n; ++s) REQUIRE(close(sh_sigma(s), lit<R>(1)));

  const auto ed_sigma = fit_sigma(extract_coefficients(ed_rule<R>(), n));
  for (int s = 1; s < n; ++s) REQUIRE(close(ed_sigma(s), lit<R>(0)));
  REQUIRE(close(ed_sigma(n), lit<R>(1)));

  const auto cis_sigma = fit_sigma(extract_coefficients(cis_rule<R>(), n));
  REQUIRE(close(cis_sigma(1), lit<R>(n - 1)));
  REQUIRE(close(cis_sigma(n), lit<R>(1)));
  for (int s = 2; s < n; ++s) REQUIRE(close(cis_sigma(s), lit<R>(0)));

  // round-trip: fitted sigma reproduces each built-in ELS rule
  Rng rng(31);
  for (const auto& rule :
       {shapley_rule<R>(), cis_rule<R>(), ensc_rule<R>(), ed_rule<R>(), psi_rule<R>(2)}) {
    const auto sigma = fit_sigma(extract_coefficients(rule, n));
    REQUIRE(close(sigma(n), lit<R>(1)));
    for (int trial = 0; trial < 10; ++trial) {
      Rng t = rng.stream(trial);
      const Game<R> v = sample_uniform_game<R>(n, t);
      REQUIRE(allocations_close(sigma_shapley_value(v, sigma), rule(v)));
    }
  }

  // the standalone rule is linear and symmetric but not sigma-representable
  REQUIRE_THROWS_AS(fit_sigma(extract_coefficients(standalone_rule<R>(), n)),
                    NotSigmaRepresentable);
}

TEMPLATE_TEST_CASE("potential", "[values]", double, Rational) {
  using R = TestType;
  for (int n = 3; n <= 5; ++n)
    REQUIRE(close(potential(unanimity_game<R>(n, Coalition::grand(n))), lit<R>(1, n)));
  REQUIRE(potential(Game<R>(4)) == lit<R>(0));
}

TEST_CASE("least-square value against the descent oracle", "[values]") {
  Rng rng(37);
  for (int n = 3; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      Rng t = rng.stream(static_cast<std::uint64_t>(n * 10 + trial));
      const Game<double> v = sample_uniform_game<double>(n, t);
      std::vector<double> m(static_cast<std::size_t>(n), 0.0);
      for (int s = 1; s <= n; ++s) m[static_cast<std::size_t>(s - 1)] = t.uniform(0.25, 2.0);
      const LSWeights<double> weights = LSWeights<double>::from_sizes(m);
      const Allocation<double> solved = least_square_value(v, weights);
      const Allocation<double> descended = oracles::least_square_by_descent(v, weights);
      REQUIRE(allocations_close(solved, descended, 1e-6));
      REQUIRE(close(solved.total(), v.grand_worth()));
    }
  }
}

TEMPLATE_TEST_CASE("least-square value properties", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(41);
  const int n = 4;

  // any valid weights recover x on an additive game
  const Allocation<R> x = sample_allocation<R>(n, rng);
  std::vector<R> m{lit<R>(1, 2), lit<R>(2), lit<R>(1), lit<R>(0)};
  const LSWeights<R> weights = LSWeights<R>::from_sizes(m);
  REQUIRE(allocations_close(least_square_value(additive_game(x), weights), x));

  // m(s) = 1/C(n-2, s-1) reproduces the Shapley value
  for (int nn = 3; nn <= 5; ++nn) {
    std::vector<R> msh(static_cast<std::size_t>(nn), ScalarTraits<R>::zero());
    for (int s = 1; s < nn; ++s)
      msh[static_cast<std::size_t>(s - 1)] = fraction_as<R>(1, binomial_big(nn - 2, s - 1));
    const LSWeights<R> shapley_weights = LSWeights<R>::from_sizes(msh);
    Rng t = rng.stream(static_cast<std::uint64_t>(nn));
    const Game<R> v = sample_uniform_game<R>(nn, t);
    REQUIRE(allocations_close(least_square_value(v, shapley_weights), shapley_value(v)));
  }

  // the S = empty objective term shifts nothing
  const Game<R> g = sample_uniform_game<R>(n, rng);
  std::vector<R> with_empty{lit<R>(3), lit<R>(1), lit<R>(1), lit<R>(2), lit<R>(1)};
  const LSWeights<R> flagged(with_empty);
  REQUIRE(allocations_close(least_square_value(g, flagged, false),
                            least_square_value(g, flagged, true)));

  // extracted coefficients are ELS
  const auto coeffs = extract_coefficients(least_square_rule<R>(weights), n);
  REQUIRE(coeffs.symmetric);
  REQUIRE(coeffs.els);

  REQUIRE_THROWS_AS(LSWeights<R>::from_sizes(std::vector<R>{lit<R>(-1), lit<R>(1), lit<R>(0)}),
                    Error);
  REQUIRE_THROWS_AS(
      LSWeights<R>::from_sizes(std::vector<R>{lit<R>(0), lit<R>(0), lit<R>(1)}), Error);
}

TEMPLATE_TEST_CASE("singular stationarity systems are rejected", "[values]", double, Rational) {
  using R = TestType;
  detail::Matrix<R> singular{{lit<R>(1), lit<R>(2)}, {lit<R>(2), lit<R>(4)}};
  std::vector<R> rhs{lit<R>(1), lit<R>(1)};
  REQUIRE_THROWS_AS(detail::solve_linear(std::move(singular), std::move(rhs)),
                    DegenerateObjective);
}

TEST_CASE("ill-conditioned float systems trip the conditioning gate", "[values]") {
  detail::Matrix<double> nearly{{1.0, 1.0}, {1.0, 1.0 + 1e-14}};
  std::vector<double> rhs{1.0, 1.0};
  REQUIRE_THROWS_AS(detail::solve_linear(std::move(nearly), std::move(rhs), 1e12),
                    DegenerateObjective);
}

TEMPLATE_TEST_CASE("counterexample rules", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(43);
  const Allocation<R> x = sample_allocation<R>(3, rng);
  REQUIRE(standalone_rule<R>()(additive_game(x)) == x);  // singleton worths are copies

  REQUIRE(allocations_close(marginal_rule<R>()(unanimity_game<R>(3, Coalition::of({1, 2}))),
                            alloc<R>({lit<R>(1), lit<R>(1), lit<R>(0)})));

  const Game<R> v = sample_uniform_game<R>(3, rng);
  const Allocation<R> dict = dictator_rule<R>(1)(v);
  REQUIRE(dict.pay(1) == v.grand_worth());
  REQUIRE(dict.pay(2) == lit<R>(0));
  REQUIRE(dict.pay(3) == lit<R>(0));

  // proportional division and its domain guard
  std::vector<R> w(8, ScalarTraits<R>::zero());
  w[0b001] = lit<R>(1);
  w[0b010] = lit<R>(3);
  w[0b100] = lit<R>(4);
  w[0b111] = lit<R>(16);
  const Game<R> pv(3, std::move(w));
  REQUIRE(allocations_close(prop_division_rule<R>()(pv),
                            alloc<R>({lit<R>(2), lit<R>(6), lit<R>(8)})));
  REQUIRE_THROWS_AS(prop_division_rule<R>()(unanimity_game<R>(3, Coalition::grand(3))),
                    DomainGuardFailed);

  // power rule with integer exponent
  std::vector<R> pw(8, ScalarTraits<R>::zero());
  pw[0b001] = lit<R>(2);
  pw[0b010] = lit<R>(-1);
  pw[0b100] = lit<R>(1);
  pw[0b111] = lit<R>(12);
  const Game<R> gv(3, std::move(pw));
  // squares: 4, 1, 1; residual (12-6)/3 = 2
  REQUIRE(allocations_close(power_rule<R>(2.0)(gv), alloc<R>({lit<R>(6), lit<R>(3), lit<R>(3)})));
  REQUIRE(close(power_rule<R>(2.0)(gv).total(), gv.grand_worth()));
}

TEST_CASE("power rule guards non-integer exponents", "[values]") {
  std::vector<double> w(8, 0.0);
  w[0b001] = -2.0;
  w[0b111] = 5.0;
  const Game<double> v(3, std::move(w));
  REQUIRE_THROWS_AS(power_rule<double>(0.5)(v), DomainGuardFailed);
  std::vector<double> ok(8, 0.0);
  ok[0b001] = 4.0;
  ok[0b111] = 5.0;
  const Game<double> v2(3, std::move(ok));
  const auto pay = power_rule<double>(0.5)(v2);
  REQUIRE(close(pay.pay(1), 2.0 + (5.0 - 2.0) / 3.0));
}

TEMPLATE_TEST_CASE("efficiency across the built-in ELS rules", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(47);
  for (int n = 3; n <= 5; ++n) {
    Rng t = rng.stream(static_cast<std::uint64_t>(n));
    const Game<R> v = sample_uniform_game<R>(n, t);
    for (const auto& rule : {shapley_rule<R>(), cis_rule<R>(), ensc_rule<R>(), ed_rule<R>(),
                             psi_rule<R>(2), seeded_affine_rule<R>(99, 0, 1, "combo")})
      REQUIRE(close(rule(v).total(), v.grand_worth()));
  }
}

TEMPLATE_TEST_CASE("Eq.(1): affine rules on additive games", "[values]", double, Rational) {
  using R = TestType;
  Rng rng(53);
  const int n = 4;
  const Allocation<R> x = sample_allocation<R>(n, rng);
  // alpha = (1/4, 1/8, 1/8, 1/2): alpha_n = 1/2
  AffineWeights<R> alpha(std::vector<R>{lit<R>(1, 4), lit<R>(1, 8), lit<R>(1, 8), lit<R>(1, 2)});
  const Allocation<R> pay = affine_combination_rule<R>(alpha)(additive_game(x));
  const R xbar = x.mean();
  for (int p = 1; p <= n; ++p)
    REQUIRE(close(pay.pay(p), lit<R>(1, 2) * xbar + lit<R>(1, 2) * x.pay(p)));
}
