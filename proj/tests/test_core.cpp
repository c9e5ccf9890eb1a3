#include <catch2/catch_amalgamated.hpp>

#include "tug/game.hpp"
#include "tug/rng.hpp"
#include "tug/sampling.hpp"

using namespace tug;

namespace {

template <class R>
R lit(long long num, long long den = 1) {
  return fraction_as<R>(num, den);
}

}  // namespace

TEMPLATE_TEST_CASE("unanimity games", "[core]", double, Rational) {
  using R = TestType;
  const Game<R> u12 = unanimity_game<R>(3, Coalition::of({1, 2}));
  for (std::uint32_t m = 0; m < 8; ++m) {
    const bool contains = (m & 0b011u) == 0b011u;
    REQUIRE(u12.worth(m) == (contains ? lit<R>(1) : lit<R>(0)));
  }

  const Game<R> grand2 = unanimity_game<R>(2, Coalition::grand(2));
  REQUIRE(grand2.worth(0b11u) == lit<R>(1));
  REQUIRE(grand2.worth(0b01u) == lit<R>(0));
  REQUIRE(grand2.worth(0b10u) == lit<R>(0));

  const Game<R> grand3 = unanimity_game<R>(3, Coalition::grand(3));
  for (std::uint32_t m = 0; m < 7; ++m) REQUIRE(grand3.worth(m) == lit<R>(0));
  REQUIRE(grand3.worth(7) == lit<R>(1));

  REQUIRE_THROWS_AS(unanimity_game<R>(3, Coalition::empty()), EmptyCoalition);
}

TEMPLATE_TEST_CASE("dual games", "[core]", double, Rational) {
  using R = TestType;
  // dual of u_N has worth 1 on every nonempty coalition
  const Game<R> dual_un = dual_game(unanimity_game<R>(3, Coalition::grand(3)));
  REQUIRE(dual_un.worth(0u) == lit<R>(0));
  for (std::uint32_t m = 1; m < 8; ++m) REQUIRE(dual_un.worth(m) == lit<R>(1));

  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Rng t = rng.stream(trial);
    const Game<R> v = sample_uniform_game<R>(4, t);
    REQUIRE(games_close(dual_game(dual_game(v)), v));
  }

  // additive games are self-dual
  Rng arng(42);
  const Allocation<R> x = sample_allocation<R>(4, arng);
  const Game<R> xhat = additive_game(x);
  REQUIRE(games_close(dual_game(xhat), xhat));
}

TEMPLATE_TEST_CASE("additive games", "[core]", double, Rational) {
  using R = TestType;
  const Allocation<R> zero(3);
  REQUIRE(additive_game(zero) == Game<R>(3));

  const Allocation<R> x(std::vector<R>{lit<R>(1), lit<R>(2), lit<R>(3)});
  const Game<R> xhat = additive_game(x);
  REQUIRE(xhat.worth(Coalition::of({1, 3})) == lit<R>(4));
  REQUIRE(xhat.grand_worth() == lit<R>(6));

  Rng rng(7);
  const Allocation<R> y = sample_allocation<R>(5, rng);
  REQUIRE(close(additive_game(y).grand_worth(), y.total()));
}

TEMPLATE_TEST_CASE("permuted games", "[core]", double, Rational) {
  using R = TestType;
  Rng rng(11);
  const Game<R> v = sample_uniform_game<R>(3, rng);
  REQUIRE(permute_game(v, Permutation::identity(3)) == v);

  // swapping players 1 and 2 carries u_{1} to u_{2}
  const Permutation swap12({2, 1, 3});
  REQUIRE(permute_game(unanimity_game<R>(3, Coalition::single(1)), swap12) ==
          unanimity_game<R>(3, Coalition::single(2)));

  const Permutation pi({3, 1, 2});
  REQUIRE(permute_game(permute_game(v, pi), pi.inverse()) == v);

  // group action: pi applied after rho equals the composite permutation
  const Permutation rho({2, 3, 1});
  REQUIRE(permute_game(permute_game(v, rho), pi) == permute_game(v, pi.compose(rho)));

  REQUIRE_THROWS_AS(Permutation({1, 1, 3}), InvalidPermutation);
  REQUIRE_THROWS_AS(permute_game(v, Permutation::identity(4)), InvalidPermutation);
}

TEMPLATE_TEST_CASE("replace_grand and the decomposition identity", "[core]", double, Rational) {
  using R = TestType;
  Rng rng(13);
  const Game<R> v = sample_uniform_game<R>(4, rng);
  REQUIRE(replace_grand(v, v.grand_worth()) == v);

  // v^t + (v(N) - t) u_N = v (exact in rational mode)
  const Game<R> un = unanimity_game<R>(4, Coalition::grand(4));
  for (int k = 0; k < 10; ++k) {
    const R t = sample_worth<R>(rng, -20.0, 20.0);
    const Game<R> vt = replace_grand(v, t);
    const Game<R> back = linear_combination<R>({{lit<R>(1), &vt}, {v.grand_worth() - t, &un}});
    REQUIRE(games_close(back, v));
  }

  const Game<R> u2 = unanimity_game<R>(2, Coalition::grand(2));
  REQUIRE(replace_grand(u2, lit<R>(0)) == Game<R>(2));
}

TEMPLATE_TEST_CASE("nullified games", "[core]", double, Rational) {
  using R = TestType;
  Rng rng(17);
  const Game<R> v = sample_uniform_game<R>(4, rng);
  REQUIRE(nullified_game(v, Coalition::grand(4)) == v);

  // u_{1,2}|_{1} is the zero game: {1} ∩ T never contains {1,2}
  REQUIRE(nullified_game(unanimity_game<R>(3, Coalition::of({1, 2})), Coalition::single(1)) ==
          Game<R>(3));

  // v|_{i} = v({i}) u_{i}
  for (int i = 1; i <= 4; ++i) {
    const Game<R> ui = unanimity_game<R>(4, Coalition::single(i));
    const Game<R> expected =
        linear_combination<R>({{v.worth(Coalition::single(i)), &ui}});
    REQUIRE(nullified_game(v, Coalition::single(i)) == expected);
  }

  // worth identity and null propagation
  const Coalition s(0b0101u);
  const Game<R> vs = nullified_game(v, s);
  for (std::uint32_t m = 0; m < 16; ++m) REQUIRE(vs.worth(m) == v.worth(m & s.mask()));
  const Coalition nulls = null_players(vs);
  for (int p = 1; p <= 4; ++p)
    if (!s.contains(p)) REQUIRE(nulls.contains(p));

  REQUIRE(nullified_game(v, Coalition::empty()) == Game<R>(4));
}

TEMPLATE_TEST_CASE("null player detection", "[core]", double, Rational) {
  using R = TestType;
  REQUIRE(null_players(unanimity_game<R>(3, Coalition::of({1, 2}))) == Coalition::single(3));

  const Allocation<R> x(std::vector<R>{lit<R>(1), lit<R>(-2), lit<R>(3)});
  REQUIRE(null_players(additive_game(x)) == Coalition::empty());

  REQUIRE(null_players(Game<R>(3)) == Coalition::grand(3));
}

TEST_CASE("null detection tolerance in float mode", "[core]") {
  // a marginal contribution below tau_null counts as null
  std::vector<double> w(8, 0.0);
  w[0b001] = 5e-10;
  w[0b011] = 5e-10;
  w[0b101] = 5e-10;
  w[0b111] = 5e-10;
  const Game<double> v(3, std::move(w));
  REQUIRE(null_players(v) == Coalition::grand(3));
  REQUIRE(null_players(v, 1e-12) == Coalition::of({2, 3}));
}

TEMPLATE_TEST_CASE("linear combinations", "[core]", double, Rational) {
  using R = TestType;
  Rng rng(19);
  const Game<R> v = sample_uniform_game<R>(3, rng);
  const Game<R> w = sample_uniform_game<R>(3, rng);
  REQUIRE(linear_combination<R>({{lit<R>(1), &v}, {lit<R>(0), &w}}) == v);

  const Game<R> u1 = unanimity_game<R>(2, Coalition::single(1));
  const Game<R> u2 = unanimity_game<R>(2, Coalition::single(2));
  const Game<R> sum = linear_combination<R>({{lit<R>(1), &u1}, {lit<R>(1), &u2}});
  REQUIRE(sum.worth(0b01u) == lit<R>(1));
  REQUIRE(sum.worth(0b10u) == lit<R>(1));
  REQUIRE(sum.worth(0b11u) == lit<R>(2));

  const Game<R> un = unanimity_game<R>(3, Coalition::grand(3));
  REQUIRE(linear_combination<R>({{lit<R>(2), &un}, {lit<R>(-1), &un}}) == un);

  const Game<R> other_n = unanimity_game<R>(4, Coalition::single(1));
  REQUIRE_THROWS_AS(linear_combination<R>({{lit<R>(1), &v}, {lit<R>(1), &other_n}}),
                    MixedPlayerCount);
}

TEST_CASE("game construction validation", "[core]") {
  std::vector<double> bad(8, 0.0);
  bad[0] = 1.0;
  REQUIRE_THROWS_AS(Game<double>(3, std::move(bad)), NonZeroEmptySet);

  std::vector<double> nan_table(8, 0.0);
  nan_table[3] = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(Game<double>(3, std::move(nan_table)), Error);

  REQUIRE_THROWS_AS(Game<double>(1), PlayerCountTooSmall);
  REQUIRE_THROWS_AS(Game<double>(21), PlayerCountTooSmall);
}

TEST_CASE("coalition helpers", "[core]") {
  const Coalition s = Coalition::of({1, 3});
  REQUIRE(s.size() == 2);
  REQUIRE(s.complement(4) == Coalition::of({2, 4}));
  REQUIRE(s.size() + s.complement(4).size() == 4);
  REQUIRE(s.to_string() == "1,3");
  REQUIRE(Coalition::empty().to_string().empty());
  REQUIRE(Coalition::grand(3).mask() == 7u);
  REQUIRE(s.with(2).mask() == 0b111u);
  REQUIRE(s.without(3) == Coalition::single(1));
}
