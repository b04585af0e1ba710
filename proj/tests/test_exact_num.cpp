#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "density.hpp"
#include "errors.hpp"
#include "params.hpp"
#include "support/oracle.hpp"

using namespace fracmeas;

namespace {

Rational br_width(const std::pair<Rational, Rational>& br) {
  return br.second - br.first;
}

bool bracket_contains(const std::pair<Rational, Rational>& br,
                      const Rational& value, const Rational& slack) {
  return br.first - slack <= value && value <= br.second + slack;
}

}  // namespace

TEST_CASE("canonicalize divides out common (n,l) factors") {
  Params p(2, 3);
  CHECK(make_density(p, 4, 9) == Density{1, 1});
  CHECK(make_density(p, 2, 2) == Density{2, 2});
  CHECK(make_density(p, 2, 3) == Density{1, 1});
  // idempotent
  Density d = make_density(p, 8, 18);
  CHECK(canonicalize(p, d) == d);
}

TEST_CASE("multiplicative dependence detection") {
  CHECK(Params(2, 3).mult_dep() == std::nullopt);
  CHECK(Params(9, 10).mult_dep() == std::nullopt);
  auto dep24 = Params(2, 4).mult_dep();
  REQUIRE(dep24.has_value());
  CHECK(dep24->m == 2);
  CHECK(dep24->a == 1);
  CHECK(dep24->b == 2);
  auto dep48 = Params(4, 8).mult_dep();
  REQUIRE(dep48.has_value());
  CHECK(dep48->m == 2);
  CHECK(dep48->a == 2);
  CHECK(dep48->b == 3);
  auto dep39 = Params(3, 9).mult_dep();
  REQUIRE(dep39.has_value());
  CHECK(dep39->m == 3);
  CHECK(dep39->a == 1);
  CHECK(dep39->b == 2);
}

TEST_CASE("density_compare basic orderings") {
  Params p(2, 3);
  // d(O_1) = 2/2^s ~ 1.2915 exceeds the unit density of a basic interval.
  auto oc = density_compare(p, Density{1, 1}, Density{2, 2});
  CHECK(oc.ordering == Order::less);
  CHECK(oc.certified);

  auto eq = density_compare(p, Density{2, 2}, Density{2, 2});
  CHECK(eq.ordering == Order::equal);
  CHECK(eq.certified);
  CHECK(eq.precision_bits_used == 0);
}

TEST_CASE("dependent parameters decide equality by integer identity") {
  // n = 2^2, l = 2^3: s = 2/3, so p1^3 L2^2 = p2^3 L1^2 decides equality.
  Params p(4, 8);
  // 9 / 27^(2/3) = 9/9 = 1: a genuine tie between distinct canonical pairs.
  Density a{9, 27};
  CHECK(canonicalize(p, a) == a);
  auto oc = density_compare(p, a, Density{1, 1});
  CHECK(oc.ordering == Order::equal);
  CHECK(oc.precision_bits_used == 0);
  // And the integer identity itself: 9^3 * 1^2 == 1^3 * 27^2.
  CHECK(ipow(Integer(9), 3) == ipow(Integer(27), 2));

  // s = 1/2 tie: 12/sqrt(54) == 4/sqrt(6).
  Params q(2, 4);
  auto tie = density_compare(q, Density{12, 54}, Density{4, 6});
  CHECK(tie.ordering == Order::equal);
  auto lt = density_compare(q, Density{12, 55}, Density{4, 6});
  CHECK(lt.ordering == Order::less);
}

TEST_CASE("density_compare sorts consistently (total order on samples)") {
  Params p(2, 3);
  std::mt19937_64 rng(7);
  std::vector<Density> values;
  for (int i = 0; i < 100; ++i) {
    Integer pp(static_cast<long>(1 + rng() % 50));
    Integer ll(static_cast<long>(1 + rng() % 50));
    values.push_back(make_density(p, pp, ll));
  }
  auto less = [&](const Density& a, const Density& b) {
    return density_compare(p, a, b).ordering == Order::less;
  };
  std::sort(values.begin(), values.end(), less);
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    auto oc = density_compare(p, values[i], values[i + 1]);
    CHECK(oc.ordering != Order::greater);
    // antisymmetry
    auto rev = density_compare(p, values[i + 1], values[i]);
    if (oc.ordering == Order::less) CHECK(rev.ordering == Order::greater);
    if (oc.ordering == Order::equal) CHECK(rev.ordering == Order::equal);
  }
}

TEST_CASE("pow_s_bracket encloses the oracle value and shrinks") {
  Params p(2, 3);
  const Rational slack(Integer(1), ipow(Integer(2), 200));

  SUBCASE("x = 1 is exact") {
    auto br = pow_s_bracket(p, Rational(1), 20);
    CHECK(br.first == 1);
    CHECK(br.second == 1);
  }
  SUBCASE("x = 1/2") {
    auto br = pow_s_bracket(p, Rational(1, 2), 20);
    Rational oracle = testoracle::pow_s(Rational(1, 2), 2, 3, 256);
    CHECK(bracket_contains(br, oracle, slack));
    // also matches an independently frozen 30-digit decimal
    CHECK(decimal_string(oracle, 12, RoundDir::down) == "0.645760117165");
    CHECK(br_width(br) <= Rational(1, 1 << 20) * br.first);
  }
  SUBCASE("x = 2") {
    auto br = pow_s_bracket(p, Rational(2), 20);
    Rational oracle = testoracle::pow_s(Rational(2), 2, 3, 256);
    CHECK(bracket_contains(br, oracle, slack));
    CHECK(decimal_string(oracle, 12, RoundDir::down) == "1.548562652630");
  }
  SUBCASE("widths shrink monotonically with bits") {
    Rational prev_width(-1);
    for (int bits : {8, 16, 32, 64, 128, 200}) {
      auto br = pow_s_bracket(p, Rational(7, 5), bits);
      Rational w = br_width(br);
      if (prev_width >= 0) CHECK(w <= prev_width);
      prev_width = w;
    }
  }
  SUBCASE("powers of l are exact") {
    auto br = pow_s_bracket(p, Rational(9), 10);
    CHECK(br.first == 4);
    CHECK(br.second == 4);
    auto br2 = pow_s_bracket(p, Rational(1, 3), 10);
    CHECK(br2.first == Rational(1, 2));
    CHECK(br2.second == Rational(1, 2));
  }
}

TEST_CASE("try_exact_pow_s recognizes the decidable cases") {
  Params dep(4, 8);  // s = 2/3
  auto v = try_exact_pow_s(dep, Rational(64));
  REQUIRE(v.has_value());
  CHECK(*v == 16);  // 64^(2/3)
  auto w = try_exact_pow_s(dep, Rational(27, 8));
  REQUIRE(w.has_value());
  CHECK(*w == Rational(9, 4));
  CHECK(try_exact_pow_s(dep, Rational(5)) == std::nullopt);

  Params indep(2, 3);
  CHECK(try_exact_pow_s(indep, Rational(5)) == std::nullopt);
  auto u = try_exact_pow_s(indep, Rational(1, 27));
  REQUIRE(u.has_value());
  CHECK(*u == Rational(1, 8));
}

TEST_CASE("s_bracket covers the oracle exponent") {
  Params p(9, 10);
  auto br = s_bracket(p, 64);
  Rational oracle = testoracle::s_value(9, 10, 256);
  CHECK(br.first <= oracle);
  CHECK(oracle <= br.second);
  CHECK(decimal_string(oracle, 10, RoundDir::down) == "0.9542425094");

  // dependent pairs give the exact fraction
  auto dep = s_bracket(Params(2, 4), 64);
  CHECK(dep.first == Rational(1, 2));
  CHECK(dep.second == Rational(1, 2));
}

TEST_CASE("undecided comparison at a tiny cap raises") {
  // 48/10^s vs 31/5^s differ by ~1e-4 relative: ln(48/31) is within
  // 3.5e-5 of s ln 2.  Eight bits of interval arithmetic cannot separate
  // that; the default escalation can.
  Params tiny(2, 3);
  tiny.set_precision_cap(8);
  CHECK_THROWS_AS((void)density_compare(tiny, Density{48, 10}, Density{31, 5}),
                  PrecisionExhausted);

  Params full(2, 3);
  auto oc = density_compare(full, Density{48, 10}, Density{31, 5});
  CHECK(oc.ordering == Order::less);
  CHECK(oc.certified);
  CHECK(oc.precision_bits_used >= 128);
}

TEST_CASE("density_value_compare handles rational mass/diameter pairs") {
  Params p(2, 3);
  // The half-in half-out interval: mass 1/2, diameter 2/3, value 2^-s,
  // equal to the canonical pair (1, 2).
  auto oc = density_value_compare(p, Rational(1, 2), Rational(2, 3),
                                  Rational(1), Rational(2));
  CHECK(oc.ordering == Order::equal);
  CHECK(oc.precision_bits_used == 0);
  // Strictly thinner interval with the same mass: larger density.
  auto gt = density_value_compare(p, Rational(1, 2), Rational(1, 2),
                                  Rational(1), Rational(2));
  CHECK(gt.ordering == Order::greater);
}

TEST_CASE("blow-up invariance: prepending a digit preserves the pair") {
  Params p(3, 5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Integer pp(static_cast<long>(1 + rng() % 40));
    Integer ll(static_cast<long>(1 + rng() % 40));
    Density d = make_density(p, pp, ll);
    // The image under any branch scales mass by 1/n and diameter by 1/l,
    // i.e. multiplies both pair entries by (n, l), canceling exactly.
    Density mapped = make_density(p, d.p * p.n(), d.L * p.l());
    CHECK(mapped == d);
  }
}
