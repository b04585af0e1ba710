#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "ifs.hpp"
#include "params.hpp"

using namespace fracmeas;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params(3, 2), InvalidArgument);
  CHECK_THROWS_AS(Params(1, 5), InvalidArgument);
  CHECK_THROWS_AS(Params(4, 4), InvalidArgument);
  Params p(2, 3);
  CHECK(p.r() == Rational(1, 2));
  Params q(3, 5);
  CHECK(q.r() == Rational(1, 2));  // 2/4 in lowest terms
  CHECK(Params(9, 10).r() == Rational(8, 9));
}

TEST_CASE("apply_map evaluates (x+i)/l exactly") {
  Params p(2, 3);
  CHECK(apply_map(p, 1, Rational(1)) == Rational(2, 3));
  // r is the fixed point of the top branch
  CHECK(apply_map(p, 1, p.r()) == p.r());
  Params q(3, 5);
  CHECK(apply_map(q, 0, Rational(0)) == 0);
  CHECK_THROWS_AS(apply_map(p, 2, Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(apply_map(p, -1, Rational(0)), InvalidArgument);
}

TEST_CASE("word/index round trip and scaled endpoints") {
  Params p(3, 4);
  for (Index v = 0; v < 27; ++v) {
    Word w = word_from_index(p, v, 3);
    CHECK(index_from_word(p, w) == v);
  }
  // words read in base l give the scaled left endpoint
  CHECK(left_scaled(p, 4, 2) == 5);   // word 11 -> 1*4+1
  CHECK(left_scaled(p, 5, 2) == 6);   // word 12
  CHECK(left_scaled(p, 7, 2) == 9);   // word 21
  CHECK_THROWS_AS(word_from_index(p, 9, 2), InvalidArgument);
}

TEST_CASE("level_set matches the explicit construction") {
  Params p(2, 3);
  IntervalUnion o0 = level_set(p, 0);
  CHECK(o0.indices.size() == 1);
  CHECK(o0.left == 0);
  CHECK(o0.right == 1);

  IntervalUnion o1 = level_set(p, 1);
  CHECK(o1.indices.size() == 2);
  CHECK(o1.right - o1.left == Rational(2, 3));

  IntervalUnion o2 = level_set(p, 2);
  REQUIRE(o2.indices.size() == 4);
  // [0,1/9] u [1/9,2/9] u [1/3,4/9] u [4/9,5/9]
  BasicInterval b2 = basic_interval(p, word_from_index(p, 2, 2));
  CHECK(b2.left == Rational(1, 3));
  CHECK(b2.right == Rational(4, 9));
  CHECK(o2.right == Rational(5, 9));

  // diameter identity |O_k| = r + (1-r) l^-k, checked exactly to k = 20
  for (int k = 1; k <= 20; ++k) {
    ConsecutiveUnion full{k, 0, p.level_count(k) - 1};
    Rational diam(hull_scaled(p, full), ipow(p.l(), static_cast<unsigned long>(k)));
    diam.canonicalize();
    Rational expect = p.r() + (1 - p.r()) / Rational(ipow(p.l(), static_cast<unsigned long>(k)));
    expect.canonicalize();
    CHECK(diam == expect);
  }
}

TEST_CASE("right endpoint of the level set is the k-fold image of 1") {
  for (auto [n, l] : {std::pair<int, int>{2, 3}, {3, 5}, {4, 5}}) {
    Params p(n, l);
    for (int k = 1; k <= 8; ++k) {
      IntervalUnion ok = level_set(p, k);
      Rational x(1);
      for (int j = 0; j < k; ++j) x = apply_map(p, p.n() - 1, x);
      CHECK(ok.right == x);
    }
  }
}

TEST_CASE("endpoint formula agrees with repeated map application") {
  std::mt19937_64 rng(17);
  for (auto [n, l] : {std::pair<int, int>{2, 3}, {3, 5}, {9, 10}}) {
    Params p(n, l);
    for (int t = 0; t < 1000; ++t) {
      int k = 1 + static_cast<int>(rng() % 10);
      Word w;
      for (int j = 0; j < k; ++j)
        w.digits.push_back(static_cast<std::int64_t>(rng() % n));
      // left endpoint = phi_{w1} o ... o phi_{wk}(0)
      Rational x(0);
      for (int j = k - 1; j >= 0; --j)
        x = apply_map(p, w.digits[static_cast<size_t>(j)], x);
      CHECK(basic_interval(p, w).left == x);
    }
  }
}

TEST_CASE("blow_down strips a shared leading digit") {
  Params p(2, 3);
  IntervalUnion u = make_union(p, 2, {2, 3});
  IntervalUnion d = blow_down(p, u);
  CHECK(d.level == 1);
  CHECK(d.indices == std::vector<Index>{0, 1});

  IntervalUnion single = make_union(p, 1, {0});
  IntervalUnion top = blow_down(p, single);
  CHECK(top.level == 0);
  CHECK(top.indices == std::vector<Index>{0});

  Params q(3, 4);
  IntervalUnion v = make_union(q, 2, {4, 5});
  CHECK(blow_down(q, v).indices == std::vector<Index>{1, 2});

  IntervalUnion mixed = make_union(p, 2, {1, 2});
  CHECK_THROWS_AS(blow_down(p, mixed), InvalidArgument);
  CHECK_THROWS_AS(blow_down(p, level_set(p, 0)), InvalidArgument);
}

TEST_CASE("union construction validates its index set") {
  Params p(2, 3);
  CHECK_THROWS_AS(make_union(p, 1, {}), InvalidArgument);
  CHECK_THROWS_AS(make_union(p, 1, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(make_union(p, 1, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(make_union(p, 1, {2}), InvalidArgument);
}

TEST_CASE("enumeration refuses levels past the resource bound") {
  Params p(2, 3);
  p.set_enumeration_limit(1 << 10);
  CHECK_THROWS_AS(level_set(p, 11), ResourceLimit);
  CHECK(level_set(p, 10).indices.size() == 1024);
}

TEST_CASE("trailing top digits give the neighbouring gap type") {
  Params p(2, 3);
  // Level 2: index 0 touches 1; the gap right of 1 has type 1; index 3 is
  // the last, giving the outer type-2 gap.
  CHECK(trailing_top_digits(p, 0, 2) == 0);
  CHECK(trailing_top_digits(p, 1, 2) == 1);
  CHECK(trailing_top_digits(p, 2, 2) == 0);
  CHECK(trailing_top_digits(p, 3, 2) == 2);
}
