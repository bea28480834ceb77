#include <catch2/catch_amalgamated.hpp>

#include "wlab/exact.hpp"
#include "wlab/ratenum.hpp"
#include "wlab/real.hpp"

using namespace wlab;

TEST_CASE("cantor pairing basics") {
  CHECK(pair_code(0, 0) == 0);
  CHECK(pair_code(1, 0) == 1);
  CHECK(pair_code(0, 1) == 2);
  CHECK(pair_code(2, 0) == 3);
  CHECK(pair_code(1, 1) == 4);
  CHECK(pair_code(0, 2) == 5);
  for (Int t = 0; t < 200; ++t) {
    auto [n, k] = unpair_code(t);
    CHECK(pair_code(n, k) == t);
  }
  Int big("123456789012345678901234567890");
  auto [n, k] = unpair_code(big);
  CHECK(pair_code(n, k) == big);
}

TEST_CASE("word codes enumerate binary words in length-lex order") {
  CHECK(word_code({}) == 0);
  CHECK(word_code({0}) == 1);
  CHECK(word_code({1}) == 2);
  CHECK(word_code({0, 0}) == 3);
  CHECK(word_code({0, 1}) == 4);
  CHECK(word_code({1, 0}) == 5);
  CHECK(word_code({1, 1}) == 6);
  for (Int c = 0; c < 128; ++c) CHECK(word_code(word_decode(c)) == c);
  std::vector<int> deep(45, 1);
  deep[7] = 0;
  CHECK(word_decode(word_code(deep)) == deep);
}

TEST_CASE("zigzag integer coding") {
  CHECK(zigzag(0) == 0);
  CHECK(zigzag(-1) == 1);
  CHECK(zigzag(1) == 2);
  CHECK(zigzag(-2) == 3);
  CHECK(zigzag(2) == 4);
  for (long long z = -40; z <= 40; ++z) CHECK(unzigzag(zigzag(Int(z))) == z);
}

TEST_CASE("rational enumeration and codes") {
  CHECK(q_at(0) == 0);
  CHECK(least_code_of(Rat(1, 2)) == 8);
  CHECK(q_at(8) == Rat(1, 2));
  CHECK(least_code_of(Rat(-1, 3)) == 44);
  CHECK(q_at(44) == Rat(-1, 3));
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Int j = Int(rng.below(100000));
    Rat v = q_at(j);
    CHECK(q_at(least_code_of(v)) == v);
    CHECK(least_code_of(v) <= j);
    Int lifted = code_of_at_least(v, j + 1);
    CHECK(lifted > j);
    CHECK(q_at(lifted) == v);
  }
}

TEST_CASE("isqrt and perfect squares") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  Int n("1000000000000000000000000000");
  CHECK(isqrt(n * n) == n);
  CHECK(isqrt(n * n + 1) == n);
  CHECK(isqrt(n * n - 1) == n - 1);
  CHECK(is_perfect_square(144));
  CHECK(!is_perfect_square(145));
}

TEST_CASE("quadratic irrational comparisons") {
  Real golden = Real::quadratic(1, 5, 2);
  CHECK(golden.cmp(Rat(809, 500)) > 0);   // 1.618 < phi
  CHECK(golden.cmp(Rat(81, 50)) < 0);     // 1.62 > phi
  CHECK(golden.cmp(Rat(1)) > 0);
  CHECK(golden.floor() == 1);

  Real neg_sqrt2 = Real::quadratic(0, 2, -1);
  CHECK(neg_sqrt2.cmp(Rat(-1)) < 0);
  CHECK(neg_sqrt2.cmp(Rat(-2)) > 0);
  CHECK(neg_sqrt2.floor() == -2);

  Real sq = Real::quadratic(0, 9, 2);  // collapses to 3/2
  CHECK(sq.is_rational());
  CHECK(sq.rat() == Rat(3, 2));
}

TEST_CASE("continued fractions: canonical expansions") {
  auto cf355 = cf_of_rational(Rat(355, 113));
  REQUIRE(cf355.size() == 3);
  CHECK(cf355[0] == 3);
  CHECK(cf355[1] == 7);
  CHECK(cf355[2] == 16);

  auto cf_neg = cf_of_rational(Rat(-7, 3));  // -7/3 = -3 + 2/3
  REQUIRE(cf_neg.size() == 3);
  CHECK(cf_neg[0] == -3);
  CHECK(cf_neg[1] == 1);
  CHECK(cf_neg[2] == 2);

  CHECK(cf_of_rational(Rat(5)).size() == 1);

  Real golden = Real::quadratic(1, 5, 2);
  auto g = cf_prefix(golden, 25);
  for (auto& a : g) CHECK(a == 1);

  Real sqrt2 = Real::quadratic(0, 2, 1);
  auto s2 = cf_prefix(sqrt2, 12);
  CHECK(s2[0] == 1);
  for (std::size_t i = 1; i < s2.size(); ++i) CHECK(s2[i] == 2);

  Real sqrt3 = Real::quadratic(0, 3, 1);
  auto s3 = cf_prefix(sqrt3, 9);
  CHECK(s3[0] == 1);
  for (std::size_t i = 1; i < s3.size(); ++i) CHECK(s3[i] == (i % 2 == 1 ? 1 : 2));
}

TEST_CASE("continued fraction convergents bracket the value") {
  Real x = Real::quadratic(3, 19, 7);
  auto cf = cf_prefix(x, 22);
  Rat h0(cf[0]), h1 = Rat(cf[1] * cf[0] + 1, cf[1]);
  Int pm2 = 1, pm1 = cf[0], qm2 = 0, qm1 = 1;
  for (std::size_t i = 1; i < cf.size(); ++i) {
    Int p = cf[i] * pm1 + pm2, q = cf[i] * qm1 + qm2;
    Rat conv(p, q);
    if (i % 2 == 1)
      CHECK(x.cmp(conv) < 0);
    else
      CHECK(x.cmp(conv) > 0);
    pm2 = pm1; pm1 = p; qm2 = qm1; qm1 = q;
  }
  (void)h0; (void)h1;
}

TEST_CASE("decimal digit extraction") {
  Real third = Real::rational(Rat(1, 3));
  for (Nat k = 1; k <= 6; ++k) CHECK(third.decimal_digit(k) == 3);

  Real golden = Real::quadratic(1, 5, 2);  // 1.6180339887...
  std::vector<Nat> want = {6, 1, 8, 0, 3, 3, 9, 8, 8, 7};
  for (Nat k = 1; k <= 10; ++k) CHECK(golden.decimal_digit(k) == want[k - 1]);

  Real neg = Real::rational(Rat(-5, 4));  // -1.25 = -2 + 0.75
  CHECK(neg.floor() == -2);
  CHECK(neg.decimal_digit(1) == 7);
  CHECK(neg.decimal_digit(2) == 5);
  CHECK(neg.decimal_digit(3) == 0);
}

TEST_CASE("decimal grid predicate") {
  CHECK(Real::rational(Rat(3, 8)).is_decimal_grid());
  CHECK(Real::rational(Rat(7, 20)).is_decimal_grid());
  CHECK(!Real::rational(Rat(1, 3)).is_decimal_grid());
  CHECK(!Real::quadratic(0, 2, 1).is_decimal_grid());
  CHECK(Real::rational(Rat(3, 8)).is_dyadic());
  CHECK(!Real::rational(Rat(7, 20)).is_dyadic());
}

TEST_CASE("descriptor-backed reals") {
  RealDesc d = RealDesc::from_exact(Real::quadratic(0, 2, 1));
  CHECK(desc_floor(d) == 1);
  auto [lo, hi] = d.bracket(20);
  CHECK(hi - lo <= pow2(-20));
  CHECK(d.cmp(lo) >= 0);
  CHECK(d.cmp(hi) <= 0);
  CHECK(desc_decimal_digit(d, 1) == 4);
  CHECK(desc_decimal_digit(d, 2) == 1);
  CHECK(desc_decimal_digit(d, 3) == 4);
  CHECK(desc_decimal_digit(d, 4) == 2);

  DescCf cf(d);
  CHECK(cf.next() == 1);
  for (int i = 0; i < 8; ++i) CHECK(cf.next() == 2);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
  CHECK(simplest_between(Rat(0), Rat(1)) == Rat(1, 2));
  CHECK(simplest_between(Rat(5, 2), Rat(7, 2)) == Rat(3));
  CHECK(simplest_between(Rat(141, 100), Rat(142, 100)) == Rat(17, 12));
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat a(Int(rng.below(2000)) - 1000, Int(rng.range(1, 60)));
    Rat w(1, Int(rng.range(1, 5000)));
    Rat s = simplest_between(a, a + w);
    CHECK(s > a);
    CHECK(s < a + w);
  }
}

TEST_CASE("dyadic approximants") {
  Real golden = Real::quadratic(1, 5, 2);
  CHECK(dyadic_below(golden, 4) == Rat(25, 16));
  CHECK(dyadic_above(golden, 4) == Rat(26, 16));
  for (Nat k = 1; k < 30; ++k) {
    CHECK(golden.cmp(dyadic_below(golden, k)) > 0);
    CHECK(golden.cmp(dyadic_above(golden, k)) < 0);
    CHECK(dyadic_below(golden, k) <= dyadic_below(golden, k + 1));
  }
  Real r = Real::rational(Rat(3, 4));
  CHECK(dyadic_below(r, 2) == Rat(3, 4));
  CHECK(dyadic_above(r, 2) == Rat(3, 4));
}

TEST_CASE("value literal parsing") {
  auto a = parse_real("355/113");
  REQUIRE(a.has_value());
  CHECK(a->rat() == Rat(355, 113));
  auto b = parse_real("(1+sqrt(5))/2");
  REQUIRE(b.has_value());
  CHECK(!b->is_rational());
  CHECK(b->floor() == 1);
  auto c = parse_real("sqrt(2)");
  REQUIRE(c.has_value());
  CHECK(c->floor() == 1);
  auto d = parse_real("-3");
  REQUIRE(d.has_value());
  CHECK(d->rat() == -3);
  CHECK(!parse_real("foo").has_value());
  CHECK(!parse_real("1/0").has_value());
  auto e = parse_real("(0+sqrt(9))/3");
  REQUIRE(e.has_value());
  CHECK(e->is_rational());
  CHECK(e->rat() == 1);
}

TEST_CASE("deterministic rng streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.next() == b.next());
  Rng c(43);
  CHECK(Rng(42).next() != c.next());
}
