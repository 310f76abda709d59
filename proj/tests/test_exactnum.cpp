#include <doctest.h>

#include "oracle.hpp"
#include "quartic/errors.hpp"
#include "quartic/exactnum.hpp"

using namespace quartic;

TEST_SUITE("exactnum") {
  TEST_CASE("rat reduces to canonical form") {
    CHECK(rat(928, 4080) == Rational::parse("58/255"));
    CHECK(rat(928, 4080).num() == 58);
    CHECK(rat(928, 4080).den() == 255);
    CHECK(rat(-6, -4) == Rational(BigInt(3), BigInt(2)));
    CHECK(rat(-6, -4).den() == 2);
    Rational zero = rat(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(rat(5, -10).str() == "-1/2");
    CHECK_THROWS_AS(rat(1, 0), InvalidInput);
  }

  TEST_CASE("parse and print") {
    CHECK(Rational::parse("12").str() == "12");
    CHECK(Rational::parse("-14/21").str() == "-2/3");
    CHECK(Rational::parse(" 3/ 6").str() == "1/2");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1.5"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse(""), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), InvalidInput);
    CHECK_THROWS_AS(parse_bigint("12a"), InvalidInput);
  }

  TEST_CASE("ordering and helpers") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(-3, 4).abs() == rat(3, 4));
    CHECK(rat(-3, 4).inverse() == rat(-4, 3));
    CHECK_THROWS_AS(Rational(0).inverse(), InvalidInput);
    CHECK(rat(2, 3).pow(4) == rat(16, 81));
    CHECK(rat(2, 3).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
  }

  TEST_CASE("exact_sqrt") {
    const oracle::Curve e16{-768, 195840, -16646400};
    const oracle::Q value = oracle::rhs(e16, 340);
    CHECK(value == 462400);
    auto r = exact_sqrt(oracle::from_q(value));
    REQUIRE(r);
    CHECK(*r == Rational(680));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(exact_sqrt(Rational(2)));
    CHECK_FALSE(exact_sqrt(Rational(-4)));
    CHECK(exact_sqrt(rat(9, 49)) == rat(3, 7));
    CHECK_FALSE(exact_sqrt(rat(9, 50)));
  }

  TEST_CASE("exact_fourth_root") {
    CHECK(exact_fourth_root(rat(16, 81)) == rat(2, 3));
    CHECK_FALSE(exact_fourth_root(Rational(8)));
    CHECK_FALSE(exact_fourth_root(Rational(-16)));
    CHECK(exact_fourth_root(Rational(0)) == Rational(0));
  }

  TEST_CASE("clear_denominators") {
    std::vector<Rational> v{rat(-1203, 4080), rat(38, 4080), rat(653, 4080), rat(-588, 4080)};
    auto c = clear_denominators(v);
    CHECK(c.scale == 4080);
    CHECK(c.values == std::vector<BigInt>{-1203, 38, 653, -588});

    std::vector<Rational> ints{Rational(1), Rational(2), Rational(3)};
    auto ci = clear_denominators(ints);
    CHECK(ci.scale == 1);
    CHECK(ci.values == std::vector<BigInt>{1, 2, 3});

    std::vector<Rational> halves{rat(1, 2), rat(1, 3)};
    auto ch = clear_denominators(halves);
    CHECK(ch.scale == 6);
    CHECK(ch.values == std::vector<BigInt>{3, 2});
  }

  TEST_CASE("fourth-power-free integer representative") {
    auto s = fourth_power_free_integer(Rational(16));
    CHECK(s.core == Rational(1));
    CHECK(s.t == Rational(2));
    s = fourth_power_free_integer(rat(103, 8));
    CHECK(s.core == Rational(206));
    CHECK(s.t == rat(1, 2));
    s = fourth_power_free_integer(rat(4, 3));
    CHECK(s.core == Rational(108));
    CHECK(s.t == rat(1, 3));
    s = fourth_power_free_integer(Rational(7000));
    CHECK(s.core == Rational(7000));
    // h = core * t^4 always
    for (const char* h : {"64/123", "54/61", "-805/3977", "1/81", "48"}) {
      auto r = Rational::parse(h);
      auto sp = fourth_power_free_integer(r);
      CHECK(sp.core * sp.t.pow(4) == r);
      CHECK(sp.core.is_integer());
    }
  }

  TEST_CASE("field axioms on random samples") {
    oracle::RandomRational gen(11);
    for (int i = 0; i < 500; ++i) {
      const Rational x = gen(), y = gen(), z = gen();
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + Rational(0) == x);
      CHECK(x * Rational(1) == x);
      CHECK(x + (-x) == Rational(0));
      CHECK(x - y == x + (-y));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == Rational(1));
        CHECK(y / x * x == y);
      }
      // agreement with GMP's rational type
      CHECK(oracle::to_q(x * y + z) == oracle::to_q(x) * oracle::to_q(y) + oracle::to_q(z));
      CHECK(((x < y) == (oracle::to_q(x) < oracle::to_q(y))));
      // canonical form after every operation
      const Rational w = x * y - z;
      CHECK(w.den() > 0);
      CHECK(gcd(w.num(), w.den()) == 1);
    }
  }

  TEST_CASE("exact_sqrt of squares") {
    oracle::RandomRational gen(12, 1000000);
    for (int i = 0; i < 1000; ++i) {
      const Rational r = gen();
      auto s = exact_sqrt(r * r);
      REQUIRE(s);
      CHECK(*s == r.abs());
    }
  }

  TEST_CASE("clear_denominators round trip") {
    oracle::RandomRational gen(13, 5000);
    for (int i = 0; i < 300; ++i) {
      std::vector<Rational> v;
      const long n = gen.integer(1, 6);
      for (long j = 0; j < n; ++j) v.push_back(gen());
      auto c = clear_denominators(v);
      REQUIRE(c.values.size() == v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        CHECK(Rational(c.values[j], c.scale) == v[j]);
      }
      BigInt l = 1;
      for (const auto& x : v) l = lcm(l, x.den());
      CHECK(c.scale == l);
    }
  }
}
