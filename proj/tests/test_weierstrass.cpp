#include <doctest.h>

#include <fstream>

#include "golden.hpp"
#include "oracle.hpp"
#include "quartic/errors.hpp"
#include "quartic/method_one.hpp"
#include "quartic/method_two.hpp"
#include "quartic/weierstrass.hpp"

using namespace quartic;

namespace {

PointQ pt(const char* x, const char* y) { return PointQ(Rational::parse(x), Rational::parse(y)); }

oracle::Pt to_opt(const PointQ& p) {
  if (p.is_infinity()) return {};
  return {false, oracle::to_q(p.x()), oracle::to_q(p.y())};
}

bool same(const PointQ& p, const oracle::Pt& o) {
  if (p.is_infinity() || o.inf) return p.is_infinity() && o.inf;
  return oracle::to_q(p.x()) == o.x && oracle::to_q(p.y()) == o.y;
}

}  // namespace

TEST_SUITE("weierstrass") {
  TEST_CASE("contains") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    CHECK(contains(e16, pt("340", "680")));
    CHECK_FALSE(contains(e16, pt("340", "681")));
    CHECK(contains(e16, PointQ::infinity()));
    CHECK(contains(method_two::build_eprime(Rational(3)), PointQ::infinity()));
  }

  TEST_CASE("on_curve reports the residual") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    try {
      on_curve(e16, Rational(340), Rational(681));
      FAIL("expected rejection");
    } catch (const InvalidInput& e) {
      // 681^2 - 680^2 = 1361
      CHECK(std::string(e.what()).find("1361") != std::string::npos);
    }
  }

  TEST_CASE("group law on E(16)") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    const PointQ P = pt("340", "680");
    const PointQ P2 = add(e16, P, P);
    CHECK(P2 == pt("313", "-275"));
    CHECK(add(e16, P, P2) == pt("995860/729", "-727724440/19683"));
    CHECK(mul(e16, 4, P) == pt("123577441/302500", "305200800239/166375000"));
    CHECK(add(e16, P, PointQ::infinity()) == P);
    CHECK(add(e16, PointQ::infinity(), P) == P);
    CHECK(add(e16, P, negate(P)).is_infinity());
    CHECK(mul(e16, 1, P) == P);
    CHECK(mul(e16, 2, P) == add(e16, P, P));
    CHECK(mul(e16, 0, P).is_infinity());
    CHECK(mul(e16, -3, P) == negate(mul(e16, 3, P)));
    CHECK(dbl(e16, P) == P2);
  }

  TEST_CASE("group law agrees with the naive oracle") {
    const oracle::Curve oc = oracle::general_e(16);
    const CurveW e16 = method_one::build_curve(Rational(16));
    const PointQ P = pt("340", "680");
    for (long n = 1; n <= 8; ++n) {
      CHECK(same(mul(e16, n, P), oracle::mul(oc, n, to_opt(P))));
    }
  }

  TEST_CASE("two-torsion doubles to infinity") {
    // y^2 = x^3 - x has (0, 0), (1, 0), (-1, 0)
    const CurveW c(Rational(0), Rational(-1), Rational(0));
    CHECK(dbl(c, pt("0", "0")).is_infinity());
    CHECK(add(c, pt("0", "0"), pt("1", "0")) == pt("-1", "0"));
  }

  TEST_CASE("group axioms on generator multiples") {
    struct Sample {
      CurveW curve;
      PointQ gen;
    };
    std::vector<Sample> samples;
    for (const auto& ex : golden::method_one_examples()) {
      const CurveW c = method_one::build_curve(Rational::parse(ex.h));
      samples.push_back({c, pt(ex.generator.x, ex.generator.y)});
    }
    for (const auto& ex : golden::method_two_examples()) {
      const CurveW c = method_two::build_eprime(Rational::parse(ex.Z));
      samples.push_back({c, pt(ex.generator.x, ex.generator.y)});
    }
    samples.push_back({method_two::build_eprime(Rational(3)), pt("108", "1080")});
    samples.push_back({method_two::build_eprime(Rational(4)), pt("202", "2958")});
    samples.push_back({method_two::build_eprime(Rational(6)), pt("621/4", "-24975/8")});

    for (const auto& s : samples) {
      CAPTURE(s.curve.str());
      std::vector<PointQ> pts{PointQ::infinity()};
      for (long n = 1; n <= 5; ++n) {
        // small multiples of the large generators explode; keep to three
        if (s.gen.x().num().get_str().size() > 20 && n > 3) break;
        pts.push_back(mul(s.curve, n, s.gen));
        pts.push_back(negate(pts.back()));
      }
      for (const auto& a : pts) {
        CHECK(contains(s.curve, a));
        CHECK(add(s.curve, a, PointQ::infinity()) == a);
        CHECK(add(s.curve, a, negate(a)).is_infinity());
        for (const auto& b : pts) {
          const PointQ ab = add(s.curve, a, b);
          CHECK(ab == add(s.curve, b, a));
          CHECK(contains(s.curve, ab));
        }
      }
      // associativity on a bounded subset keeps the run short
      const std::size_t k = std::min<std::size_t>(pts.size(), 7);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t l = 0; l < k; ++l) {
            const auto lhs = add(s.curve, add(s.curve, pts[i], pts[j]), pts[l]);
            const auto rhs = add(s.curve, pts[i], add(s.curve, pts[j], pts[l]));
            CHECK(lhs == rhs);
          }
    }
  }

  TEST_CASE("mul is additive") {
    const CurveW c = method_one::build_curve(Rational(16));
    const PointQ P = pt("340", "680");
    oracle::RandomRational gen(21);
    for (int i = 0; i < 40; ++i) {
      const long m = gen.integer(-6, 6), n = gen.integer(-6, 6);
      CHECK(mul(c, m + n, P) == add(c, mul(c, m, P), mul(c, n, P)));
    }
  }

  TEST_CASE("discriminant") {
    const CurveW d2 = method_one::build_depressed(Rational(2));
    CHECK(d2.discriminant() == Rational(-62208));
    CHECK(discriminant(Rational(0), Rational(-3), Rational(-2)) == Rational(0));  // depressed E(1)
    CHECK(discriminant(Rational(0), Rational(0), Rational(0)) == Rational(0));    // depressed E(0)
    CHECK_THROWS_AS(CurveW(Rational(0), Rational(-3), Rational(-2)), InvalidInput);
  }

  TEST_CASE("discriminant closed form for depressed E(h)") {
    oracle::RandomRational gen(22, 200);
    for (int i = 0; i < 100; ++i) {
      Rational h = gen.nonzero();
      if (h == Rational(1) || h == Rational(-1)) continue;
      const CurveW c = method_one::build_depressed(h);
      const oracle::Q hq = oracle::to_q(h);
      const oracle::Q closed = -432 * hq * hq * hq * hq * (hq * hq - 1) * (hq * hq - 1);
      const oracle::Curve oc{0, -3 * hq * hq, -(hq * hq * hq * hq + hq * hq)};
      CHECK(oracle::to_q(c.discriminant()) == closed);
      CHECK(oracle::discriminant(oc) == closed);
      // the general model has the same discriminant
      CHECK(oracle::to_q(method_one::build_curve(h).discriminant()) == closed);
      CHECK(oracle::discriminant(oracle::general_e(hq)) == closed);
    }
  }

  TEST_CASE("discriminant of E'(Z)") {
    oracle::RandomRational gen(23, 200);
    for (int i = 0; i < 50; ++i) {
      const Rational z = gen.nonzero();
      const oracle::Q zq = oracle::to_q(z);
      CHECK(oracle::to_q(method_two::build_eprime(z).discriminant()) ==
            oracle::discriminant(oracle::eprime(zq)));
    }
  }

  TEST_CASE("shift_x") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    const XShift sh = shift_x(e16, Rational(256));
    CHECK(sh.curve == CurveW(Rational(0), Rational(-768), Rational(-(65536 + 256))));
    CHECK(sh.curve == method_one::build_depressed(Rational(16)));
    const XShift id = shift_x(e16, Rational(0));
    CHECK(id.curve == e16);
    const PointQ P = pt("340", "680");
    const PointQ fwd = sh.forward(P);
    CHECK(fwd == pt("84", "680"));
    CHECK(contains(sh.curve, fwd));
    CHECK(sh.backward(fwd) == P);
    CHECK(sh.forward(PointQ::infinity()).is_infinity());

    oracle::RandomRational gen(24, 100);
    for (int i = 0; i < 20; ++i) {
      const Rational s = gen();
      const XShift t = shift_x(e16, s);
      for (long n = 1; n <= 3; ++n) {
        const PointQ Q = mul(e16, n, P);
        CHECK(contains(t.curve, t.forward(Q)));
        CHECK(t.backward(t.forward(Q)) == Q);
      }
    }
  }

  TEST_CASE("depressed model equals the shifted general model") {
    oracle::RandomRational gen(25, 300);
    for (int i = 0; i < 50; ++i) {
      const Rational h = gen.nonzero();
      if (h == Rational(1) || h == Rational(-1)) continue;
      CHECK(shift_x(method_one::build_curve(h), h * h).curve == method_one::build_depressed(h));
    }
  }

  TEST_CASE("naive_point_search") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    auto pts = naive_point_search(e16, 400);
    CHECK(std::find(pts.begin(), pts.end(), pt("340", "680")) != pts.end());
    for (const auto& p : pts) CHECK(contains(e16, p));

    const CurveW e3 = method_two::build_eprime(Rational(3));
    auto pts3 = naive_point_search(e3, 120);
    CHECK(std::find(pts3.begin(), pts3.end(), pt("108", "1080")) != pts3.end());

    // y^2 = x^3 + 6 has no rational points at all
    CHECK(naive_point_search(CurveW(Rational(0), Rational(0), Rational(6)), 50).empty());
  }

  TEST_CASE("naive_point_search order and completeness") {
    // depressed E(16): points with x integral and |x| <= 340
    const CurveW d16 = method_one::build_depressed(Rational(16));
    auto pts = naive_point_search(d16, 340);
    std::vector<PointQ> integral;
    for (const auto& p : pts) if (p.x().is_integer()) integral.push_back(p);
    std::vector<PointQ> expected;
    const oracle::Curve oc{0, -768, -65792};
    for (long n = -340; n <= 340; ++n) {
      const oracle::Q r = oracle::rhs(oc, n);
      if (r < 0) continue;
      const mpz_class num = r.get_num();
      const mpz_class s = sqrt(num);
      if (s * s != num) continue;
      expected.push_back(PointQ(Rational(n), Rational(s)));
      if (s != 0) expected.push_back(PointQ(Rational(n), Rational(-s)));
    }
    CHECK(integral == expected);
    REQUIRE(pts.size() >= 2);
    CHECK(pts.front() == pt("57", "275"));
  }

  TEST_CASE("generator file ingestion") {
    const CurveW e16 = method_one::build_curve(Rational(16));
    auto pts = parse_points("# generators\n340,680\n\n313/1,-275\n", e16);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == pt("313", "-275"));
    CHECK_THROWS_AS(parse_points("340,681\n", e16), InvalidInput);
    CHECK_THROWS_AS(parse_points("340\n", e16), InvalidInput);
    CHECK_THROWS_AS(load_points("/nonexistent/points.txt", e16), InvalidInput);

    const std::string path = "weierstrass_points_test.txt";
    {
      std::ofstream out(path);
      out << "340,680\n";
    }
    auto loaded = load_points(path, e16);
    CHECK(loaded == std::vector<PointQ>{pt("340", "680")});
    std::remove(path.c_str());
  }
}
