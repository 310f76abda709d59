#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "quartic/errors.hpp"
#include "quartic/search.hpp"

using namespace quartic;
using namespace quartic::search;

namespace {

std::vector<oracle::Hit> as_oracle(const std::vector<SearchHit>& hits) {
  std::vector<oracle::Hit> out;
  for (const auto& h : hits) out.push_back({h.A, h.B, h.C, h.D});
  return out;
}

std::vector<oracle::Hit> within(const std::vector<oracle::Hit>& hits, std::uint32_t N) {
  std::vector<oracle::Hit> out;
  for (const auto& h : hits) {
    if (std::max({h.A, h.B, h.C, h.D}) <= N) out.push_back(h);
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("verify") {
    CHECK(verify(Rational(206), 3923, 1084, 4747, 506));
    CHECK(verify(Rational(2572), 1379237, 187666, 1614571, 47668));
    CHECK_FALSE(verify(Rational(1), 1, 2, 3, 4));
    CHECK(verify(Rational::parse("4/3"), 101, 158, 171, 88));
    CHECK_FALSE(verify(Rational::parse("4/3"), 101, 158, 171, 89));
  }

  TEST_CASE("small known hits") {
    auto hits = mitm_search(Rational(1), 160);
    REQUIRE_FALSE(hits.empty());
    CHECK(hits.front() == SearchHit{Rational(1), 158, 59, 134, 133});
    CHECK(hits.size() == 1);
    CHECK(mitm_search(Rational(1), 50).empty());
    CHECK(mitm_search(Rational(1), 157).empty());
  }

  TEST_CASE("brute-force cube for h = 1") {
    CHECK(as_oracle(mitm_search(Rational(1), 160)) == oracle::brute_force(1, 1, 160));
    CHECK(oracle::brute_force(1, 1, 50).empty());
  }

  TEST_CASE("oracle equivalence for h <= 20, N <= 60") {
    for (std::uint64_t h = 1; h <= 20; ++h) {
      CAPTURE(h);
      const auto full = oracle::brute_force(1, h, 60);
      for (std::uint32_t N = 2; N <= 60; ++N) {
        CAPTURE(N);
        CHECK(as_oracle(mitm_search(Rational(static_cast<long>(h)), N)) == within(full, N));
      }
    }
  }

  TEST_CASE("oracle equivalence for rational h") {
    for (const char* text : {"3/2", "5/7", "1/16", "81/16", "2/9"}) {
      CAPTURE(text);
      const Rational h = Rational::parse(text);
      const auto full = oracle::brute_force(h.den().get_ui(), h.num().get_ui(), 40);
      for (std::uint32_t N : {2U, 10U, 25U, 40U}) {
        CHECK(as_oracle(mitm_search(h, N)) == within(full, N));
      }
    }
  }

  TEST_CASE("hits are canonical and verified") {
    for (long h : {2L, 5L, 7L, 13L, 17L}) {
      for (const auto& hit : mitm_search(Rational(h), 200)) {
        CHECK(verify(hit.h, hit.A, hit.B, hit.C, hit.D));
        CHECK(hit.A > hit.C);
        CHECK(hit.D > hit.B);
        CHECK(std::gcd(std::gcd(hit.A, hit.B), std::gcd(hit.C, hit.D)) == 1);
        auto again = canonical_hit(hit.h, hit.A, hit.B, hit.C, hit.D);
        REQUIRE(again);
        CHECK(*again == hit);
        // raw variants map back to the same hit
        auto swapped = canonical_hit(hit.h, BigInt(hit.C) * 3, BigInt(hit.D) * 3, BigInt(hit.A) * -3,
                                     BigInt(hit.B) * 3);
        REQUIRE(swapped);
        CHECK(*swapped == hit);
      }
    }
  }

  TEST_CASE("sorted by max coordinate then lexicographically") {
    auto hits = mitm_search(Rational(17), 300);
    REQUIRE(hits.size() >= 2);
    for (std::size_t i = 1; i < hits.size(); ++i) CHECK(hit_less(hits[i - 1], hits[i]));
  }

  TEST_CASE("canonical_hit") {
    auto h = canonical_hit(Rational(206), 3923, 1084, 4747, 506);
    REQUIRE(h);
    CHECK(*h == SearchHit{Rational(206), 4747, 506, 3923, 1084});
    CHECK(h->max_coordinate() == 4747);
    auto one = canonical_hit(Rational(1), 59, 158, 133, 134);
    REQUIRE(one);
    CHECK(*one == SearchHit{Rational(1), 158, 59, 134, 133});
    CHECK(*canonical_hit(Rational(1), 134, 133, 158, 59) == *one);
    CHECK(*canonical_hit(Rational(1), 133, 134, 59, 158) == *one);
    CHECK_FALSE(canonical_hit(Rational(1), 3, 7, 7, 3));
    CHECK_FALSE(canonical_hit(Rational(5), 3, 7, 3, 7));
    CHECK_FALSE(canonical_hit(Rational(-5), 3, 0, 1, 2));
    CHECK_FALSE(canonical_hit(Rational(5), 3, 0, 1, 3));
    const Quadruple q = h->to_quadruple();
    CHECK(q.provenance.source == Source::SearchHit);
    CHECK(verify(q));
  }

  TEST_CASE("edge rows with B = 0 or C = 0") {
    // 3^4 = 1 + 5 * 2^4
    auto hits = mitm_search(Rational(5), 3);
    CHECK(std::find(hits.begin(), hits.end(), SearchHit{Rational(5), 3, 0, 1, 2}) != hits.end());
  }

  TEST_CASE("deterministic across threads and segments") {
    const auto base = mitm_search(Rational(1), 400);
    const auto base7 = mitm_search(Rational(7), 300);
    for (unsigned threads : {1U, 2U, 3U, 4U}) {
      for (std::size_t segments : {1UL, 2UL, 5UL, 16UL}) {
        SearchOptions o;
        o.threads = threads;
        o.segments = segments;
        CHECK(mitm_search(Rational(1), 400, o) == base);
        CHECK(mitm_search(Rational(7), 300, o) == base7);
      }
    }
  }

  TEST_CASE("survey shares one index and matches per-h searches") {
    const auto rows = survey(1, 20, 60);
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
      CAPTURE(row.h);
      const auto hits = mitm_search(Rational(static_cast<long>(row.h)), 60);
      CHECK(row.hit_count == hits.size());
      if (hits.empty()) {
        CHECK_FALSE(row.smallest);
      } else {
        REQUIRE(row.smallest);
        CHECK(*row.smallest == hits.front());
      }
    }
    SearchOptions o;
    o.threads = 2;
    o.segments = 3;
    const auto rows2 = survey(1, 20, 60, o);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows2[i].hit_count == rows[i].hit_count);
      CHECK(rows2[i].smallest == rows[i].smallest);
    }
    CHECK(survey(1, 5, 10).size() == 5);
    CHECK_THROWS_AS(survey(0, 5, 10), InvalidInput);
    CHECK_THROWS_AS(survey(6, 5, 10), InvalidInput);
  }

  TEST_CASE("resource and input guards") {
    CHECK_THROWS_AS(mitm_search(Rational(0), 10), InvalidInput);
    CHECK_THROWS_AS(mitm_search(Rational(-3), 10), InvalidInput);
    CHECK_THROWS_AS(mitm_search(Rational(3), 1), InvalidInput);
    SearchOptions tight;
    tight.pair_budget = 1000;
    CHECK_THROWS_AS(mitm_search(Rational(3), 200, tight), ResourceRefused);
    CHECK_NOTHROW(mitm_search(Rational(3), 20, tight));
    // keys beyond 126 bits are refused rather than truncated
    const Rational huge(BigInt(1) << 100);
    CHECK_THROWS_AS(mitm_search(huge, 1000), ResourceRefused);
    CHECK_THROWS_AS(survey(1, 2, 100, tight), ResourceRefused);
  }

  TEST_CASE("segment planning follows the memory budget") {
    SearchOptions o;
    o.memory_budget_bytes = 1 << 20;
    CHECK(planned_segments(Rational(206), 5000, o) > 1);
    o.segments = 9;
    CHECK(planned_segments(Rational(206), 5000, o) == 9);
    CHECK(planned_segments(Rational(1), 50, {}) == 1);
  }
}
