#include "quartic/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "quartic/errors.hpp"

namespace quartic::search {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kDefaultPairBudget = 500'000'000ULL;
constexpr std::uint64_t kDefaultMemoryBudget = 512ULL << 20;

struct Entry {
  std::uint64_t fp;  // low 64 bits of the exact key
  std::uint32_t hi;  // A (index) or D (probe)
  std::uint32_t lo;  // C (index) or B (probe)

  friend bool operator<(const Entry& a, const Entry& b) {
    if (a.fp != b.fp) return a.fp < b.fp;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.lo < b.lo;
  }
};
static_assert(sizeof(Entry) == 16);

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw InvalidInput(std::string("environment variable ") + name + " must be a positive integer");
  }
  return v;
}

// Fits in 126 bits (so sums of two stay below 2^127).
std::optional<u128> to_u128(const BigInt& x) {
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 126) return std::nullopt;
  u128 out = 0;
  std::size_t words = 0;
  std::uint64_t buf[2] = {0, 0};
  mpz_export(buf, &words, -1, sizeof(std::uint64_t), 0, 0, x.get_mpz_t());
  out = (static_cast<u128>(buf[1]) << 64) | buf[0];
  return out;
}

struct Plan {
  u128 u = 1;
  u128 v = 1;
  u128 limit = 0;  // largest key either side can match
  std::vector<u128> pow4;
};

Plan make_plan(const BigInt& u, const BigInt& v, std::uint32_t N) {
  BigInt n4 = BigInt(N) * N * N * N;
  BigInt lhs = u * n4;
  BigInt rhs = v * n4;
  auto uu = to_u128(u);
  auto vv = to_u128(v);
  if (!uu || !vv || !to_u128(lhs) || !to_u128(rhs)) {
    throw ResourceRefused("keys u*N^4 = " + to_string(lhs) + " / v*N^4 = " + to_string(rhs) +
                          " exceed the 126-bit exact key range");
  }
  Plan plan;
  plan.u = *uu;
  plan.v = *vv;
  plan.pow4.resize(static_cast<std::size_t>(N) + 1);
  for (std::uint32_t x = 0; x <= N; ++x) {
    u128 s = static_cast<u128>(x) * x;
    plan.pow4[x] = s * s;
  }
  plan.limit = std::min(plan.u, plan.v) * plan.pow4[N];
  return plan;
}

// Smallest lo in [0, hi) with mult * (hi^4 - lo^4) <= limit; hi if none.
std::uint32_t min_lo(const Plan& plan, u128 mult, std::uint32_t hi) {
  std::uint32_t a = 0, b = hi;  // answer in [a, b]
  while (a < b) {
    std::uint32_t m = a + (b - a) / 2;
    if (mult * (plan.pow4[hi] - plan.pow4[m]) <= plan.limit) {
      b = m;
    } else {
      a = m + 1;
    }
  }
  return a;
}

std::uint64_t count_pairs(const Plan& plan, u128 mult, std::uint32_t N) {
  std::uint64_t total = 0;
  for (std::uint32_t hi = 1; hi <= N; ++hi) total += hi - min_lo(plan, mult, hi);
  return total;
}

void parallel_sort(std::vector<Entry>& v, unsigned threads) {
  if (threads <= 1 || v.size() < (1U << 16)) {
    std::sort(v.begin(), v.end());
    return;
  }
  std::vector<std::size_t> bounds;
  for (unsigned t = 0; t <= threads; ++t) bounds.push_back(v.size() * t / threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { std::sort(v.begin() + bounds[t], v.begin() + bounds[t + 1]); });
    }
  }
  for (std::size_t width = 1; width < threads; width *= 2) {
    for (std::size_t t = 0; t + width < threads; t += 2 * width) {
      std::size_t end = std::min<std::size_t>(t + 2 * width, threads);
      std::inplace_merge(v.begin() + bounds[t], v.begin() + bounds[t + width], v.begin() + bounds[end]);
    }
  }
}

// Pairs (hi, lo), N >= hi > lo >= 0, with key mult*(hi^4 - lo^4) <= limit
// and falling in segment `seg` of `segments`.
std::vector<Entry> build_side(const Plan& plan, u128 mult, std::uint32_t N, std::size_t seg,
                              std::size_t segments, unsigned threads) {
  auto work = [&](unsigned t, unsigned stride, std::vector<Entry>& out) {
    for (std::uint32_t hi = 1 + t; hi <= N; hi += stride) {
      const u128 top = plan.pow4[hi];
      for (std::uint32_t lo = hi; lo-- > 0;) {
        const u128 key = mult * (top - plan.pow4[lo]);
        if (key > plan.limit) break;
        const auto fp = static_cast<std::uint64_t>(key);
        if (segments > 1 && mix(fp) % segments != seg) continue;
        out.push_back({fp, hi, lo});
      }
    }
  };
  std::vector<Entry> all;
  if (threads <= 1) {
    work(0, 1, all);
  } else {
    std::vector<std::vector<Entry>> parts(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] { work(t, threads, parts[t]); });
      }
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    all.reserve(total);
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  }
  parallel_sort(all, threads);
  return all;
}

struct Candidate {
  std::uint32_t A, B, C, D;
};

// Exact check plus the canonical-form filters.
bool accept(const Plan& plan, bool h_is_one, const Candidate& c) {
  const u128 lhs = plan.u * (plan.pow4[c.A] - plan.pow4[c.C]);
  const u128 rhs = plan.v * (plan.pow4[c.D] - plan.pow4[c.B]);
  if (lhs != rhs) return false;  // fingerprint collision
  if (std::gcd(std::gcd(c.A, c.B), std::gcd(c.C, c.D)) != 1) return false;
  if (plan.u * plan.pow4[c.A] == plan.v * plan.pow4[c.D] &&
      plan.u * plan.pow4[c.C] == plan.v * plan.pow4[c.B]) {
    return false;  // cross-trivial
  }
  if (h_is_one && (c.A < c.D || c.C < c.D)) return false;  // other representatives of the class
  return true;
}

template <typename OnHit>
void merge_join(const Plan& plan, bool h_is_one, const std::vector<Entry>& index,
                const std::vector<Entry>& probes, OnHit&& on_hit) {
  std::size_t i = 0, j = 0;
  while (i < index.size() && j < probes.size()) {
    if (index[i].fp < probes[j].fp) {
      ++i;
    } else if (probes[j].fp < index[i].fp) {
      ++j;
    } else {
      const std::uint64_t fp = index[i].fp;
      std::size_t i2 = i, j2 = j;
      while (i2 < index.size() && index[i2].fp == fp) ++i2;
      while (j2 < probes.size() && probes[j2].fp == fp) ++j2;
      for (std::size_t a = i; a < i2; ++a) {
        for (std::size_t b = j; b < j2; ++b) {
          Candidate c{index[a].hi, probes[b].lo, index[a].lo, probes[b].hi};
          if (accept(plan, h_is_one, c)) on_hit(c);
        }
      }
      i = i2;
      j = j2;
    }
  }
}

std::size_t derive_segments(std::uint64_t pairs, const SearchOptions& opts) {
  if (opts.segments > 0) return opts.segments;
  const std::uint64_t budget = opts.memory_budget_bytes ? opts.memory_budget_bytes
                                                        : default_memory_budget();
  const std::uint64_t bytes = pairs * sizeof(Entry);
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, (bytes + budget - 1) / budget));
}

void guard_pairs(std::uint64_t pairs, const SearchOptions& opts, std::uint32_t N) {
  const std::uint64_t budget = opts.pair_budget ? opts.pair_budget : default_pair_budget();
  if (pairs > budget) {
    throw ResourceRefused("bound N=" + std::to_string(N) + " needs " + std::to_string(pairs) +
                          " index+probe pairs, over the budget of " + std::to_string(budget) +
                          " (raise with --pair-budget or QUARTIC_PAIR_BUDGET)");
  }
}

unsigned thread_count(const SearchOptions& opts) { return std::max(1U, opts.threads); }

void check_h(const Rational& h) {
  if (h.sign() <= 0) throw InvalidInput("search requires h > 0, got " + h.str());
}

}  // namespace

std::uint64_t default_pair_budget() { return env_u64("QUARTIC_PAIR_BUDGET", kDefaultPairBudget); }

std::uint64_t default_memory_budget() {
  return env_u64("QUARTIC_MEMORY_MB", kDefaultMemoryBudget >> 20) << 20;
}

std::uint32_t SearchHit::max_coordinate() const { return std::max({A, B, C, D}); }

Quadruple SearchHit::to_quadruple() const {
  return Quadruple{h, BigInt(A), BigInt(B), BigInt(C), BigInt(D), {Source::SearchHit, {}, {}, {}}};
}

bool hit_less(const SearchHit& a, const SearchHit& b) {
  const auto ma = a.max_coordinate();
  const auto mb = b.max_coordinate();
  if (ma != mb) return ma < mb;
  return std::tie(a.A, a.B, a.C, a.D) < std::tie(b.A, b.B, b.C, b.D);
}

std::optional<SearchHit> canonical_hit(const Rational& h, const BigInt& A, const BigInt& B,
                                       const BigInt& C, const BigInt& D) {
  if (h.sign() <= 0 || !verify(h, A, B, C, D)) return std::nullopt;
  auto q = normalize(h, std::array<BigInt, 4>{A, B, C, D}, {});
  if (!q) return std::nullopt;
  BigInt a = q->A, b = q->B, c = q->C, d = q->D;
  if (a < c) {
    std::swap(a, c);
    std::swap(b, d);
  }
  if (h == Rational(1) && a < d) {
    // (A, B, C, D) -> (D, C, B, A)
    std::swap(a, d);
    std::swap(b, c);
  }
  if (h == Rational(1) && c < d) std::swap(c, d);
  for (const BigInt* x : {&a, &b, &c, &d}) {
    if (!x->fits_ulong_p() || x->get_ui() > 0xffffffffUL) return std::nullopt;
  }
  return SearchHit{h, static_cast<std::uint32_t>(a.get_ui()), static_cast<std::uint32_t>(b.get_ui()),
                   static_cast<std::uint32_t>(c.get_ui()), static_cast<std::uint32_t>(d.get_ui())};
}

std::size_t planned_segments(const Rational& h, std::uint32_t N, const SearchOptions& opts) {
  check_h(h);
  const Plan plan = make_plan(h.den(), h.num(), N);
  return derive_segments(count_pairs(plan, plan.u, N) + count_pairs(plan, plan.v, N), opts);
}

std::vector<SearchHit> mitm_search(const Rational& h, std::uint32_t N, const SearchOptions& opts) {
  check_h(h);
  if (N < 2) throw InvalidInput("bound N must be >= 2");
  const Plan plan = make_plan(h.den(), h.num(), N);
  const std::uint64_t pairs = count_pairs(plan, plan.u, N) + count_pairs(plan, plan.v, N);
  guard_pairs(pairs, opts, N);
  const std::size_t segments = derive_segments(pairs, opts);
  const unsigned threads = thread_count(opts);
  const bool h_is_one = h == Rational(1);

  std::vector<SearchHit> hits;
  for (std::size_t seg = 0; seg < segments; ++seg) {
    const auto index = build_side(plan, plan.u, N, seg, segments, threads);
    const auto probes = build_side(plan, plan.v, N, seg, segments, threads);
    merge_join(plan, h_is_one, index, probes, [&](const Candidate& c) {
      hits.push_back({h, c.A, c.B, c.C, c.D});
    });
  }
  std::sort(hits.begin(), hits.end(), hit_less);
  for (const auto& hit : hits) {
    if (!verify(h, hit.A, hit.B, hit.C, hit.D)) {
      throw VerificationFailure("search hit failed exact verification: " + hit.to_quadruple().str());
    }
  }
  return hits;
}

std::vector<SurveyRow> survey(std::uint64_t h_lo, std::uint64_t h_hi, std::uint32_t N,
                              const SearchOptions& opts) {
  if (h_lo < 1 || h_lo > h_hi) throw InvalidInput("survey needs 1 <= h_lo <= h_hi");
  if (N < 2) throw InvalidInput("bound N must be >= 2");
  // The index is shared: u = 1 and the common key range is N^4 for every h >= 1.
  Plan plan = make_plan(BigInt(1), BigInt(static_cast<unsigned long>(h_hi)), N);
  plan.v = 1;
  plan.limit = plan.pow4[N];
  const std::uint64_t index_pairs = count_pairs(plan, 1, N);
  guard_pairs(index_pairs + count_pairs(plan, static_cast<u128>(h_lo), N), opts, N);
  const std::size_t segments = derive_segments(index_pairs, opts);
  const unsigned threads = thread_count(opts);

  std::vector<SurveyRow> rows;
  for (std::uint64_t h = h_lo; h <= h_hi; ++h) rows.push_back({h, std::nullopt, 0});

  for (std::size_t seg = 0; seg < segments; ++seg) {
    const auto index = build_side(plan, 1, N, seg, segments, threads);
    for (auto& row : rows) {
      Plan per_h = plan;
      per_h.v = row.h;
      const Rational hr(BigInt(static_cast<unsigned long>(row.h)));
      const auto probes = build_side(per_h, per_h.v, N, seg, segments, threads);
      merge_join(per_h, row.h == 1, index, probes, [&](const Candidate& c) {
        SearchHit hit{hr, c.A, c.B, c.C, c.D};
        ++row.hit_count;
        if (!row.smallest || hit_less(hit, *row.smallest)) row.smallest = hit;
      });
    }
  }
  for (const auto& row : rows) {
    if (row.smallest && !verify(row.smallest->h, row.smallest->A, row.smallest->B,
                                row.smallest->C, row.smallest->D)) {
      throw VerificationFailure("survey hit failed exact verification for h=" + std::to_string(row.h));
    }
  }
  return rows;
}

}  // namespace quartic::search
