#pragma once

/*
 * Bounded exhaustive search for A^4 + h B^4 = C^4 + h D^4.
 *
 * Meet in the middle on u (A^4 - C^4) = v (D^4 - B^4) for h = v/u: the
 * left sides for N >= A > C >= 0 form the index, the right sides for
 * N >= D > B >= 0 are the probes, both filtered to the common key range
 * min(u, v) N^4. Each side is held as (64-bit key fingerprint, pair)
 * entries, split into segments by a hash of the fingerprint, sorted and
 * merge-joined one segment at a time. Every fingerprint match is
 * re-checked in exact 128-bit arithmetic before it becomes a hit.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartic/quadruple.hpp"

namespace quartic::search {

// Canonical orientation A > C >= 0, D > B >= 0; gcd 1; nontrivial.
// For h = 1 additionally A is the largest coordinate and C >= D, so each
// unordered pair of pairs appears once.
struct SearchHit {
  Rational h;
  std::uint32_t A, B, C, D;

  std::uint32_t max_coordinate() const;
  Quadruple to_quadruple() const;
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Sort order of results: max coordinate, then (A, B, C, D).
bool hit_less(const SearchHit& a, const SearchHit& b);

struct SearchOptions {
  std::size_t segments = 0;  // 0 = derive from memory_budget_bytes
  unsigned threads = 1;
  std::uint64_t pair_budget = 0;         // 0 = default_pair_budget()
  std::uint64_t memory_budget_bytes = 0; // 0 = default_memory_budget()
};

// QUARTIC_PAIR_BUDGET overrides; default 5e8 pairs (N ~ 31600).
std::uint64_t default_pair_budget();
// QUARTIC_MEMORY_MB overrides; default 512 MiB per segment pass.
std::uint64_t default_memory_budget();

// Segment count the search would use (for reporting).
std::size_t planned_segments(const Rational& h, std::uint32_t N, const SearchOptions& opts);

// Complete, duplicate-free, sorted. h > 0, N >= 2. Throws ResourceRefused
// beyond the pair budget or the 128-bit key range, InvalidInput otherwise.
std::vector<SearchHit> mitm_search(const Rational& h, std::uint32_t N,
                                   const SearchOptions& opts = {});

struct SurveyRow {
  std::uint64_t h;
  std::optional<SearchHit> smallest;
  std::size_t hit_count = 0;
};

// One row per integer h in [h_lo, h_hi]; the index of A^4 - C^4 is built
// once per segment and shared by every h.
std::vector<SurveyRow> survey(std::uint64_t h_lo, std::uint64_t h_hi, std::uint32_t N,
                              const SearchOptions& opts = {});

// Orient an arbitrary (possibly signed, non-primitive) solution into the
// canonical SearchHit form; nullopt if trivial, invalid or not positive h.
std::optional<SearchHit> canonical_hit(const Rational& h, const BigInt& A, const BigInt& B,
                                       const BigInt& C, const BigInt& D);

}  // namespace quartic::search
