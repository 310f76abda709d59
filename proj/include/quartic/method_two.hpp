#pragma once

/*
 * Second method. Putting X = Z^2 + h^2 into E(h) gives the sextic
 * Y^2 = Z^6 - 3h^2 Z^2 - (h^4 + h^2), read as a quartic in (h, Y) for fixed Z:
 *
 *     Y^2 = -h^4 - (3Z^2 + 1) h^2 + Z^6
 *
 * whose cubic model is
 *
 *     E'(Z): Y'^2 = X'^3 - (3Z^2 + 1) X'^2 + 4Z^6 X' - (12Z^8 + 4Z^6)
 *
 * with inverse h = 2Z^3 (X' - (3Z^2 + 1)) / Y', Y = -Z^3 + h^2 X' / (2Z^3).
 * H(Z) is the set of h reached from points of E'(Z).
 */

#include <optional>
#include <vector>

#include "quartic/method_one.hpp"

namespace quartic::method_two {

struct HValue {
  Rational h;
  Rational Y;
  Rational Z;
  PointQ source_point;
  long multiple_index = 1;
};

// Y^2 == -h^4 - (3Z^2 + 1) h^2 + Z^6
bool quartic_relation_holds(const HValue& hv);

// Rejects Z = 0.
CurveW build_eprime(const Rational& Z);

// nullopt for infinity or Y' = 0 (no h recoverable).
std::optional<HValue> point_to_h(const Rational& Z, const PointQ& P, long multiple_index = 1);

// nullopt for h in {0, 1, -1} or a trivial result.
std::optional<method_one::MPQTriple> h_to_mpq(const HValue& hv);
std::optional<Quadruple> h_to_quadruple(const HValue& hv);

struct HZEnumeration {
  std::vector<HValue> values;
  std::size_t degenerate_skipped = 0;  // Y' = 0, infinity, or h in {0, 1, -1}
};

HZEnumeration enumerate_HZ(const Rational& Z, const PointQ& gen, long n_max);

struct ZEntry {
  Rational Z;
  PointQ gen;
};

struct Conjecture2Match {
  Rational Z;
  long multiple_index;
  Rational h;
  Rational t;  // n = t^4 h, t > 0
};

struct Conjecture2Report {
  BigInt n;
  std::vector<Conjecture2Match> matches;
  std::size_t values_examined = 0;
  std::size_t degenerate_skipped = 0;
};

// Tests n = t^4 h over h in H(Z) (first n_max multiples of each gen) and
// positive rational t with numerator and denominator <= t_height.
// Matches are ordered by Z entry, then multiple index.
Conjecture2Report conjecture2_scan(const BigInt& n, const std::vector<ZEntry>& z_list, long n_max,
                                   long t_height);

}  // namespace quartic::method_two
