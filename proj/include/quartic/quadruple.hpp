#pragma once

/*
 * Solutions of A^4 + h B^4 = C^4 + h D^4 and the rescalings between the
 * equations for different h.
 *
 * With h = v/u reduced, the cleared equation is
 *     u A^4 + v B^4 = u C^4 + v D^4.
 *
 * A Quadruple is always normalized: nonnegative, gcd(A, B, C, D) = 1 and
 * not trivial. Trivial means (A = C and B = D), or the cross identity
 * u A^4 = v D^4 and u C^4 = v B^4, which is possible only when h is a
 * rational fourth power and reduces to the swap A = D, B = C for h = 1.
 */

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quartic/exactnum.hpp"

namespace quartic {

enum class Source {
  MethodOnePoint,
  MethodTwoPoint,
  ParametricFamily,
  SearchHit,
  Supplied,
};

std::string_view source_tag(Source s);
std::optional<Source> parse_source_tag(std::string_view tag);

struct Provenance {
  Source source = Source::Supplied;
  std::string detail;              // e.g. "n=2", "ex8_degree5 r=2"
  std::vector<std::string> chain;  // rescalings applied, oldest first
  std::optional<Rational> twist_t; // accumulated twist factor, if any
};

struct Quadruple {
  Rational h;
  BigInt A, B, C, D;
  Provenance provenance;

  std::string str() const;  // "h; A, B, C, D"
};

bool verify(const Rational& h, const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& D);
inline bool verify(const Quadruple& q) { return verify(q.h, q.A, q.B, q.C, q.D); }

// Triviality of an already sign-stripped integer quadruple.
bool is_trivial(const Rational& h, const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& D);

// Strip signs, clear denominators, divide by the gcd, reject trivial.
// The raw values must satisfy the equation for h; a violation throws
// VerificationFailure. Returns nullopt for a trivial (or all-zero) result.
std::optional<Quadruple> normalize(const Rational& h, std::array<Rational, 4> raw, Provenance prov);

// Same as normalize() for integer input.
std::optional<Quadruple> normalize(const Rational& h, std::array<BigInt, 4> raw, Provenance prov);

// Solution for h_eff -> solution for h_eff / t^4, via (A, tB, C, tD).
// With t = a/b this is (bA, aB, bC, aD). t != 0.
Quadruple descale_twist(const Quadruple& s, const Rational& t);

// h = v/u -> integer h' = v u^3, via (uA, B, uC, D).
Quadruple integerize(const Quadruple& s);

// h -> 1/h, via (B, A, D, C).
Quadruple invert_h(const Quadruple& s);

// h -> -h, via (A, D, C, B).
Quadruple negate_h(const Quadruple& s);

// Carry s to the equation for target when target = +-h^(+-1) * t^4 for a
// rational t; nullopt otherwise. Prefers no inversion, then no negation.
std::optional<Quadruple> rescale_to(const Quadruple& s, const Rational& target);

// Carry s to the fourth-power-free integer representative of h Q*^4
// (see fourth_power_free_integer). Returns s unchanged when already there.
Quadruple reduce_to_integer(const Quadruple& s);

}  // namespace quartic
