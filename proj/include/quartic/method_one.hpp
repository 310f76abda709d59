#pragma once

/*
 * First method: A = m - q, B = m + p, C = m + q, D = m - p turns the
 * quartic into m^2 (hp - q) = -h p^3 + q^3. On the branch hp - q = 1 the
 * substitution X = (h^3 - h) p, Y = (h^3 - h) m gives
 *
 *     E(h): Y^2 = X^3 - 3h^2 X^2 + 3h(h^3 - h) X - (h^3 - h)^2
 *
 * and X = Z + h^2 gives the depressed model Y^2 = Z^3 - 3h^2 Z - (h^4 + h^2).
 * Every rational point with Y != 0 yields a solution.
 */

#include <optional>
#include <vector>

#include "quartic/quadruple.hpp"
#include "quartic/weierstrass.hpp"

namespace quartic::method_one {

struct MPQTriple {
  Rational m, p, q;

  friend bool operator==(const MPQTriple&, const MPQTriple&) = default;
};

// m^2 = -h p^3 + q^3 and h p - q = 1.
bool triple_holds(const Rational& h, const MPQTriple& t);

// All constructors reject h in {0, 1, -1} with InvalidInput.
CurveW build_curve(const Rational& h);
CurveW build_depressed(const Rational& h);
CurveW build_twist(const Rational& h, const Rational& t);  // build_depressed(h t^4)

// Point on build_curve(h) -> (m, p, q). P must be affine.
MPQTriple point_to_mpq(const Rational& h, const PointQ& P);

// nullopt is the trivial verdict (includes m = 0). A triple that fails
// triple_holds throws InvalidInput.
std::optional<Quadruple> mpq_to_quadruple(const Rational& h, const MPQTriple& t,
                                          Provenance prov = {Source::MethodOnePoint, {}, {}, {}});

struct SolveStep {
  long n;
  PointQ point;
  std::optional<MPQTriple> triple;      // absent for infinity / Y = 0
  std::optional<Quadruple> quadruple;   // absent when trivial
};

// Multiples 1..n_max of gen, in order.
std::vector<SolveStep> solve_trace(const Rational& h, const PointQ& gen, long n_max);
// Nontrivial quadruples from solve_trace, each re-verified.
std::vector<Quadruple> solve(const Rational& h, const PointQ& gen, long n_max);

struct TwistScanEntry {
  Rational t;
  enum class Status { Singular, Exhausted, Hit } status;
  std::vector<PointQ> points;  // non-2-torsion points on build_twist(h, t)
};

struct TwistScanReport {
  std::vector<TwistScanEntry> entries;
  std::optional<std::size_t> hit;  // index into entries
};

// Scans t_candidates in order; stops at the first t whose twist has a
// naive-search point with y != 0.
TwistScanReport twist_scan(const Rational& h, const std::vector<Rational>& t_candidates,
                           long height_bound);

// Alternative model reached from m^2 = -h p^3 + q^3 with X' = (h^2-1)/h^2 q,
// Y' = (h^2-1)/h^2 m:
//   Y'^2 = X'^3 - (3/h^2) X'^2 - (3(h^2-1)/h^4) X' - ((h^2-1)/h^3)^2
CurveW build_remark4(const Rational& h);
// (X', Y') -> (h^2 X' - 1 + h^2, h^3 Y') on build_curve(h).
PointQ remark4_map(const Rational& h, const PointQ& p);
// (X, Y) -> ((X + 1 - h^2)/h^2, Y/h^3) on build_remark4(h).
PointQ remark4_unmap(const Rational& h, const PointQ& p);

}  // namespace quartic::method_one
