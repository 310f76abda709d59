#pragma once

/*
 * Weierstrass cubics y^2 = x^3 + a2 x^2 + a4 x + a6 over Q with the
 * chord-and-tangent group law in affine coordinates.
 *
 * Points do not reference their curve; every operation takes the curve
 * explicitly so a point can be carried between isomorphic models.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/exactnum.hpp"

namespace quartic {

// Standard discriminant (b-invariants with a1 = a3 = 0). Zero iff singular.
Rational discriminant(const Rational& a2, const Rational& a4, const Rational& a6);

class CurveW {
 public:
  // Throws InvalidInput when the cubic is singular.
  CurveW(Rational a2, Rational a4, Rational a6);

  const Rational& a2() const { return a2_; }
  const Rational& a4() const { return a4_; }
  const Rational& a6() const { return a6_; }

  // x^3 + a2 x^2 + a4 x + a6
  Rational rhs(const Rational& x) const;
  Rational discriminant() const { return quartic::discriminant(a2_, a4_, a6_); }

  std::string str() const;

  friend bool operator==(const CurveW&, const CurveW&) = default;

 private:
  Rational a2_, a4_, a6_;
};

class PointQ {
 public:
  static PointQ infinity() { return PointQ(); }
  // Unchecked; see on_curve() for the validating constructor.
  PointQ(Rational x, Rational y) : finite_(true), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const { return !finite_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  std::string str() const;
  static PointQ parse(std::string_view text);  // "x,y" with rational parts

  friend bool operator==(const PointQ&, const PointQ&) = default;

 private:
  PointQ() = default;
  bool finite_ = false;
  Rational x_, y_;
};

// Throws InvalidInput carrying the exact residual y^2 - rhs(x) when off-curve.
PointQ on_curve(const CurveW& c, Rational x, Rational y);

bool contains(const CurveW& c, const PointQ& pt);
PointQ negate(const PointQ& pt);
PointQ add(const CurveW& c, const PointQ& p, const PointQ& q);
PointQ dbl(const CurveW& c, const PointQ& p);
PointQ mul(const CurveW& c, const BigInt& n, const PointQ& p);

// The curve in z = x - s, plus the point maps between the two models.
struct XShift {
  CurveW curve;
  Rational s;

  PointQ forward(const PointQ& p) const;   // (x, y) -> (x - s, y)
  PointQ backward(const PointQ& p) const;  // (z, y) -> (z + s, y)
};
XShift shift_x(const CurveW& c, const Rational& s);

// All affine points with x = n/d^2, gcd(n, d) = 1, |n| <= height_bound and
// 1 <= d <= isqrt(height_bound). Ordered by d, then n, then y >= 0 before
// its negative.
std::vector<PointQ> naive_point_search(const CurveW& c, long height_bound);

// Generator files: one "x,y" per line; blank lines and '#' comments are
// skipped. Every point is validated against c.
std::vector<PointQ> load_points(const std::filesystem::path& path, const CurveW& c);
std::vector<PointQ> parse_points(std::string_view text, const CurveW& c);

}  // namespace quartic
