#pragma once

/*
 * Exact arithmetic substrate.
 *
 * BigInt is GMP's mpz_class. Rational is kept in canonical form at all
 * times: gcd(|num|, den) = 1, den > 0, and zero is 0/1. Equality is
 * therefore structural.
 *
 * Text form is "num/den", with "/den" omitted when den == 1.
 */

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quartic {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  // Throws InvalidInput when den == 0.
  Rational(BigInt num, BigInt den);

  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational abs() const { return Rational(Raw{}, BigInt(::abs(num_)), den_); }
  // Throws InvalidInput for zero.
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  std::string str() const;

  Rational operator-() const { return Rational(Raw{}, BigInt(-num_), den_); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Raw {};
  // Caller guarantees canonical form.
  Rational(Raw, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

Rational rat(const BigInt& num, const BigInt& den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Nonnegative integer square root when value is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& value);
// Nonnegative integer fourth root when value is a perfect fourth power.
std::optional<BigInt> exact_iroot4(const BigInt& value);

// The nonnegative r with r*r == x, or nullopt. A reduced fraction is a
// square exactly when numerator and denominator both are.
std::optional<Rational> exact_sqrt(const Rational& x);
// The non-negative r with r^4 == x, or nullopt (also for x < 0).
std::optional<Rational> exact_fourth_root(const Rational& x);

struct ClearedDenominators {
  std::vector<BigInt> values;
  BigInt scale;
};

// scale = lcm of denominators; values[i] = v[i] * scale. v must be nonempty.
ClearedDenominators clear_denominators(std::span<const Rational> v);

// gcd of absolute values; 0 for an all-zero list.
BigInt gcd_all(std::span<const BigInt> v);

// h = v/u reduced -> (u, v) with u > 0.
struct ReducedRatio {
  BigInt u;
  BigInt v;
};
inline ReducedRatio as_ratio(const Rational& h) { return {h.den(), h.num()}; }

// Split h = core * t^4 with core an integer and t a positive rational,
// removing every fourth power of a prime below 2^16 from core (and the
// remaining cofactor too when it is itself a perfect fourth power).
// h = 16 -> (1, 2); h = 103/8 -> (206, 1/2); h = 4/3 -> (108, 1/3).
struct FourthPowerSplit {
  Rational core;
  Rational t;
};
FourthPowerSplit fourth_power_free_integer(const Rational& h);

}  // namespace quartic
