#include "quartic/exactnum.hpp"

#include <ostream>

#include "quartic/errors.hpp"

namespace quartic {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InvalidInput("empty integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidInput("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw InvalidInput("zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(trim(text.substr(0, slash))),
                  parse_bigint(trim(text.substr(slash + 1))));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  if (sgn(num_) < 0) return Rational(Raw{}, BigInt(-den_), BigInt(-num_));
  return Rational(Raw{}, den_, num_);
}

Rational Rational::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), exponent);
  return Rational(Raw{}, std::move(n), std::move(d));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ += rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ -= rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<BigInt> exact_isqrt(const BigInt& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

std::optional<BigInt> exact_iroot4(const BigInt& value) {
  if (sgn(value) < 0) return std::nullopt;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), value.get_mpz_t(), 4) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  auto n = exact_isqrt(x.num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(x.den());
  if (!d) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

std::optional<Rational> exact_fourth_root(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Rational(0);
  auto n = exact_iroot4(x.num());
  if (!n) return std::nullopt;
  auto d = exact_iroot4(x.den());
  if (!d) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

ClearedDenominators clear_denominators(std::span<const Rational> v) {
  if (v.empty()) throw InvalidInput("clear_denominators of an empty list");
  ClearedDenominators out;
  out.scale = 1;
  for (const auto& x : v) {
    mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), x.den().get_mpz_t());
  }
  out.values.reserve(v.size());
  for (const auto& x : v) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), out.scale.get_mpz_t(), x.den().get_mpz_t());
    out.values.emplace_back(x.num() * q);
  }
  return out;
}

BigInt gcd_all(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1UL << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

FourthPowerSplit fourth_power_free_integer(const Rational& h) {
  if (h.is_zero()) return {Rational(0), Rational(1)};
  // h = v/u = (v u^3) / u^4
  BigInt u3;
  mpz_pow_ui(u3.get_mpz_t(), h.den().get_mpz_t(), 3);
  BigInt core = h.num() * u3;
  BigInt root = 1;  // core_original = core * root^4
  const int sign = sgn(core);
  core = abs(core);
  for (unsigned long p : small_primes()) {
    if (core < p) break;
    if (mpz_divisible_ui_p(core.get_mpz_t(), p) == 0) continue;
    BigInt pp(p);
    unsigned long e = mpz_remove(core.get_mpz_t(), core.get_mpz_t(), pp.get_mpz_t());
    BigInt keep, lift;
    mpz_pow_ui(keep.get_mpz_t(), pp.get_mpz_t(), e % 4);
    mpz_pow_ui(lift.get_mpz_t(), pp.get_mpz_t(), e / 4);
    core *= keep;
    root *= lift;
  }
  if (auto r = exact_iroot4(core); r && *r > 1) {
    root *= *r;
    core = 1;
  }
  if (sign < 0) core = -core;
  // h = core * t^4 with t = root / u
  return {Rational(core), Rational(root, h.den())};
}

}  // namespace quartic
