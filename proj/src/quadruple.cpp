#include "quartic/quadruple.hpp"

#include "quartic/errors.hpp"

namespace quartic {

namespace {

BigInt pow4(const BigInt& x) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), 4);
  return r;
}

Provenance extend(const Provenance& p, std::string step) {
  Provenance out = p;
  out.chain.push_back(std::move(step));
  return out;
}

Quadruple must_normalize(const Rational& h, std::array<BigInt, 4> raw, Provenance prov) {
  auto q = normalize(h, std::move(raw), std::move(prov));
  if (!q) throw VerificationFailure("rescaling produced a trivial quadruple");
  return *q;
}

}  // namespace

std::string_view source_tag(Source s) {
  switch (s) {
    case Source::MethodOnePoint: return "method_one_point";
    case Source::MethodTwoPoint: return "method_two_point";
    case Source::ParametricFamily: return "parametric_family";
    case Source::SearchHit: return "search_hit";
    case Source::Supplied: return "supplied";
  }
  return "supplied";
}

std::optional<Source> parse_source_tag(std::string_view tag) {
  for (Source s : {Source::MethodOnePoint, Source::MethodTwoPoint, Source::ParametricFamily,
                   Source::SearchHit, Source::Supplied}) {
    if (source_tag(s) == tag) return s;
  }
  return std::nullopt;
}

std::string Quadruple::str() const {
  return h.str() + "; " + to_string(A) + ", " + to_string(B) + ", " + to_string(C) + ", " +
         to_string(D);
}

bool verify(const Rational& h, const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& D) {
  const auto [u, v] = as_ratio(h);
  return u * pow4(A) + v * pow4(B) == u * pow4(C) + v * pow4(D);
}

bool is_trivial(const Rational& h, const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& D) {
  if (A == C && B == D) return true;
  const auto [u, v] = as_ratio(h);
  return u * pow4(A) == v * pow4(D) && u * pow4(C) == v * pow4(B);
}

std::optional<Quadruple> normalize(const Rational& h, std::array<BigInt, 4> raw, Provenance prov) {
  if (h.is_zero()) throw InvalidInput("h must be nonzero");
  for (auto& x : raw) x = abs(x);
  BigInt g = gcd_all(raw);
  if (sgn(g) == 0) return std::nullopt;
  if (g != 1) {
    for (auto& x : raw) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  Quadruple q{h, raw[0], raw[1], raw[2], raw[3], std::move(prov)};
  if (!verify(q)) {
    throw VerificationFailure("quadruple (" + q.str() + ") does not satisfy the equation");
  }
  if (is_trivial(h, q.A, q.B, q.C, q.D)) return std::nullopt;
  return q;
}

std::optional<Quadruple> normalize(const Rational& h, std::array<Rational, 4> raw, Provenance prov) {
  auto cleared = clear_denominators(raw);
  return normalize(h,
                   std::array<BigInt, 4>{std::move(cleared.values[0]), std::move(cleared.values[1]),
                    std::move(cleared.values[2]), std::move(cleared.values[3])},
                   std::move(prov));
}

Quadruple descale_twist(const Quadruple& s, const Rational& t) {
  if (t.is_zero()) throw InvalidInput("twist factor must be nonzero");
  if (t == Rational(1)) return s;
  const BigInt& a = t.num();
  const BigInt& b = t.den();
  Provenance prov = extend(s.provenance, "twist t=" + t.str());
  prov.twist_t = s.provenance.twist_t ? *s.provenance.twist_t * t : t;
  Rational h = s.h / t.pow(4);
  return must_normalize(h, {b * s.A, a * s.B, b * s.C, a * s.D}, std::move(prov));
}

Quadruple integerize(const Quadruple& s) {
  if (s.h.is_integer()) return s;
  const BigInt& u = s.h.den();
  Rational h(s.h.num() * u * u * u);
  return must_normalize(h, {u * s.A, s.B, u * s.C, s.D}, extend(s.provenance, "integerize"));
}

Quadruple invert_h(const Quadruple& s) {
  return must_normalize(s.h.inverse(), {s.B, s.A, s.D, s.C}, extend(s.provenance, "invert"));
}

Quadruple negate_h(const Quadruple& s) {
  return must_normalize(-s.h, {s.A, s.D, s.C, s.B}, extend(s.provenance, "negate"));
}

std::optional<Quadruple> rescale_to(const Quadruple& s, const Rational& target) {
  if (target.is_zero()) return std::nullopt;
  if (target == s.h) return s;
  const Quadruple signed_ok = (s.h.sign() == target.sign()) ? s : negate_h(s);
  for (bool invert : {false, true}) {
    const Quadruple base = invert ? invert_h(signed_ok) : signed_ok;
    // base.h / t^4 = target
    if (auto t = exact_fourth_root(base.h / target)) return descale_twist(base, *t);
  }
  return std::nullopt;
}

Quadruple reduce_to_integer(const Quadruple& s) {
  auto split = fourth_power_free_integer(s.h);
  if (split.core == s.h) return s;
  return descale_twist(s, split.t);
}

}  // namespace quartic
