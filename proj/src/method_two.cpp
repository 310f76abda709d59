#include "quartic/method_two.hpp"

#include "quartic/errors.hpp"

namespace quartic::method_two {

namespace {

bool degenerate_h(const Rational& h) {
  return h.is_zero() || h == Rational(1) || h == Rational(-1);
}

}  // namespace

bool quartic_relation_holds(const HValue& hv) {
  const Rational h2 = hv.h * hv.h;
  const Rational z2 = hv.Z * hv.Z;
  return hv.Y * hv.Y == -(h2 * h2) - (Rational(3) * z2 + Rational(1)) * h2 + z2.pow(3);
}

CurveW build_eprime(const Rational& Z) {
  if (Z.is_zero()) throw InvalidInput("Z must be nonzero");
  const Rational z2 = Z * Z;
  const Rational z6 = z2.pow(3);
  return CurveW(-(Rational(3) * z2 + Rational(1)), Rational(4) * z6,
                -(Rational(12) * z6 * z2 + Rational(4) * z6));
}

std::optional<HValue> point_to_h(const Rational& Z, const PointQ& P, long multiple_index) {
  if (Z.is_zero()) throw InvalidInput("Z must be nonzero");
  if (P.is_infinity() || P.y().is_zero()) return std::nullopt;
  const Rational z3 = Z.pow(3);
  Rational h = Rational(2) * z3 * (P.x() - (Rational(3) * Z * Z + Rational(1))) / P.y();
  Rational Y = -z3 + h * h * P.x() / (Rational(2) * z3);
  HValue hv{std::move(h), std::move(Y), Z, P, multiple_index};
  if (!quartic_relation_holds(hv)) {
    throw VerificationFailure("inverse transform left the quartic at Z=" + Z.str() +
                              ", point " + P.str());
  }
  return hv;
}

std::optional<method_one::MPQTriple> h_to_mpq(const HValue& hv) {
  if (degenerate_h(hv.h)) return std::nullopt;
  const Rational X = hv.Z * hv.Z + hv.h * hv.h;
  if (!contains(method_one::build_curve(hv.h), PointQ(X, hv.Y))) {
    throw VerificationFailure("X = Z^2 + h^2 is off E(h) for h=" + hv.h.str());
  }
  return method_one::point_to_mpq(hv.h, PointQ(X, hv.Y));
}

std::optional<Quadruple> h_to_quadruple(const HValue& hv) {
  auto triple = h_to_mpq(hv);
  if (!triple) return std::nullopt;
  return method_one::mpq_to_quadruple(
      hv.h, *triple,
      {Source::MethodTwoPoint,
       "Z=" + hv.Z.str() + " n=" + std::to_string(hv.multiple_index),
       {},
       {}});
}

HZEnumeration enumerate_HZ(const Rational& Z, const PointQ& gen, long n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be >= 1");
  const CurveW curve = build_eprime(Z);
  if (!contains(curve, gen)) (void)on_curve(curve, gen.x(), gen.y());
  HZEnumeration out;
  PointQ current = PointQ::infinity();
  for (long n = 1; n <= n_max; ++n) {
    current = add(curve, current, gen);
    auto hv = point_to_h(Z, current, n);
    if (!hv || degenerate_h(hv->h)) {
      ++out.degenerate_skipped;
      continue;
    }
    out.values.push_back(std::move(*hv));
  }
  return out;
}

Conjecture2Report conjecture2_scan(const BigInt& n, const std::vector<ZEntry>& z_list, long n_max,
                                   long t_height) {
  if (sgn(n) <= 0) throw InvalidInput("n must be >= 1");
  if (t_height < 1) throw InvalidInput("t_height must be >= 1");
  Conjecture2Report report{n, {}, 0, 0};
  const Rational target(n);
  for (const auto& entry : z_list) {
    auto hz = enumerate_HZ(entry.Z, entry.gen, n_max);
    report.degenerate_skipped += hz.degenerate_skipped;
    for (const auto& hv : hz.values) {
      ++report.values_examined;
      // n = t^4 h has at most one positive rational t.
      auto t = exact_fourth_root(target / hv.h);
      if (!t) continue;
      if (t->num() > t_height || t->den() > t_height) continue;
      report.matches.push_back({entry.Z, hv.multiple_index, hv.h, *t});
    }
  }
  return report;
}

}  // namespace quartic::method_two
