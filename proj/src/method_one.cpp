#include "quartic/method_one.hpp"

#include "quartic/errors.hpp"

namespace quartic::method_one {

namespace {

void require_nonsingular(const Rational& h) {
  if (h.is_zero() || h == Rational(1) || h == Rational(-1)) {
    throw InvalidInput("h = " + h.str() + " makes E(h) singular (h^3 - h = 0)");
  }
}

Rational cube_minus(const Rational& h) { return h.pow(3) - h; }

}  // namespace

bool triple_holds(const Rational& h, const MPQTriple& t) {
  return h * t.p - t.q == Rational(1) && t.m * t.m == -h * t.p.pow(3) + t.q.pow(3);
}

CurveW build_curve(const Rational& h) {
  require_nonsingular(h);
  const Rational k = cube_minus(h);
  return CurveW(Rational(-3) * h * h, Rational(3) * h * k, -(k * k));
}

CurveW build_depressed(const Rational& h) {
  require_nonsingular(h);
  const Rational h2 = h * h;
  return CurveW(Rational(0), Rational(-3) * h2, -(h2 * h2 + h2));
}

CurveW build_twist(const Rational& h, const Rational& t) { return build_depressed(h * t.pow(4)); }

MPQTriple point_to_mpq(const Rational& h, const PointQ& P) {
  require_nonsingular(h);
  if (P.is_infinity()) throw InvalidInput("point at infinity has no (m, p, q)");
  const Rational k = cube_minus(h);
  Rational p = P.x() / k;
  Rational m = P.y() / k;
  Rational q = h * p - Rational(1);
  return {std::move(m), std::move(p), std::move(q)};
}

std::optional<Quadruple> mpq_to_quadruple(const Rational& h, const MPQTriple& t, Provenance prov) {
  if (t.m.is_zero()) return std::nullopt;
  if (!triple_holds(h, t)) {
    throw InvalidInput("(m, p, q) = (" + t.m.str() + ", " + t.p.str() + ", " + t.q.str() +
                       ") does not satisfy m^2 = -hp^3 + q^3, hp - q = 1 for h = " + h.str());
  }
  return normalize(h, {t.m - t.q, t.m + t.p, t.m + t.q, t.m - t.p}, std::move(prov));
}

std::vector<SolveStep> solve_trace(const Rational& h, const PointQ& gen, long n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be >= 1");
  const CurveW curve = build_curve(h);
  if (!contains(curve, gen)) {
    (void)on_curve(curve, gen.x(), gen.y());  // throws with the residual
  }
  std::vector<SolveStep> steps;
  PointQ current = PointQ::infinity();
  for (long n = 1; n <= n_max; ++n) {
    current = add(curve, current, gen);
    SolveStep step{n, current, std::nullopt, std::nullopt};
    if (!current.is_infinity() && !current.y().is_zero()) {
      step.triple = point_to_mpq(h, current);
      step.quadruple = mpq_to_quadruple(
          h, *step.triple, {Source::MethodOnePoint, "n=" + std::to_string(n), {}, {}});
      if (step.quadruple && !verify(*step.quadruple)) {
        throw VerificationFailure("solve produced an invalid quadruple at n=" + std::to_string(n));
      }
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<Quadruple> solve(const Rational& h, const PointQ& gen, long n_max) {
  std::vector<Quadruple> out;
  for (auto& step : solve_trace(h, gen, n_max)) {
    if (step.quadruple) out.push_back(std::move(*step.quadruple));
  }
  return out;
}

TwistScanReport twist_scan(const Rational& h, const std::vector<Rational>& t_candidates,
                           long height_bound) {
  TwistScanReport report;
  for (const auto& t : t_candidates) {
    TwistScanEntry entry{t, TwistScanEntry::Status::Exhausted, {}};
    const Rational effective = h * t.pow(4);
    if (effective.is_zero() || effective == Rational(1) || effective == Rational(-1)) {
      entry.status = TwistScanEntry::Status::Singular;
      report.entries.push_back(std::move(entry));
      continue;
    }
    for (auto& p : naive_point_search(build_twist(h, t), height_bound)) {
      if (!p.y().is_zero()) entry.points.push_back(std::move(p));
    }
    if (!entry.points.empty()) entry.status = TwistScanEntry::Status::Hit;
    report.entries.push_back(std::move(entry));
    if (report.entries.back().status == TwistScanEntry::Status::Hit) {
      report.hit = report.entries.size() - 1;
      break;
    }
  }
  return report;
}

CurveW build_remark4(const Rational& h) {
  require_nonsingular(h);
  const Rational h2 = h * h;
  const Rational g = (h2 - Rational(1)) / h.pow(3);
  return CurveW(Rational(-3) / h2, Rational(-3) * (h2 - Rational(1)) / (h2 * h2), -(g * g));
}

PointQ remark4_map(const Rational& h, const PointQ& p) {
  if (p.is_infinity()) return p;
  const Rational h2 = h * h;
  return PointQ(h2 * p.x() - Rational(1) + h2, h.pow(3) * p.y());
}

PointQ remark4_unmap(const Rational& h, const PointQ& p) {
  if (p.is_infinity()) return p;
  const Rational h2 = h * h;
  return PointQ((p.x() + Rational(1) - h2) / h2, p.y() / h.pow(3));
}

}  // namespace quartic::method_one
