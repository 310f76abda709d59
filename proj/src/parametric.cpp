#include "quartic/parametric.hpp"

#include <algorithm>

#include "quartic/errors.hpp"

namespace quartic::parametric {

namespace {

using Params = std::span<const Rational>;
using R = Rational;

R sq(const R& x) { return x * x; }

std::optional<std::string> none(Params) { return std::nullopt; }

std::function<std::optional<std::string>(Params)> nonzero(std::size_t index, std::string label) {
  return [index, label](Params p) -> std::optional<std::string> {
    if (p[index].is_zero()) return label + " = 0 gives h = 0";
    return std::nullopt;
  };
}

std::function<std::optional<std::string>(Params)> nonzero2(std::size_t i, std::size_t j,
                                                          std::string label) {
  return [i, j, label](Params p) -> std::optional<std::string> {
    if (p[i].is_zero() || p[j].is_zero()) return label + " = 0 gives h = 0";
    return std::nullopt;
  };
}

struct Seed {
  FamilyDef def;
  std::string suspected;  // erratum text used when certification fails
};

std::vector<Seed> seeds() {
  std::vector<Seed> out;
  auto add = [&out](FamilyDef def, std::string suspected = {}) {
    out.push_back({std::move(def), std::move(suspected)});
  };

  add({"master", {"m", "q"}, 4,
       [](Params p) {
         const R& m = p[0];
         const R& q = p[1];
         const R s = sq(m) + sq(q);
         return FamilyTerms{(sq(m) + sq(s)) / q, m + s, m - q, m - s, m + q};
       },
       [](Params p) -> std::optional<std::string> {
         if (p[1].is_zero()) return std::string("q = 0 is excluded (h has q in the denominator)");
         return std::nullopt;
       },
       {8, 9}, "master (m, q) family, p = m^2 + q^2"});

  add({"ex1_kq", {"k", "q"}, 3,
       [](Params p) {
         const R& k = p[0];
         const R& q = p[1];
         return FamilyTerms{sq(k) * q + sq(sq(k) + R(1)) * q.pow(3), k + sq(k) * q + q, k - R(1),
                            k - sq(k) * q - q, k + R(1)};
       },
       nonzero(1, "q"), {8, 4}, "m = kq"});

  add({"ex1_m_eq_q", {"q"}, 3,
       [](Params p) {
         const R& q = p[0];
         return FamilyTerms{q + R(4) * q.pow(3), R(1) + R(2) * q, R(0), R(1) - R(2) * q, R(2)};
       },
       nonzero(0, "q"), {4}, "m = q; h = q + 4q^3"});

  add({"choudhry_recovered", {"p"}, 3,
       [](Params p) {
         const R& x = p[0];
         return FamilyTerms{R(8) * x * (sq(x) + R(1)), x + R(1), R(0), x - R(1), R(1)};
       },
       nonzero(0, "p"), {4}, "m = q with 2q = p, scaled; h = 8p(p^2 + 1)"});

  add({"ex1_m_2q", {"q"}, 3,
       [](Params p) {
         const R& q = p[0];
         return FamilyTerms{R(4) * q + R(25) * q.pow(3), R(2) + R(5) * q, R(1), R(2) - R(5) * q,
                            R(3)};
       },
       nonzero(0, "q"), {4}, "m = 2q; h = 4q + 25q^3"});

  add({"ex1_m_3q", {"q"}, 3,
       [](Params p) {
         const R& q = p[0];
         return FamilyTerms{R(9) * q + R(100) * q.pow(3), R(3) + R(10) * q, R(2),
                            R(3) - R(10) * q, R(4)};
       },
       nonzero(0, "q"), {4}, "m = 3q; h = 9q + 100q^3"});

  add({"ex1_q2_k", {"k"}, 4,
       [](Params p) {
         const R& k = p[0];
         return FamilyTerms{R(8) * k.pow(4) + R(18) * sq(k) + R(8), R(2) * sq(k) + k + R(2),
                            k - R(1), R(2) * sq(k) - k + R(2), k + R(1)};
       },
       none, {8}, "q = 2, m = 2k; h = 8k^4 + 18k^2 + 8"});

  add({"ex1_q3_k", {"k"}, 4,
       [](Params p) {
         const R& k = p[0];
         return FamilyTerms{R(27) * k.pow(4) + R(57) * sq(k) + R(27), R(3) * sq(k) + k + R(3),
                            k - R(1), R(3) * sq(k) - k + R(3), k + R(1)};
       },
       none, {8}, "q = 3, m = 3k; h = 27k^4 + 57k^2 + 27"});

  add({"ex2_kp", {"k", "p"}, 3,
       [](Params p) {
         const R& k = p[0];
         const R& x = p[1];
         const R h = R(8) * k.pow(3) * x + R(512) * k.pow(7) * x.pow(3) +
                     R(512) * k.pow(3) * x.pow(3) + R(1024) * k.pow(5) * x.pow(3);
         const R core = R(8) * k.pow(3) * x + R(8) * k * x;
         return FamilyTerms{h, core - k, k + R(1), core + k, k - R(1)};
       },
       nonzero2(0, 1, "k or p"), {12, 4}, "h = 8k^3p + 512k^7p^3 + 512k^3p^3 + 1024k^5p^3"});

  add({"ex2_k_half", {"p"}, 3,
       [](Params p) {
         const R& x = p[0];
         return FamilyTerms{R(100) * x.pow(3) + x, R(10) * x - R(1), R(3), R(10) * x + R(1), R(1)};
       },
       nonzero(0, "p"), {4}, "k = 1/2 in ex2_kp; h = 100p^3 + p"});

  const std::string bd_swap =
      "suspected erratum: B and D as stated appear exchanged; swapping B <-> D validates "
      "(see the _bd_swapped entry; a conjecture about intent, not the formula as stated)";

  auto ex3 = [](bool swapped) {
    return [swapped](Params p) {
      const R& n = p[0];
      const R& x = p[1];
      FamilyTerms t{n * (x.pow(4) + (sq(n) + R(2)) * sq(x) + R(1)), sq(x) + n * x + R(1), x + R(1),
                    sq(x) - n * x + R(1), x - R(1)};
      if (swapped) std::swap(t.B, t.D);
      return t;
    };
  };
  add({"ex3_npn", {"n", "p"}, 4, ex3(false), nonzero(0, "n"), {8, 4},
       "h = n(p^4 + (n^2 + 2)p^2 + 1); n = 1 is meant to recover a known family"},
      bd_swap);

  add({"ex4", {"m"}, 4,
       [](Params p) {
         const R& m = p[0];
         return FamilyTerms{m.pow(4) + R(3) * sq(m) + R(1), m + sq(m) + R(1), m - R(1),
                            m - sq(m) - R(1), m + R(1)};
       },
       none, {8}, "q = 1; h = m^4 + 3m^2 + 1"});

  auto ex5 = [](bool swapped) {
    return [swapped](Params p) {
      const R& x = p[0];
      FamilyTerms t{(sq(x) + R(2)) * (sq(x) + R(4)), sq(x) + x + R(2), x + R(1), sq(x) - x + R(2),
                    x - R(1)};
      if (swapped) std::swap(t.B, t.D);
      return t;
    };
  };
  add({"ex5", {"p"}, 4, ex5(false), none, {8}, "h = (p^2 + 2)(p^2 + 4)"}, bd_swap);

  add({"ex6", {"m"}, 4,
       [](Params p) {
         const R& m = p[0];
         return FamilyTerms{R(512) * m.pow(4) + R(1032) * sq(m) + R(512),
                            R(8) * sq(m) - m + R(8), m + R(1), R(8) * sq(m) + m + R(8), m - R(1)};
       },
       none, {8}, "h = 512m^4 + 1032m^2 + 512"});

  add({"ex7", {"m"}, 6,
       [](Params p) {
         const R& m = p[0];
         return FamilyTerms{R(1) + sq(m) + m.pow(6) + R(2) * m.pow(4), R(1) + m + m.pow(3),
                            R(1) - m, R(1) - m - m.pow(3), R(1) + m};
       },
       none, {12}, "q = m^2; h = 1 + m^2 + m^6 + 2m^4"});

  add({"ex8_degree5", {"r"}, 5,
       [](Params p) {
         const R& r = p[0];
         const R r2 = sq(r);
         return FamilyTerms{
             R(8) * r.pow(3) * (r2 - R(1)), R(4) * r * (R(5) * r.pow(4) - R(1)),
             (r.pow(4) + R(6) * r.pow(3) + R(6) * r2 + R(6) * r + R(1)) * sq(r - R(1)),
             R(4) * r.pow(3) * (r.pow(4) - R(5)),
             (r.pow(4) - R(6) * r.pow(3) + R(6) * r2 - R(6) * r + R(1)) * sq(r + R(1))};
       },
       [](Params p) -> std::optional<std::string> {
         const R& r = p[0];
         if (r.is_zero() || r == R(1) || r == R(-1)) return std::string("r in {0, 1, -1} gives h = 0");
         return std::nullopt;
       },
       {29}, "Z = h^2 + 1 on the depressed curve, h^2 + 1 = t^2; h has degree 5"});

  add({"ex3_npn_bd_swapped", {"n", "p"}, 4, ex3(true), nonzero(0, "n"), {8, 4},
       "ex3_npn with B and D exchanged"},
      {});
  out.back().def.status = FamilyStatus::ConjecturalCorrection;
  out.back().def.erratum = "conjectural correction of ex3_npn (B <-> D); not the formula as stated";

  add({"ex5_bd_swapped", {"p"}, 4, ex5(true), none, {8}, "ex5 with B and D exchanged"}, {});
  out.back().def.status = FamilyStatus::ConjecturalCorrection;
  out.back().def.erratum = "conjectural correction of ex5 (B <-> D); not the formula as stated";

  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

Provenance family_provenance(const FamilyDef& def, Params params) {
  std::string detail = def.name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    detail += " " + def.params[i] + "=" + params[i].str();
  }
  return {Source::ParametricFamily, std::move(detail), {}, {}};
}

}  // namespace

Rational residual(const FamilyTerms& t) {
  return t.A.pow(4) + t.h * t.B.pow(4) - t.C.pow(4) - t.h * t.D.pow(4);
}

std::string_view status_tag(FamilyStatus s) {
  switch (s) {
    case FamilyStatus::Verified: return "verified";
    case FamilyStatus::Quarantined: return "quarantined";
    case FamilyStatus::ConjecturalCorrection: return "conjectural_correction";
  }
  return "verified";
}

Certificate certify(const FamilyDef& def) {
  Certificate cert;
  const std::size_t arity = def.params.size();
  std::vector<long> index(arity, 1);
  std::vector<Rational> point(arity);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) point[i] = Rational(index[i]);
    ++cert.points;
    if (!residual(def.eval(point)).is_zero()) {
      cert.counterexample = point;
      return cert;
    }
    std::size_t i = 0;
    for (; i < arity; ++i) {
      if (index[i] <= def.residual_degree[i]) {
        ++index[i];
        break;
      }
      index[i] = 1;
    }
    if (i == arity) break;
  }
  cert.identity = true;
  return cert;
}

const std::vector<FamilyDef>& registry() {
  static const std::vector<FamilyDef> families = [] {
    std::vector<FamilyDef> out;
    for (auto& seed : seeds()) {
      FamilyDef def = std::move(seed.def);
      Certificate cert = certify(def);
      if (!cert.identity) {
        def.status = FamilyStatus::Quarantined;
        def.erratum = "identity fails at (" + join(cert.counterexample) + ")" +
                      (seed.suspected.empty() ? std::string() : "; " + seed.suspected);
      }
      out.push_back(std::move(def));
    }
    return out;
  }();
  return families;
}

const FamilyDef& find_family(std::string_view name) {
  for (const auto& def : registry()) {
    if (def.name == name) return def;
  }
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

FamilyTerms evaluate_terms(const FamilyDef& def, std::span<const Rational> params) {
  if (params.size() != def.params.size()) {
    throw InvalidInput("family " + def.name + " takes " + std::to_string(def.params.size()) +
                       " parameter(s), got " + std::to_string(params.size()));
  }
  if (auto why = def.excluded(params)) throw InvalidInput(def.name + ": " + *why);
  return def.eval(params);
}

namespace {

FamilyValue finish(const FamilyDef& def, std::span<const Rational> params, FamilyTerms terms) {
  if (!residual(terms).is_zero()) {
    throw VerificationFailure("family " + def.name + " failed its identity at (" +
                              join({params.begin(), params.end()}) + ")");
  }
  auto quad = normalize(terms.h, {terms.A, terms.B, terms.C, terms.D},
                        family_provenance(def, params));
  return {std::move(terms), std::move(quad)};
}

}  // namespace

FamilyValue eval_family(std::string_view name, std::span<const Rational> params) {
  const FamilyDef& def = find_family(name);
  if (def.status == FamilyStatus::Quarantined) {
    throw InvalidInput("family " + def.name + " is quarantined: " + def.erratum);
  }
  return finish(def, params, evaluate_terms(def, params));
}

FamilyValue master_family(const Rational& m, const Rational& q) {
  const std::array<Rational, 2> params{m, q};
  return eval_family("master", params);
}

SampleReport sample_identity(const FamilyDef& def, std::size_t samples, std::mt19937_64& rng,
                             long height) {
  SampleReport report;
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  std::vector<Rational> point(def.params.size());
  while (report.samples < samples) {
    for (auto& x : point) x = Rational(BigInt(num(rng)), BigInt(den(rng)));
    if (def.excluded(point)) {
      ++report.skipped;
      continue;
    }
    ++report.samples;
    if (!residual(def.eval(point)).is_zero()) {
      if (report.failures++ == 0) report.first_failure = point;
    }
  }
  return report;
}

std::vector<CatalogEntry> list_families() {
  std::vector<CatalogEntry> out;
  for (const auto& def : registry()) {
    out.push_back({def.name, def.params.size(), def.h_degree, def.status, def.note, def.erratum});
  }
  return out;
}

}  // namespace quartic::parametric
