// Thin pybind11 layer. Rationals and big integers cross as decimal strings;
// records cross as the same JSON lines the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/method_one.hpp"
#include "quartic/method_two.hpp"
#include "quartic/parametric.hpp"
#include "quartic/records.hpp"
#include "quartic/search.hpp"

namespace py = pybind11;
using namespace quartic;

namespace {

using PointText = std::pair<std::string, std::string>;
using CurveText = std::tuple<std::string, std::string, std::string>;

Rational rat(const std::string& s) { return Rational::parse(s); }

PointQ point(const std::optional<PointText>& p) {
  if (!p) return PointQ::infinity();
  return PointQ(rat(p->first), rat(p->second));
}

// Validating: throws InvalidInput with the residual when p is off c.
PointQ point_on(const CurveW& c, const std::optional<PointText>& p) {
  if (!p) return PointQ::infinity();
  return on_curve(c, rat(p->first), rat(p->second));
}

std::optional<PointText> text(const PointQ& p) {
  if (p.is_infinity()) return std::nullopt;
  return PointText{p.x().str(), p.y().str()};
}

CurveW curve(const CurveText& c) {
  return CurveW(rat(std::get<0>(c)), rat(std::get<1>(c)), rat(std::get<2>(c)));
}

CurveText text(const CurveW& c) { return {c.a2().str(), c.a4().str(), c.a6().str()}; }

template <class T>
std::string line(const T& value) {
  return records::to_line(records::to_json(value));
}

Quadruple quad(const std::string& json) { return records::quadruple_from_json(records::Json::parse(json)); }

template <class T>
std::vector<std::string> lines(const std::vector<T>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(line(v));
  return out;
}

std::vector<Rational> rats(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(rat(s));
  return out;
}

search::SearchOptions options(unsigned threads, std::size_t segments) {
  search::SearchOptions o;
  o.threads = threads;
  o.segments = segments;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for A^4 + h B^4 = C^4 + h D^4";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceRefused>(m, "ResourceRefused", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);

  m.def("normalize_rational", [](const std::string& s) { return rat(s).str(); });
  m.def("verify", [](const std::string& h, const std::string& A, const std::string& B, const std::string& C,
                     const std::string& D) {
    return verify(rat(h), parse_bigint(A), parse_bigint(B), parse_bigint(C), parse_bigint(D));
  });
  m.def("verify_record", [](const std::string& json) { return verify(quad(json)); });

  // curves
  m.def("discriminant", [](const CurveText& c) {
    return discriminant(rat(std::get<0>(c)), rat(std::get<1>(c)), rat(std::get<2>(c))).str();
  });
  m.def("contains", [](const CurveText& c, const std::optional<PointText>& p) {
    return contains(curve(c), point(p));
  });
  m.def("add", [](const CurveText& c, const std::optional<PointText>& p, const std::optional<PointText>& q) {
    const CurveW e = curve(c);
    return text(add(e, point_on(e, p), point_on(e, q)));
  });
  m.def("mul", [](const CurveText& c, const std::string& n, const std::optional<PointText>& p) {
    const CurveW e = curve(c);
    return text(mul(e, parse_bigint(n), point_on(e, p)));
  });
  m.def("build_curve", [](const std::string& h) { return text(method_one::build_curve(rat(h))); });
  m.def("build_depressed", [](const std::string& h) { return text(method_one::build_depressed(rat(h))); });
  m.def("build_eprime", [](const std::string& z) { return text(method_two::build_eprime(rat(z))); });

  // method one
  m.def("solve", [](const std::string& h, const PointText& gen, long n_max) {
    return lines(method_one::solve(rat(h), point(gen), n_max));
  });
  m.def("point_to_mpq", [](const std::string& h, const PointText& p) {
    const Rational hq = rat(h);
    const auto t = method_one::point_to_mpq(hq, point_on(method_one::build_curve(hq), p));
    return std::tuple{t.m.str(), t.p.str(), t.q.str()};
  });
  m.def("descale_twist", [](const std::string& rec, const std::string& t) {
    return line(descale_twist(quad(rec), rat(t)));
  });
  m.def("integerize", [](const std::string& rec) { return line(integerize(quad(rec))); });
  m.def("reduce_to_integer", [](const std::string& rec) { return line(reduce_to_integer(quad(rec))); });
  m.def("rescale_to", [](const std::string& rec, const std::string& target) -> std::optional<std::string> {
    if (auto q = rescale_to(quad(rec), rat(target))) return line(*q);
    return std::nullopt;
  });

  // method two
  m.def("point_to_h", [](const std::string& z, const PointText& p, long k) -> std::optional<std::string> {
    const Rational zq = rat(z);
    if (auto hv = method_two::point_to_h(zq, point_on(method_two::build_eprime(zq), p), k)) return line(*hv);
    return std::nullopt;
  }, py::arg("z"), py::arg("point"), py::arg("multiple_index") = 1);
  m.def("enumerate_hz", [](const std::string& z, const PointText& gen, long n_max) {
    const auto e = method_two::enumerate_HZ(rat(z), point(gen), n_max);
    return std::pair{lines(e.values), e.degenerate_skipped};
  });
  m.def("h_to_quadruple", [](const std::string& z, const PointText& p, long k) -> std::optional<std::string> {
    const Rational zq = rat(z);
    const auto hv = method_two::point_to_h(zq, point_on(method_two::build_eprime(zq), p), k);
    if (!hv) return std::nullopt;
    if (auto q = method_two::h_to_quadruple(*hv)) return line(*q);
    return std::nullopt;
  }, py::arg("z"), py::arg("point"), py::arg("multiple_index") = 1);

  // parametric families
  m.def("list_families", [] {
    std::vector<py::dict> out;
    for (const auto& e : parametric::list_families()) {
      py::dict d;
      d["name"] = e.name;
      d["arity"] = e.arity;
      d["h_degree"] = e.h_degree;
      d["status"] = std::string(parametric::status_tag(e.status));
      d["note"] = e.note;
      out.push_back(std::move(d));
    }
    return out;
  });
  m.def("eval_family", [](const std::string& name, const std::vector<std::string>& params) {
    const auto p = rats(params);
    const auto v = parametric::eval_family(name, p);
    py::dict terms;
    terms["h"] = v.terms.h.str();
    terms["A"] = v.terms.A.str();
    terms["B"] = v.terms.B.str();
    terms["C"] = v.terms.C.str();
    terms["D"] = v.terms.D.str();
    return std::pair{terms, v.quadruple ? std::optional<std::string>(line(*v.quadruple)) : std::nullopt};
  });

  // search
  m.def("mitm_search", [](const std::string& h, std::uint32_t N, unsigned threads, std::size_t segments) {
    const Rational hq = rat(h);
    std::vector<search::SearchHit> hits;
    {
      py::gil_scoped_release release;
      hits = search::mitm_search(hq, N, options(threads, segments));
    }
    return lines(hits);
  }, py::arg("h"), py::arg("bound"), py::arg("threads") = 1, py::arg("segments") = 0);
  m.def("survey", [](std::uint64_t lo, std::uint64_t hi, std::uint32_t N, unsigned threads) {
    std::vector<search::SurveyRow> rows;
    {
      py::gil_scoped_release release;
      rows = search::survey(lo, hi, N, options(threads, 0));
    }
    std::vector<std::tuple<std::uint64_t, std::size_t, std::optional<std::string>>> out;
    for (const auto& r : rows) {
      out.emplace_back(r.h, r.hit_count, r.smallest ? std::optional<std::string>(line(*r.smallest)) : std::nullopt);
    }
    return out;
  }, py::arg("h_lo"), py::arg("h_hi"), py::arg("bound"), py::arg("threads") = 1);
}
