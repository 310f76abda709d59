// quartic: batch front end for the A^4 + hB^4 = C^4 + hD^4 toolkit.
//
// Exit codes: 0 success (including empty results), 1 a supplied quadruple
// is not a solution, 2 invalid input, 3 resource refusal, 4 internal
// verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quartic/errors.hpp"
#include "quartic/method_one.hpp"
#include "quartic/method_two.hpp"
#include "quartic/parametric.hpp"
#include "quartic/records.hpp"
#include "quartic/search.hpp"

namespace {

using namespace quartic;

enum Exit { kOk = 0, kNotASolution = 1, kInvalid = 2, kRefused = 3, kInternal = 4 };

struct Output {
  bool table = false;

  void quadruple(const Quadruple& q) const {
    if (!verify(q)) throw VerificationFailure("refusing to emit unverified record " + q.str());
    if (table) {
      std::cout << "h=" << q.h << "  A=" << q.A << "  B=" << q.B << "  C=" << q.C << "  D=" << q.D
                << "  [" << source_tag(q.provenance.source);
      if (!q.provenance.detail.empty()) std::cout << " " << q.provenance.detail;
      for (const auto& step : q.provenance.chain) std::cout << " | " << step;
      std::cout << "]\n";
    } else {
      std::cout << records::to_line(records::to_json(q)) << "\n";
    }
  }

  void hvalue(const method_two::HValue& hv) const {
    if (table) {
      std::cout << "Z=" << hv.Z << "  n=" << hv.multiple_index << "  h=" << hv.h << "  Y=" << hv.Y
                << "\n";
    } else {
      std::cout << records::to_line(records::to_json(hv)) << "\n";
    }
  }

  void hit(const search::SearchHit& h) const {
    if (!verify(h.h, h.A, h.B, h.C, h.D)) {
      throw VerificationFailure("refusing to emit unverified hit");
    }
    if (table) {
      std::cout << "h=" << h.h << "  " << h.A << "^4 + h*" << h.B << "^4 = " << h.C << "^4 + h*"
                << h.D << "^4\n";
    } else {
      std::cout << records::to_line(records::to_json(h)) << "\n";
    }
  }

  // Human-readable notes go to stdout in table mode, stderr otherwise, so
  // json-lines output stays machine-readable.
  std::ostream& note() const { return table ? std::cout : std::cerr; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) out.push_back(Rational::parse(part));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<PointQ> generators(const CurveW& curve, const std::string& gen, const std::string& file) {
  if (!gen.empty() && !file.empty()) throw InvalidInput("give --gen or --gen-file, not both");
  if (!gen.empty()) {
    PointQ p = PointQ::parse(gen);
    return {on_curve(curve, p.x(), p.y())};
  }
  if (!file.empty()) return load_points(file, curve);
  throw InvalidInput("a generator is required (--gen x,y or --gen-file PATH)");
}

unsigned default_threads() {
  const char* raw = std::getenv("QUARTIC_THREADS");
  return raw ? static_cast<unsigned>(std::max(1L, std::strtol(raw, nullptr, 10))) : 1U;
}

struct SolveArgs {
  std::string h, gen, gen_file, target;
  long multiples = 1;
  bool no_reduce = false;
};

int run_solve(const SolveArgs& a, const Output& out) {
  const Rational h = Rational::parse(a.h);
  const CurveW curve = method_one::build_curve(h);
  for (const auto& gen : generators(curve, a.gen, a.gen_file)) {
    for (const auto& step : method_one::solve_trace(h, gen, a.multiples)) {
      if (out.table && step.triple) {
        out.note() << "# n=" << step.n << " point=(" << step.point.str() << ") (m,p,q)=("
                   << step.triple->m << ", " << step.triple->p << ", " << step.triple->q << ")\n";
      }
      if (!step.quadruple) {
        out.note() << "# n=" << step.n << ": trivial\n";
        continue;
      }
      out.quadruple(*step.quadruple);
      if (!a.no_reduce) {
        Quadruple reduced = reduce_to_integer(*step.quadruple);
        if (reduced.h != step.quadruple->h) out.quadruple(reduced);
      }
      if (!a.target.empty()) {
        if (auto r = rescale_to(*step.quadruple, Rational::parse(a.target))) {
          out.quadruple(*r);
        } else {
          out.note() << "# n=" << step.n << ": " << a.target << " is not +-h^(+-1) t^4\n";
        }
      }
    }
  }
  return kOk;
}

struct Method2Args {
  std::string z, gen, gen_file, n;
  long multiples = 1;
  long t_height = 100;
  bool integerize = false;
};

int run_method2(const Method2Args& a, const Output& out) {
  const Rational Z = Rational::parse(a.z);
  const CurveW curve = method_two::build_eprime(Z);
  const auto gens = generators(curve, a.gen, a.gen_file);
  if (!a.n.empty()) {
    std::vector<method_two::ZEntry> entries;
    for (const auto& g : gens) entries.push_back({Z, g});
    auto report = method_two::conjecture2_scan(parse_bigint(a.n), entries, a.multiples, a.t_height);
    for (const auto& m : report.matches) {
      if (out.table) {
        std::cout << "n=" << a.n << " = t^4 * h  with Z=" << m.Z << " multiple=" << m.multiple_index
                  << " h=" << m.h << " t=" << m.t << "\n";
      } else {
        records::Json j;
        j["type"] = "conjecture2_match";
        j["n"] = a.n;
        j["z"] = m.Z.str();
        j["multiple_index"] = m.multiple_index;
        j["h"] = m.h.str();
        j["t"] = m.t.str();
        std::cout << records::to_line(j) << "\n";
      }
    }
    out.note() << "# examined " << report.values_examined << " h-values, skipped "
               << report.degenerate_skipped << " degenerate multiples, "
               << (report.matches.empty() ? "no match within bounds" : "match found") << "\n";
    return kOk;
  }
  for (const auto& g : gens) {
    auto hz = method_two::enumerate_HZ(Z, g, a.multiples);
    for (const auto& hv : hz.values) {
      out.hvalue(hv);
      auto q = method_two::h_to_quadruple(hv);
      if (!q) {
        out.note() << "# multiple " << hv.multiple_index << ": trivial\n";
        continue;
      }
      out.quadruple(*q);
      if (a.integerize && !q->h.is_integer()) out.quadruple(integerize(*q));
    }
    if (hz.degenerate_skipped) out.note() << "# skipped " << hz.degenerate_skipped << " degenerate multiples\n";
  }
  return kOk;
}

search::SearchOptions search_options(std::size_t segments, unsigned threads, std::uint64_t budget) {
  search::SearchOptions o;
  o.segments = segments;
  o.threads = threads;
  o.pair_budget = budget;
  return o;
}

int run_search(const std::string& h_text, std::uint32_t bound, const search::SearchOptions& opts,
               const Output& out) {
  const Rational h = Rational::parse(h_text);
  const auto hits = search::mitm_search(h, bound, opts);
  for (const auto& hit : hits) out.hit(hit);
  out.note() << "# h=" << h << " N=" << bound << " segments=" << search::planned_segments(h, bound, opts)
             << " hits=" << hits.size();
  if (!hits.empty()) out.note() << " smallest max=" << hits.front().max_coordinate();
  out.note() << "\n";
  return kOk;
}

int run_survey(const std::string& range, std::uint32_t bound, const search::SearchOptions& opts,
               const Output& out) {
  auto parts = split(range, ':');
  if (parts.size() != 2) throw InvalidInput("--h-range must be LO:HI");
  const auto lo = parse_bigint(parts[0]);
  const auto hi = parse_bigint(parts[1]);
  if (sgn(lo) <= 0 || !hi.fits_ulong_p() || !lo.fits_ulong_p()) throw InvalidInput("bad --h-range");
  const auto rows = search::survey(lo.get_ui(), hi.get_ui(), bound, opts);
  for (const auto& row : rows) {
    if (!out.table) {
      if (row.smallest) {
        auto j = records::to_json(*row.smallest);
        j["hits"] = row.hit_count;
        std::cout << records::to_line(j) << "\n";
      } else {
        records::Json j;
        j["type"] = "survey_miss";
        j["h"] = std::to_string(row.h);
        j["bound"] = std::to_string(bound);
        std::cout << records::to_line(j) << "\n";
      }
    }
  }
  std::ostream& os = out.note();
  os << "#      h  smallest solution (A, B, C, D)          hits\n";
  for (const auto& row : rows) {
    os << "# " << std::setw(6) << row.h << "  ";
    if (row.smallest) {
      std::ostringstream cell;
      cell << row.smallest->A << ", " << row.smallest->B << ", " << row.smallest->C << ", "
           << row.smallest->D;
      os << std::left << std::setw(38) << cell.str() << std::right << row.hit_count << "\n";
    } else {
      os << "none <= " << bound << "\n";
    }
  }
  return kOk;
}

struct ParametricArgs {
  std::string family, params, sweep;
  bool list = false;
  bool integerize = false;
};

int run_parametric(const ParametricArgs& a, const Output& out) {
  if (a.list || a.family.empty()) {
    for (const auto& e : parametric::list_families()) {
      if (out.table) {
        std::cout << std::left << std::setw(22) << e.name << std::right << " arity=" << e.arity
                  << " h-degree=" << e.h_degree << " " << parametric::status_tag(e.status) << "  "
                  << e.note;
        if (!e.erratum.empty()) std::cout << "  [" << e.erratum << "]";
        std::cout << "\n";
      } else {
        records::Json j;
        j["type"] = "family";
        j["name"] = e.name;
        j["arity"] = e.arity;
        j["h_degree"] = e.h_degree;
        j["status"] = std::string(parametric::status_tag(e.status));
        j["note"] = e.note;
        j["erratum"] = e.erratum;
        std::cout << records::to_line(j) << "\n";
      }
    }
    return kOk;
  }
  const auto& def = parametric::find_family(a.family);
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> fixed = a.params.empty() ? std::vector<Rational>{} : parse_rational_list(a.params);
  if (!a.sweep.empty()) {
    auto dots = a.sweep.find("..");
    if (dots == std::string::npos) throw InvalidInput("--sweep must be lo..hi");
    const long lo = parse_bigint(a.sweep.substr(0, dots)).get_si();
    const long hi = parse_bigint(a.sweep.substr(dots + 2)).get_si();
    if (lo > hi) throw InvalidInput("--sweep needs lo <= hi");
    if (fixed.size() + 1 != def.params.size()) {
      throw InvalidInput("--sweep varies the last parameter; give the other " +
                         std::to_string(def.params.size() - 1) + " with --params");
    }
    for (long x = lo; x <= hi; ++x) {
      auto p = fixed;
      p.emplace_back(x);
      points.push_back(std::move(p));
    }
  } else {
    points.push_back(fixed);
  }
  for (const auto& p : points) {
    if (def.excluded(p)) {
      out.note() << "# skipped excluded parameters\n";
      continue;
    }
    auto value = parametric::eval_family(a.family, p);
    if (!value.quadruple) {
      out.note() << "# trivial at these parameters\n";
      continue;
    }
    out.quadruple(*value.quadruple);
    if (a.integerize) {
      Quadruple reduced = reduce_to_integer(*value.quadruple);
      if (reduced.h != value.quadruple->h) out.quadruple(reduced);
    }
  }
  return kOk;
}

int run_verify(const std::string& h_text, const std::string& quad, const std::string& file,
               const Output& out) {
  if (!file.empty()) {
    std::ifstream in_file;
    std::istream* in = &std::cin;
    if (file != "-") {
      in_file.open(file);
      if (!in_file) throw InvalidInput("cannot open " + file);
      in = &in_file;
    }
    std::string line;
    std::size_t total = 0, bad = 0;
    while (std::getline(*in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      records::Json j;
      try {
        j = records::Json::parse(line);
      } catch (const records::Json::exception& e) {
        throw InvalidInput(std::string("bad JSON line: ") + e.what());
      }
      const auto type = j.value("type", std::string("quadruple"));
      if (type != "quadruple" && type != "search_hit") continue;
      ++total;
      Quadruple q = records::quadruple_from_json(j);
      if (!verify(q)) {
        ++bad;
        out.note() << "invalid: " << q.str() << "\n";
      }
    }
    std::cout << (bad == 0 ? "valid" : "invalid") << " (" << total - bad << "/" << total << ")\n";
    return bad == 0 ? kOk : kNotASolution;
  }
  if (h_text.empty() || quad.empty()) throw InvalidInput("verify needs --h and --quad, or --records");
  const Rational h = Rational::parse(h_text);
  auto parts = split(quad, ',');
  if (parts.size() != 4) throw InvalidInput("--quad must be A,B,C,D");
  const bool ok = verify(h, parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2]),
                         parse_bigint(parts[3]));
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? kOk : kNotASolution;
}

int run_twist_scan(const std::string& h_text, const std::string& t_list, long bound, const Output& out) {
  const Rational h = Rational::parse(h_text);
  const auto ts = t_list.empty() ? std::vector<Rational>{} : parse_rational_list(t_list);
  const auto report = method_one::twist_scan(h, ts, bound);
  for (const auto& e : report.entries) {
    const char* status = e.status == method_one::TwistScanEntry::Status::Hit        ? "hit"
                         : e.status == method_one::TwistScanEntry::Status::Singular ? "singular"
                                                                                    : "exhausted";
    if (out.table) {
      std::cout << "t=" << e.t << "  h*t^4=" << h * e.t.pow(4) << "  " << status;
      if (!e.points.empty()) std::cout << "  first=(" << e.points.front().str() << ") points=" << e.points.size();
      std::cout << "\n";
    } else {
      records::Json j;
      j["type"] = "twist_scan";
      j["h"] = h.str();
      j["twist_t"] = e.t.str();
      j["effective_h"] = (h * e.t.pow(4)).str();
      j["status"] = status;
      std::vector<std::string> pts;
      for (const auto& p : e.points) pts.push_back(p.str());
      j["points"] = pts;
      std::cout << records::to_line(j) << "\n";
    }
  }
  if (!report.hit) out.note() << "# no twist with a point within height " << bound << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver toolkit for A^4 + hB^4 = C^4 + hD^4"};
  // --h is the equation parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  std::string output = "json";
  app.add_option("--output", output, "json (JSON lines) or table")
      ->check(CLI::IsMember({"json", "table"}));

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Method one: multiples of a point on E(h)");
  cmd_solve->add_option("--h", solve.h, "h as num/den")->required();
  cmd_solve->add_option("--gen", solve.gen, "generator x,y on E(h)");
  cmd_solve->add_option("--gen-file", solve.gen_file, "file with one x,y per line");
  cmd_solve->add_option("--multiples", solve.multiples, "use multiples 1..N")->check(CLI::PositiveNumber);
  cmd_solve->add_option("--target", solve.target, "also rescale to this h when possible");
  cmd_solve->add_flag("--no-reduce", solve.no_reduce, "skip the fourth-power-free integer form");

  Method2Args m2;
  auto* cmd_m2 = app.add_subcommand("method2", "Method two: h-values from points on E'(Z)");
  cmd_m2->add_option("--z", m2.z, "Z as num/den")->required();
  cmd_m2->add_option("--gen", m2.gen, "generator x,y on E'(Z)");
  cmd_m2->add_option("--gen-file", m2.gen_file, "file with one x,y per line");
  cmd_m2->add_option("--multiples", m2.multiples, "use multiples 1..N")->check(CLI::PositiveNumber);
  cmd_m2->add_flag("--integerize", m2.integerize, "also emit the integer h = v u^3 form");
  cmd_m2->add_option("--n", m2.n, "test whether n = t^4 h for some listed h");
  cmd_m2->add_option("--t-height", m2.t_height, "bound on numerator/denominator of t")
      ->check(CLI::PositiveNumber);

  std::string search_h;
  std::uint32_t bound = 0;
  std::size_t segments = 0;
  unsigned threads = default_threads();
  std::uint64_t pair_budget = 0;
  auto* cmd_search = app.add_subcommand("search", "Exhaustive meet-in-the-middle search for one h");
  cmd_search->add_option("--h", search_h, "h > 0")->required();
  cmd_search->add_option("--bound", bound, "coordinate bound N")->required();
  cmd_search->add_option("--segments", segments, "index segments (0 = auto)");
  cmd_search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_search->add_option("--pair-budget", pair_budget, "refuse above this many pairs");

  std::string h_range;
  auto* cmd_survey = app.add_subcommand("survey", "Smallest solution for each h in a range");
  cmd_survey->add_option("--h-range", h_range, "LO:HI")->required();
  cmd_survey->add_option("--bound", bound, "coordinate bound N")->required();
  cmd_survey->add_option("--segments", segments, "index segments (0 = auto)");
  cmd_survey->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  cmd_survey->add_option("--pair-budget", pair_budget, "refuse above this many pairs");

  ParametricArgs par;
  auto* cmd_par = app.add_subcommand("parametric", "Evaluate a registered parametric family");
  cmd_par->add_option("--family", par.family, "family name");
  cmd_par->add_option("--params", par.params, "r1,r2,... (rationals)");
  cmd_par->add_option("--sweep", par.sweep, "lo..hi over the last parameter (integers)");
  cmd_par->add_flag("--list", par.list, "print the catalog");
  cmd_par->add_flag("--integerize", par.integerize, "also emit the fourth-power-free integer form");

  std::string verify_h, verify_quad, verify_file;
  auto* cmd_verify = app.add_subcommand("verify", "Check a quadruple or a file of records");
  cmd_verify->add_option("--h", verify_h, "h as num/den");
  cmd_verify->add_option("--quad", verify_quad, "A,B,C,D");
  cmd_verify->add_option("--records", verify_file, "JSON-lines file ('-' for stdin)");

  std::string twist_h, twist_list;
  long twist_bound = 100;
  auto* cmd_twist = app.add_subcommand("twist-scan", "Search twists h*t^4 for a rational point");
  cmd_twist->add_option("--h", twist_h, "h as num/den")->required();
  cmd_twist->add_option("--t-list", twist_list, "candidate t values, comma separated");
  cmd_twist->add_option("--bound", twist_bound, "naive point-search height")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const Output out{output == "table"};
  try {
    const auto opts = search_options(segments, threads, pair_budget);
    if (*cmd_solve) return run_solve(solve, out);
    if (*cmd_m2) return run_method2(m2, out);
    if (*cmd_search) return run_search(search_h, bound, opts, out);
    if (*cmd_survey) return run_survey(h_range, bound, opts, out);
    if (*cmd_par) return run_parametric(par, out);
    if (*cmd_verify) return run_verify(verify_h, verify_quad, verify_file, out);
    if (*cmd_twist) return run_twist_scan(twist_h, twist_list, twist_bound, out);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const VerificationFailure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}
