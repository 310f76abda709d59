#include "quartic/weierstrass.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

Rational discriminant(const Rational& a2, const Rational& a4, const Rational& a6) {
  const Rational b2 = Rational(4) * a2;
  const Rational b4 = Rational(2) * a4;
  const Rational b6 = Rational(4) * a6;
  const Rational b8 = Rational(4) * a2 * a6 - a4 * a4;
  return -(b2 * b2 * b8) - Rational(8) * b4.pow(3) - Rational(27) * b6 * b6 +
         Rational(9) * b2 * b4 * b6;
}

CurveW::CurveW(Rational a2, Rational a4, Rational a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
  if (discriminant().is_zero()) throw InvalidInput("singular curve: " + str());
}

Rational CurveW::rhs(const Rational& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

std::string CurveW::str() const {
  std::ostringstream os;
  os << "y^2 = x^3";
  auto term = [&os](const Rational& c, const char* mono) {
    if (c.is_zero()) return;
    os << (c.sign() < 0 ? " - " : " + ") << c.abs().str() << mono;
  };
  term(a2_, "*x^2");
  term(a4_, "*x");
  term(a6_, "");
  return os.str();
}

std::string PointQ::str() const {
  if (!finite_) return "inf";
  return x_.str() + "," + y_.str();
}

PointQ PointQ::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InvalidInput("point must be 'x,y': '" + std::string(text) + "'");
  return PointQ(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
}

bool contains(const CurveW& c, const PointQ& pt) {
  if (pt.is_infinity()) return true;
  return pt.y() * pt.y() == c.rhs(pt.x());
}

PointQ on_curve(const CurveW& c, Rational x, Rational y) {
  PointQ p(std::move(x), std::move(y));
  if (!contains(c, p)) {
    Rational residual = p.y() * p.y() - c.rhs(p.x());
    throw InvalidInput("point (" + p.str() + ") is not on " + c.str() +
                       "; residual y^2 - f(x) = " + residual.str());
  }
  return p;
}

PointQ negate(const PointQ& pt) {
  if (pt.is_infinity()) return pt;
  return PointQ(pt.x(), -pt.y());
}

PointQ dbl(const CurveW& c, const PointQ& p) {
  if (p.is_infinity() || p.y().is_zero()) return PointQ::infinity();
  const Rational& x = p.x();
  Rational slope = (Rational(3) * x * x + Rational(2) * c.a2() * x + c.a4()) / (Rational(2) * p.y());
  Rational x3 = slope * slope - c.a2() - x - x;
  Rational y3 = slope * (x - x3) - p.y();
  return PointQ(std::move(x3), std::move(y3));
}

PointQ add(const CurveW& c, const PointQ& p, const PointQ& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return dbl(c, p);
    return PointQ::infinity();  // p == -q
  }
  Rational slope = (q.y() - p.y()) / (q.x() - p.x());
  Rational x3 = slope * slope - c.a2() - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return PointQ(std::move(x3), std::move(y3));
}

PointQ mul(const CurveW& c, const BigInt& n, const PointQ& p) {
  if (sgn(n) < 0) return negate(mul(c, BigInt(-n), p));
  PointQ acc = PointQ::infinity();
  const std::size_t bits = sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = dbl(c, acc);
    if (mpz_tstbit(n.get_mpz_t(), i) != 0) acc = add(c, acc, p);
  }
  return acc;
}

PointQ XShift::forward(const PointQ& p) const {
  if (p.is_infinity()) return p;
  return PointQ(p.x() - s, p.y());
}

PointQ XShift::backward(const PointQ& p) const {
  if (p.is_infinity()) return p;
  return PointQ(p.x() + s, p.y());
}

XShift shift_x(const CurveW& c, const Rational& s) {
  // x = z + s
  Rational a2 = c.a2() + Rational(3) * s;
  Rational a4 = Rational(3) * s * s + Rational(2) * c.a2() * s + c.a4();
  Rational a6 = c.rhs(s);
  return XShift{CurveW(std::move(a2), std::move(a4), std::move(a6)), s};
}

std::vector<PointQ> naive_point_search(const CurveW& c, long height_bound) {
  if (height_bound < 1) throw InvalidInput("height bound must be >= 1");
  std::vector<PointQ> found;
  BigInt bound(height_bound);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), bound.get_mpz_t());
  const long max_d = root.get_si();
  for (long d = 1; d <= max_d; ++d) {
    const BigInt d2 = BigInt(d) * d;
    for (long n = -height_bound; n <= height_bound; ++n) {
      if (std::gcd(n < 0 ? -n : n, d) != 1) continue;
      Rational x(BigInt(n), d2);
      auto y = exact_sqrt(c.rhs(x));
      if (!y) continue;
      if (y->is_zero()) {
        found.emplace_back(std::move(x), Rational(0));
      } else {
        found.emplace_back(x, *y);
        found.emplace_back(std::move(x), -*y);
      }
    }
  }
  return found;
}

std::vector<PointQ> parse_points(std::string_view text, const CurveW& c) {
  std::vector<PointQ> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    try {
      PointQ p = PointQ::parse(line);
      out.push_back(on_curve(c, p.x(), p.y()));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<PointQ> load_points(const std::filesystem::path& path, const CurveW& c) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open generator file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str(), c);
}

}  // namespace quartic
