#include "multipole/bounds.hpp"

#include <cmath>
#include <sstream>

namespace multipole::bounds {

namespace mp = boost::multiprecision;

namespace {

Integer ipow(long long base, int e) { return mp::pow(Integer(base), e); }

int sgn(const Rational& r) { return r.sign(); }

Rational rpow(long long base, int e) {
  if (e >= 0) return Rational(ipow(base, e));
  return Rational(Integer(1), ipow(base, -e));
}

void require_k(int k) {
  if (k < 3) throw Error("degree must be at least 3");
}

void require_g(int g) {
  if (g < 3) throw Error("girth must be at least 3");
}

bool perfect_square(const Integer& n, Integer* root = nullptr) {
  if (n < 0) return false;
  const Integer r = mp::sqrt(n);
  if (root) *root = r;
  return r * r == n;
}

// Sign of a + b*sqrt(d) + c*sqrt(e).
int sign3(const Rational& a, const Rational& b, const Rational& d, const Rational& c, const Rational& e) {
  const int sx = sign(a, b, d);
  const int sy = sgn(e) > 0 ? sgn(c) : 0;
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const int t = sign(a * a + b * b * d - c * c * e, 2 * a * b, d);
  return t > 0 ? sx : t < 0 ? sy : 0;
}

long long to_ll(long double v) {
  if (!(std::fabs(v) < 9e18L)) throw Error("value out of range for decimal display");
  return static_cast<long long>(std::floor(v));
}

}  // namespace

Integer moore_bound(int k, int g) {
  if (k < 2) throw Error("degree must be at least 2");
  require_g(g);
  Integer power = 1, sum = 0;
  if (g % 2 == 1) {
    const int d = (g - 1) / 2;
    for (int i = 0; i < d; ++i, power *= k - 1) sum += power;
    return 1 + k * sum;
  }
  const int d = (g - 2) / 2;
  for (int i = 0; i <= d; ++i, power *= k - 1) sum += power;
  return 2 * sum;
}

Integer moore_bound_closed(int k, int g) {
  require_k(k);
  require_g(g);
  if (g % 2 == 1) return (k * ipow(k - 1, (g - 1) / 2) - 2) / (k - 2);
  return (2 * ipow(k - 1, g / 2) - 2) / (k - 2);
}

Rational moore_like_lower_bound(const Multipole& m, const Anchor& x, int k, int g) {
  require_k(k);
  require_g(g);
  const bool vertex = std::holds_alternative<int>(x);
  if (vertex != (g % 2 == 1)) throw Error(g % 2 ? "odd girth needs a vertex anchor" : "even girth needs a link anchor");
  const int d = (g - 1) / 2;
  Rational sum = 0;
  for (const Distance& t : semiedge_distances(m, x))
    if (t.is_finite()) sum += rpow(k - 1, d - t.value()) - 1;
  return Rational(moore_bound(k, g)) - sum / (k - 2);
}

long double Surd::approx() const {
  const long double root = std::sqrt(static_cast<long double>(d));
  return static_cast<long double>(p) + static_cast<long double>(q) * root;
}

bool Surd::is_rational() const {
  if (q == 0 || d == 0) return true;
  return perfect_square(mp::numerator(d)) && perfect_square(mp::denominator(d));
}

Rational Surd::rational() const {
  if (q == 0 || d == 0) return p;
  Integer rn, rd;
  if (!perfect_square(mp::numerator(d), &rn) || !perfect_square(mp::denominator(d), &rd))
    throw Error("surd is irrational");
  return p + q * Rational(rn, rd);
}

int sign(const Rational& a, const Rational& b, const Rational& d) {
  if (d < 0) throw Error("negative radicand");
  if (b == 0 || d == 0) return sgn(a);
  const int sb = sgn(b), sa = sgn(a);
  if (sa == 0 || sa == sb) return sb;
  return sa * sgn(a * a - b * b * d);
}

int sign(const Surd& x) { return sign(x.p, x.q, x.d); }

int compare(const Surd& x, const Surd& y) {
  if (x.d == y.d) return sign(x.p - y.p, x.q - y.q, x.d);
  return sign3(x.p - y.p, x.q, x.d, -y.q, y.d);
}

Integer floor(const Surd& x) {
  Integer m = to_ll(std::floor(x.approx()));
  while (sign(x.p - Rational(m + 1), x.q, x.d) >= 0) ++m;
  while (sign(x.p - Rational(m), x.q, x.d) < 0) --m;
  return m;
}

std::string decimal(const Surd& x, int digits) {
  if (digits < 0) throw Error("negative digit count");
  const Integer scale = ipow(10, digits);
  const Integer m = floor(Surd(x.p * scale + Rational(1, 2), x.q * scale, x.d));
  Integer a = mp::abs(m);
  std::string body = Integer(a / scale).str();
  if (digits > 0) {
    std::string frac = Integer(a % scale).str();
    body += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return (m < 0 ? "-" : "") + body;
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string exact_string(const Surd& x) {
  if (x.is_rational()) return to_string(x.rational());
  // sqrt(n/m) = sqrt(n*m)/m, then pull square factors out of n*m.
  Integer radicand = mp::numerator(x.d) * mp::denominator(x.d);
  Integer factor = 1;
  for (Integer p = 2; p * p <= radicand && p < 100000; ++p)
    while (radicand % (p * p) == 0) {
      radicand /= p * p;
      factor *= p;
    }
  const Rational coeff = x.q * Rational(factor, mp::denominator(x.d));
  const Integer w = mp::lcm(mp::denominator(x.p), mp::denominator(coeff));
  const Integer u = mp::numerator(Rational(x.p * w)), f = mp::numerator(Rational(coeff * w));
  std::ostringstream out;
  const Integer af = mp::abs(f);
  const std::string root = (af == 1 ? std::string() : af.str() + "*") + "sqrt(" + radicand.str() + ")";
  if (u == 0)
    out << (f < 0 ? "-" : "") << root;
  else
    out << u << (f < 0 ? " - " : " + ") << root;
  if (w == 1) return out.str();
  return "(" + out.str() + ")/" + w.str();
}

Surd QuadraticBound::b1() const {
  if (!has_real_roots) return Surd(vertex);
  return Surd(vertex, Rational(-1) / (2 * a), discriminant);
}

Surd QuadraticBound::b2() const {
  if (!has_real_roots) return Surd(vertex);
  return Surd(vertex, Rational(1) / (2 * a), discriminant);
}

QuadraticBound quadratic(int k, int g, int s) {
  require_k(k);
  require_g(g);
  if (s < 0) throw Error("negative semiedge count");
  QuadraticBound qb;
  qb.k = k;
  qb.g = g;
  qb.s = s;
  qb.moore = moore_bound(k, g);
  const Rational M(qb.moore);
  const Rational k2 = Rational((k - 2) * (k - 2));
  if (g % 2 == 1) {
    const int d = (g - 1) / 2;
    qb.a = 1;
    qb.b = -M;
    qb.c = Rational(s * (d * k - 2 * d - 1) * ipow(k - 1, d) + s) / k2;
  } else {
    const int d = (g - 2) / 2;
    qb.a = k;
    qb.b = -(k * M + s);
    qb.c = M * s + 2 * s * Rational((d * k - 2 * d - 1) * ipow(k - 1, d + 1) + k - 1) / k2;
  }
  qb.vertex = -qb.b / (2 * qb.a);
  qb.discriminant = qb.b * qb.b - 4 * qb.a * qb.c;
  qb.has_real_roots = qb.discriminant >= 0;
  return qb;
}

const char* to_string(Position p) {
  switch (p) {
    case Position::BelowB1: return "below-b1";
    case Position::BetweenRoots: return "between-roots";
    case Position::AtLeastB2: return "at-least-b2";
  }
  return "?";
}

Position order_position(const QuadraticBound& qb, const Rational& n) {
  if (qb.at(n) < 0) return Position::BetweenRoots;
  return n >= qb.vertex ? Position::AtLeastB2 : Position::BelowB1;
}

RootApprox b1_b2_approx(int k, int g, int s, int digits) {
  const auto qb = quadratic(k, g, s);
  return {decimal(qb.b1(), digits), decimal(qb.b2(), digits), !qb.has_real_roots};
}

std::string table_cell(const Surd& x, bool parenthesized) {
  std::string body;
  if (x.is_rational() && mp::denominator(x.rational()) == 1)
    body = mp::numerator(x.rational()).str();
  else
    body = decimal(x, 1);
  return parenthesized ? "(" + body + ")" : body;
}

bool simple_bounds_hold(int k, int g) {
  const auto qb = quadratic(k, g, (k - 2) * g);
  return qb.at(Rational(g * g, 2)) < 0;
}

bool simple_bounds_regime(int k, int g) {
  if (k < 3 || g < 3) return false;
  if (k == 3) return g >= 11;
  if (k == 4) return g >= 7;
  if (k <= 6) return g >= 5;
  if (k <= 10) return g != 4;
  return true;
}

Surd theorem5_threshold(int k, int g) {
  const Surd b2 = quadratic(k, g, (k - 2) * g).b2();
  return Surd(2 * b2.p, 2 * b2.q, b2.d);
}

bool below_threshold(const Surd& threshold, long long n) { return compare(threshold, Rational(n)) > 0; }

}  // namespace multipole::bounds
