#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "multipole/core.hpp"

namespace multipole::bounds {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Moore bound by the summation form; valid for k >= 2.
Integer moore_bound(int k, int g);
// Closed form (k(k-1)^d - 2)/(k-2) and (2(k-1)^(d+1) - 2)/(k-2); requires k >= 3.
Integer moore_bound_closed(int k, int g);

// Lower bound on the order from the ball of radius floor((g-1)/2) around x. x must be a
// vertex for odd g and a link for even g.
Rational moore_like_lower_bound(const Multipole& m, const Anchor& x, int k, int g);

// The real number p + q*sqrt(d), d >= 0.
struct Surd {
  Rational p, q, d;

  Surd() = default;
  Surd(Rational p_) : p(std::move(p_)) {}
  Surd(Rational p_, Rational q_, Rational d_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {}

  long double approx() const;
  bool is_rational() const;
  // Exact value when is_rational().
  Rational rational() const;
};

// Exact sign of a + b*sqrt(d).
int sign(const Rational& a, const Rational& b, const Rational& d);
int sign(const Surd& x);
// Exact comparison, possibly with different radicands: negative, zero or positive.
int compare(const Surd& x, const Surd& y);
inline int compare(const Surd& x, const Rational& r) { return compare(x, Surd(r)); }

// floor(x)
Integer floor(const Surd& x);
// x rounded half up to the given number of decimals, printed with exactly that many.
std::string decimal(const Surd& x, int digits);
// Exact notation: "p/q" for rationals, "(u - f*sqrt(D))/w" otherwise.
std::string exact_string(const Surd& x);
std::string to_string(const Rational& r);

struct QuadraticBound {
  int k = 0, g = 0, s = 0;
  Integer moore;
  Rational a, b, c;
  Rational vertex;
  Rational discriminant;
  bool has_real_roots = false;

  Rational at(const Rational& n) const { return (a * n + b) * n + c; }
  // Equal to the vertex when there are no real roots.
  Surd b1() const;
  Surd b2() const;
};

QuadraticBound quadratic(int k, int g, int s);

enum class Position { BelowB1, BetweenRoots, AtLeastB2 };
const char* to_string(Position p);

Position order_position(const QuadraticBound& qb, const Rational& n);

struct RootApprox {
  std::string b1, b2;
  bool parenthesized = false;  // no real roots, both equal the vertex
};
RootApprox b1_b2_approx(int k, int g, int s, int digits);

// Table cell: exact integers without decimals, else one decimal; parentheses when the
// polynomial has no real roots.
std::string table_cell(const Surd& x, bool parenthesized);

// P_{k,g,(k-2)g}(g^2/2) < 0.
bool simple_bounds_hold(int k, int g);
// (k,g) pairs for which the simple estimates are claimed.
bool simple_bounds_regime(int k, int g);

// 2*b2(k,g,(k-2)g).
Surd theorem5_threshold(int k, int g);
// Whether an order n lies strictly below the threshold.
bool below_threshold(const Surd& threshold, long long n);

}  // namespace multipole::bounds
