#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "multipole/bounds.hpp"
#include "support.hpp"

using namespace multipole;
using namespace multipole::bounds;
using multipole::testing::cycle_multipole;
using multipole::testing::data_path;
using multipole::testing::fixture;

namespace {

Rational ratpow(long long base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Constant term rebuilt from the unsimplified layer sums of the averaging argument.
Rational constant_from_layer_sums(int k, int g, int s) {
  Rational layer = 0;
  if (g % 2 == 1) {
    const int d = (g - 1) / 2;
    for (int h = 0; h < d; ++h) layer += ratpow(k - 1, h) * (ratpow(k - 1, d - h) - 1);
    return s * layer / (k - 2);
  }
  const int d = (g - 2) / 2;
  for (int h = 0; h < d; ++h) layer += ratpow(k - 1, h + 1) * (ratpow(k - 1, d - h) - 1);
  return Rational(moore_bound(k, g)) * s + 2 * s * layer / (k - 2);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("Moore bound") {
  CHECK(moore_bound(3, 5) == 10);
  CHECK(moore_bound(3, 6) == 14);
  CHECK(moore_bound(57, 5) == 3250);
  CHECK(moore_bound(7, 5) == 50);
  for (int g = 3; g <= 12; ++g) CHECK(moore_bound(2, g) == g);
  for (int k = 3; k <= 12; ++k)
    for (int g = 3; g <= 16; ++g) CHECK(moore_bound(k, g) == moore_bound_closed(k, g));
  CHECK_THROWS_AS(moore_bound_closed(2, 5), Error);
  CHECK_THROWS_AS(moore_bound(1, 5), Error);
}

TEST_CASE("Moore bound matches a Moore tree grown breadth first") {
  for (int k = 3; k <= 6; ++k)
    for (int g = 3; g <= 9; ++g) {
      // Count the vertices of the tree within radius (g-1)/2 of a vertex or a link.
      long long count = g % 2 ? 1 : 2, layer = g % 2 ? k : 2 * (k - 1);
      for (int depth = 1; depth <= (g - 1) / 2; ++depth, layer *= k - 1) count += layer;
      CHECK(moore_bound(k, g) == count);
    }
}

TEST_CASE("Moore-like bound around a vertex or a link") {
  const auto c5 = cycle_multipole(5, 3, 1);
  for (int v = 0; v < 5; ++v) CHECK(moore_like_lower_bound(c5, v, 3, 5) == 5);
  const auto petersen = Multipole::completed(fixture("petersen"), 3);
  CHECK(moore_like_lower_bound(petersen, 0, 3, 5) == 10);
  const auto heawood = Multipole::completed(fixture("heawood"), 3);
  CHECK(moore_like_lower_bound(heawood, Link{0, 1}, 3, 6) == 14);
  CHECK_THROWS_AS(moore_like_lower_bound(c5, Link{0, 1}, 3, 5), Error);
  CHECK_THROWS_AS(moore_like_lower_bound(heawood, 0, 3, 6), Error);

  // A far semiedge changes the bound by a positive fraction, never more than 1/(k-2).
  const Multipole path(SimpleGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
                       {2, 1, 1, 1, 1, 1, 2}, 3);
  const Rational base = moore_like_lower_bound(path, 0, 3, 5);
  Rational expected = 10;
  for (const auto& t : semiedge_distances(path, 0)) {
    const int e = 2 - t.value();
    expected -= (e >= 0 ? ratpow(2, e) : Rational(1) / ratpow(2, -e)) - 1;
  }
  CHECK(base == expected);
  // Semiedges within distance d account for 10 - 7; the five beyond add a little each.
  const Rational far = base - 3;
  CHECK(far > 0);
  CHECK(far < 5);
  CHECK(far > Rational(5, 2));
}

TEST_CASE("quadratic coefficients") {
  auto q = quadratic(3, 5, 5);
  CHECK(q.a == 1);
  CHECK(q.b == -10);
  CHECK(q.c == 25);
  CHECK(q.discriminant == 0);
  CHECK(q.b1().rational() == 5);
  CHECK(q.b2().rational() == 5);

  q = quadratic(3, 6, 6);
  CHECK(q.a == 3);
  CHECK(q.b == -48);
  CHECK(q.c == 204);
  CHECK(q.discriminant < 0);
  CHECK_FALSE(q.has_real_roots);
  CHECK(q.vertex == 8);
  CHECK(q.b1().rational() == 8);

  q = quadratic(3, 11, 17);
  CHECK(q.a == 1);
  CHECK(q.b == -94);
  CHECK(q.c == 2193);
  CHECK(q.b1().rational() == 43);
  CHECK(q.b2().rational() == 51);

  q = quadratic(3, 4, 4);
  CHECK(q.b1().rational() == Rational(10, 3));
  CHECK(q.b2().rational() == 4);

  for (int k = 3; k <= 9; ++k)
    for (int g = 3; g <= 16; ++g)
      for (int s : {0, 1, k, (k - 2) * g}) {
        const auto qb = quadratic(k, g, s);
        CHECK(qb.c == constant_from_layer_sums(k, g, s));
        CHECK(qb.vertex == -qb.b / (2 * qb.a));
        const Rational half = Rational(moore_bound(k, g)) / 2;
        CHECK(qb.vertex == (g % 2 ? half : half + Rational(s, 2 * k)));
        CHECK(qb.vertex >= half);
        CHECK(compare(qb.b1(), qb.vertex) <= 0);
        CHECK(compare(qb.b2(), qb.vertex) >= 0);
        if (qb.has_real_roots) {
          const long double r = qb.b2().approx();
          const long double val = (static_cast<long double>(qb.a) * r + static_cast<long double>(qb.b)) * r +
                                  static_cast<long double>(qb.c);
          CHECK(std::fabs(static_cast<double>(val)) < 1e-6 * std::fabs(static_cast<double>(qb.c)) + 1e-6);
        }
      }
  CHECK_THROWS_AS(quadratic(2, 5, 0), Error);
}

TEST_CASE("exact surd arithmetic") {
  const Surd r2(0, 1, 2);  // sqrt 2
  CHECK(sign(r2) == 1);
  CHECK(compare(r2, Rational(141, 100)) > 0);
  CHECK(compare(r2, Rational(142, 100)) < 0);
  CHECK(compare(Surd(0, 1, 8), Surd(0, 2, 2)) == 0);
  CHECK(compare(Surd(0, 1, 3), Surd(Rational(1, 3), 1, 2)) < 0);  // 1.7320 vs 1.7475
  CHECK(compare(Surd(0, 1, 3), Surd(Rational(1, 3), 1, 2)) == -compare(Surd(Rational(1, 3), 1, 2), Surd(0, 1, 3)));
  CHECK(floor(Surd(11, -1, 2)) == 9);
  CHECK(decimal(Surd(11, 1, 2), 2) == "12.41");
  CHECK(decimal(Surd(Rational(-1, 4)), 1) == "-0.2");
  CHECK(decimal(Surd(Rational(1, 20)), 1) == "0.1");
  CHECK(exact_string(Surd(11, -1, 2)) == "11 - sqrt(2)");
  CHECK(exact_string(Surd(Rational(7, 3))) == "7/3");
  CHECK(exact_string(quadratic(3, 7, 7).b2()) == "11 + sqrt(2)");

  // Randomized exact sign against long double on well-separated values.
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(-50, 50), rad(0, 40);
  for (int t = 0; t < 2000; ++t) {
    const Surd x(Rational(pick(rng), 7), Rational(pick(rng), 3), rad(rng));
    const Surd y(Rational(pick(rng), 5), Rational(pick(rng), 2), rad(rng));
    const long double diff = x.approx() - y.approx();
    if (std::fabs(static_cast<double>(diff)) > 1e-9) CHECK(compare(x, y) == (diff > 0 ? 1 : -1));
  }
}

TEST_CASE("order position") {
  const auto q = quadratic(3, 11, 17);
  CHECK(q.at(47) == -16);
  CHECK(order_position(q, 47) == Position::BetweenRoots);
  CHECK(order_position(q, 51) == Position::AtLeastB2);
  CHECK(order_position(q, 43) == Position::BelowB1);
  CHECK(order_position(q, 44) == Position::BetweenRoots);
  CHECK(order_position(quadratic(3, 6, 6), 8) == Position::AtLeastB2);
  CHECK(order_position(quadratic(3, 6, 6), 7) == Position::BelowB1);
}

TEST_CASE("root approximations") {
  auto r = b1_b2_approx(3, 4, 4, 1);
  CHECK(r.b1 == "3.3");
  CHECK(r.b2 == "4.0");
  r = b1_b2_approx(3, 7, 7, 1);
  CHECK(r.b1 == "9.6");
  CHECK(b1_b2_approx(3, 7, 7, 2).b2 == "12.41");
  CHECK(b1_b2_approx(3, 6, 6, 1).parenthesized);
  CHECK(table_cell(quadratic(3, 6, 6).b1(), true) == "(8)");
  CHECK(table_cell(quadratic(6, 6, 24).b1(), false) == "13.0");
}

TEST_CASE("published b1 table") {
  const auto rows = read_csv(data_path("golden/table3.csv"));
  REQUIRE(rows.size() == 15);
  int cells = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const int g = std::stoi(rows[i][0]);
    for (int k = 3; k <= 9; ++k) {
      const auto qb = quadratic(k, g, (k - 2) * g);
      CHECK_MESSAGE(table_cell(qb.b1(), !qb.has_real_roots) == rows[i][k - 2], "k=" << k << " g=" << g);
      ++cells;
    }
  }
  CHECK(cells == 98);
}

TEST_CASE("b2 table agrees with an independent high-precision evaluation") {
  const auto rows = read_csv(data_path("golden/table4.csv"));
  REQUIRE(rows.size() == 15);
  for (size_t i = 1; i < rows.size(); ++i) {
    const int g = std::stoi(rows[i][0]);
    for (int k = 3; k <= 9; ++k) {
      const auto qb = quadratic(k, g, (k - 2) * g);
      CHECK_MESSAGE(table_cell(qb.b2(), !qb.has_real_roots) == rows[i][k - 2], "k=" << k << " g=" << g);
    }
  }
  const Surd t = theorem5_threshold(3, 6);
  CHECK(t.is_rational());
  CHECK(t.rational() == 16);
}

TEST_CASE("roots move apart as the number of semiedges decreases") {
  int compared = 0;
  for (int k = 3; k <= 9; ++k)
    for (int g = 3; g <= 12; ++g) {
      const int top = (k - 2) * g;
      for (int s = 1; s <= top; ++s) {
        const auto qs = quadratic(k, g, s);
        if (qs.discriminant <= 0) continue;
        for (int t = 0; t < s; ++t) {
          const auto qt = quadratic(k, g, t);
          if (qt.discriminant <= 0) continue;
          CHECK(compare(qt.b1(), qs.b1()) < 0);
          CHECK(compare(qt.b2(), qs.b2()) > 0);
          ++compared;
        }
      }
    }
  CHECK(compared > 1000);
}

TEST_CASE("simple estimates hold exactly on the claimed regimes") {
  for (int k = 3; k <= 30; ++k)
    for (int g = 3; g <= 30; ++g) CHECK_MESSAGE(simple_bounds_hold(k, g) == simple_bounds_regime(k, g), k << "," << g);
  CHECK(simple_bounds_hold(3, 11));
  CHECK_FALSE(simple_bounds_hold(3, 9));
  CHECK_FALSE(simple_bounds_hold(4, 6));
  CHECK(simple_bounds_hold(7, 3));
  CHECK_FALSE(simple_bounds_hold(8, 4));
  // b1 <= g^2/2 and b2 >= M - g^2/2 wherever the estimate holds.
  for (int k = 3; k <= 12; ++k)
    for (int g = 3; g <= 16; ++g) {
      if (!simple_bounds_hold(k, g)) continue;
      const auto qb = quadratic(k, g, (k - 2) * g);
      CHECK(compare(qb.b1(), Rational(g * g, 2)) <= 0);
      CHECK(compare(qb.b2(), Rational(moore_bound(k, g)) - Rational(g * g, 2)) >= 0);
    }
}

TEST_CASE("cage threshold") {
  CHECK(theorem5_threshold(3, 6).rational() == 16);
  CHECK(theorem5_threshold(3, 5).rational() == 10);
  const Surd mcgee = theorem5_threshold(3, 7);
  CHECK(exact_string(mcgee) == "22 + 2*sqrt(2)");
  CHECK(below_threshold(mcgee, 24));
  CHECK_FALSE(below_threshold(mcgee, 25));
  CHECK_FALSE(below_threshold(theorem5_threshold(3, 5), 10));
  CHECK(below_threshold(theorem5_threshold(3, 6), 14));
  CHECK(below_threshold(theorem5_threshold(4, 5), 19));
  CHECK(below_threshold(theorem5_threshold(3, 8), 30));

  // Hypothetical (57,5) Moore graph: order 3250 against the threshold, cut size 55*5.
  const Surd big = theorem5_threshold(57, 5);
  CHECK(below_threshold(big, 3250) == (compare(big, Rational(3250)) > 0));
  CHECK(below_threshold(big, 3250));
  CHECK((57 - 2) * 5 == 275);
}
