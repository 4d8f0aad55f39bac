// Acceptance run: one PASS, FAIL or SKIP line per criterion. Exit status 1 on any FAIL.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multipole/bounds.hpp"
#include "multipole/constructions.hpp"
#include "multipole/core.hpp"
#include "multipole/cyclic.hpp"
#include "multipole/io.hpp"
#include "multipole/search.hpp"
#include "multipole/tables.hpp"

using namespace multipole;

namespace {

// Pinned limits. Integer quantities are compared exactly; Table 3 and 4 cells are compared
// as displayed strings.
constexpr double table1_seconds = 60;
constexpr double table2_seconds = 600;
constexpr double cage_seconds = 5;
constexpr int gap_lo = 25, gap_hi = 43, gap_default_hi = 29;
constexpr int table1_rows_default = 8, table2_rows_default = 6;

std::string data(const std::string& rel) { return std::string(MULTIPOLE_DATA_DIR) + "/" + rel; }

GraphInstance graph(const std::string& name) { return io::read_graph_file(data("graphs/" + name + ".g6")).front(); }

bool long_gate() {
  const char* env = std::getenv("MULTIPOLE_LONG");
  return env && std::string(env) == "1";
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int failures = 0;

void report(const std::string& id, const char* verdict, const std::string& detail) {
  std::cout << "criterion " << id << ": " << verdict << "  " << detail << std::endl;
}

void verdict(const std::string& id, bool ok, const std::string& detail) {
  report(id, ok ? "PASS" : "FAIL", detail);
  if (!ok) ++failures;
}

// Multipoles emitted at the minimum order of each table cell, for the property checks.
struct Emitted {
  int k, g, s;
  Multipole m;
};
std::vector<Emitted> emitted;

void collect(int k, int g, int s, int n) {
  search::SearchParams p;
  p.k = k;
  p.g = g;
  p.s = s;
  search::generate(p, n, search::Backend::Serial, [&](const Multipole& m) { emitted.push_back({k, g, s, m}); });
}

// Computed table vs golden, and harvest the emitted classes.
void check_search_table(const std::string& id, int k, const tables::Grid& got, const std::string& golden,
                        double secs, double limit) {
  const auto expected = tables::read_csv(data(golden));
  const auto diffs = tables::diff(expected, got);
  std::ostringstream d;
  int cells = 0;
  for (const auto& row : got.rows)
    for (std::size_t c = 1; c < row.size(); ++c)
      if (!row[c].empty()) {
        ++cells;
        const int g = std::stoi(row[0]);
        const int s = std::stoi(got.header[c].substr(2));
        if (row[c] != "?") collect(k, g, s, std::stoi(row[c]));
      }
  d << cells << " cells, rows g=3.." << got.rows.back()[0] << ", " << diffs.size() << " mismatches, " << secs
    << " s (limit " << limit << " s)";
  for (const auto& x : diffs) d << "; g=" << x.row << " " << x.column << " expected " << x.expected << " got " << x.actual;
  verdict(id, diffs.empty() && got.rows.size() == expected.rows.size() && secs <= limit, d.str());
}

void criterion1() {
  const auto t = std::chrono::steady_clock::now();
  const auto grid = tables::table1(table1_rows_default);
  check_search_table("1", 3, grid, "golden/table1.csv", seconds_since(t), table1_seconds);
}

void criterion2() {
  const auto t = std::chrono::steady_clock::now();
  const auto grid = tables::table2(table2_rows_default);
  check_search_table("2", 4, grid, "golden/table2.csv", seconds_since(t), table2_seconds);
}

void criterion3() {
  const auto t3 = tables::table3(), t4 = tables::table4();
  const auto d3 = tables::diff(tables::read_csv(data("golden/table3.csv")), t3);
  const auto d4 = tables::diff(tables::read_csv(data("golden/table4.csv")), t4);
  const auto published = tables::diff(tables::read_csv(data("golden/table4_published.csv")), t4);
  auto cell = [&](const tables::Grid& grid, int g, int k) { return grid.rows[g - 3][k - 2]; };
  const bool spots = cell(t3, 4, 3) == "3.3" && cell(t3, 7, 3) == "9.6" && cell(t3, 6, 3) == "(8)";
  const auto threshold = bounds::theorem5_threshold(3, 6);
  const bool sixteen = threshold.is_rational() && threshold.rational() == 16;
  std::ostringstream d;
  d << "Table 3: " << d3.size() << " of 98 cells differ; b2 vs independent values: " << d4.size()
    << " differ; 2*b2(3,6,6) = " << bounds::exact_string(threshold) << "; printed Table 4 text differs in "
    << published.size() << " cells (reported, e.g. g=" << published.front().row << " " << published.front().column
    << ": printed " << published.front().expected << ", computed " << published.front().actual << ")";
  verdict("3", d3.empty() && d4.empty() && spots && sixteen, d.str());
}

void criterion4() {
  const auto qb = bounds::quadratic(3, 11, 17);
  const bool roots = qb.b1().is_rational() && qb.b2().is_rational() && qb.b1().rational() == 43 &&
                     qb.b2().rational() == 51;
  search::SearchParams p;
  p.k = 3;
  p.g = 11;
  p.s = 17;
  p.require_nontrivial = false;
  const int hi = long_gate() ? gap_hi : gap_default_hi;
  long long found = 0;
  const auto t = std::chrono::steady_clock::now();
  for (int n : search::candidate_orders(p, gap_lo, hi))
    found += search::generate(p, n, search::Backend::Serial, [](const Multipole&) {});
  std::ostringstream d;
  d << "roots " << bounds::exact_string(qb.b1()) << ", " << bounds::exact_string(qb.b2()) << "; orders " << gap_lo
    << ".." << hi << " hold " << found << " (3,11,17)-multipoles (" << seconds_since(t) << " s)";
  verdict("4", roots && found == 0, d.str());
  if (!long_gate())
    report("4-long", "SKIP", "orders " + std::to_string(gap_default_hi + 2) + ".." + std::to_string(gap_hi) +
                                 " need MULTIPOLE_LONG=1 (about a day of CPU on one core)");
}

void criterion5() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, k, g] : std::vector<std::tuple<std::string, int, int>>{
           {"petersen", 3, 5}, {"heawood", 3, 6}, {"mcgee", 3, 7}}) {
    const auto inst = graph(name);
    const auto t = std::chrono::steady_clock::now();
    cyclic::Options opt;
    opt.all_min_cuts = true;
    const auto r = cyclic::cyclic_edge_connectivity(inst.graph, opt);
    const double secs = seconds_since(t);
    const auto oracle = cyclic::partition_oracle(inst.graph);
    bool cycle_side = !r.truncated;
    for (const auto& c : *r.all_min_cuts) cycle_side = cycle_side && (c.side_a_is_g_cycle || c.side_b_is_g_cycle);
    const bool here = r.value == (k - 2) * g && oracle == r.value && cycle_side && secs <= cage_seconds;
    ok = ok && here;
    d << name << " " << (r.value ? std::to_string(*r.value) : "none") << " (oracle "
      << (oracle ? std::to_string(*oracle) : "none") << ", " << r.all_min_cuts->size() << " min cuts"
      << (cycle_side ? " all with a g-cycle side" : " NOT all with a g-cycle side") << ", " << secs << " s); ";
  }
  verdict("5", ok, d.str());
}

void criterion6() {
  long long tuples = 0, mismatches = 0, classes = 0;
  for (int k = 3; k <= 4; ++k)
    for (int g = 3; g <= 5; ++g)
      for (int s = 0; s <= std::min(6, (k - 2) * g); ++s)
        for (int n = 1; n <= 8; ++n) {
          search::SearchParams p;
          p.k = k;
          p.g = g;
          p.s = s;
          const long long a = static_cast<long long>(search::enumerate_all(p, n).size());
          const long long b = search::brute_force_oracle(k, g, s, n);
          ++tuples;
          classes += a;
          if (a != b) ++mismatches;
        }
  verdict("6", mismatches == 0,
          std::to_string(tuples) + " tuples, " + std::to_string(classes) + " classes, " + std::to_string(mismatches) +
              " mismatches");
}

void criterion7() {
  long long checked = 0, violations = 0;
  for (const auto& e : emitted) {
    if (e.g < 5 || e.s > (e.k - 2) * e.g) continue;
    ++checked;
    const auto qb = bounds::quadratic(e.k, e.g, e.s);
    if (bounds::order_position(qb, e.m.order()) != bounds::Position::AtLeastB2 ||
        2 * e.m.order() < bounds::moore_bound(e.k, e.g))
      ++violations;
  }
  verdict("7", checked > 0 && violations == 0,
          std::to_string(checked) + " emitted multipoles with g >= 5, " + std::to_string(violations) + " violations");
}

void criterion8() {
  long long anchors = 0, violations = 0;
  for (const auto& e : emitted) {
    const auto& m = e.m;
    for (int v = 0; v < m.order(); ++v) {
      if (e.g % 2 == 1) {
        ++anchors;
        if (bounds::moore_like_lower_bound(m, v, e.k, e.g) > m.order()) ++violations;
      } else {
        for (Row r = m.links.row(v); r; r &= r - 1) {
          if (lowest(r) < v) continue;
          ++anchors;
          if (bounds::moore_like_lower_bound(m, Link{v, lowest(r)}, e.k, e.g) > m.order()) ++violations;
        }
      }
    }
  }
  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_link(i, (i + 1) % 5);
  const Multipole pent = Multipole::completed(c5, 3);
  bool tight = true;
  for (int v = 0; v < 5; ++v) tight = tight && bounds::moore_like_lower_bound(pent, v, 3, 5) == 5;
  verdict("8", violations == 0 && tight && anchors > 0,
          std::to_string(emitted.size()) + " multipoles, " + std::to_string(anchors) + " anchors, " +
              std::to_string(violations) + " violations; C5 with semiedges: bound = order = 5 at every vertex" +
              (tight ? "" : " FAILED"));
}

void criterion9() {
  long long pairs = 0, bad = 0;
  for (int k = 3; k <= 9; ++k)
    for (int g = 3; g <= 12; ++g)
      for (int s = 1; s <= (k - 2) * g; ++s) {
        const auto qs = bounds::quadratic(k, g, s);
        if (qs.discriminant <= 0) continue;
        for (int t = 0; t < s; ++t) {
          const auto qt = bounds::quadratic(k, g, t);
          if (qt.discriminant <= 0) continue;
          ++pairs;
          if (bounds::compare(qt.b1(), qs.b1()) >= 0 || bounds::compare(qt.b2(), qs.b2()) <= 0) ++bad;
        }
      }
  long long regime_mismatch = 0;
  for (int k = 3; k <= 30; ++k)
    for (int g = 3; g <= 30; ++g)
      if (bounds::simple_bounds_hold(k, g) != bounds::simple_bounds_regime(k, g)) ++regime_mismatch;
  const bool excluded = !bounds::simple_bounds_hold(3, 9) && !bounds::simple_bounds_hold(4, 6);
  verdict("9", pairs > 0 && bad == 0 && regime_mismatch == 0 && excluded,
          std::to_string(pairs) + " root pairs, " + std::to_string(bad) + " out of order; simple estimates: " +
              std::to_string(regime_mismatch) + " of 784 (k,g) disagree with the listed regimes; (3,9), (4,6) " +
              (excluded ? "excluded" : "NOT excluded"));
}

void criterion10() {
  std::ostringstream d;
  const auto mcgee = constructions::construct_multipole(graph("mcgee"), 3, 7, 7);
  const bool a = mcgee.output.order() == 17 && mcgee.verdict.is_nontrivial() && is_kgs_multipole(mcgee.output, 3, 7, 7);
  const auto rob = constructions::construct_multipole(graph("robertson"), 4, 5, 10);
  const bool b = rob.output.order() == 14 && rob.verdict.is_nontrivial();
  search::SearchParams p;
  p.k = 4;
  p.g = 5;
  p.s = 10;
  const auto best = search::find_min_nontrivial(p).n_value;
  const bool c = best == 10;
  int instances = 0, disagree = 0;
  for (int k = 3; k <= 7; ++k)
    for (int g = 3; g <= 4; ++g)
      for (int s = 1; s <= (k - 2) * g; ++s) {
        if (!constructions::exact_value_applies(k, g, s)) continue;
        search::SearchParams q;
        q.k = k;
        q.g = g;
        q.s = s;
        ++instances;
        if (search::find_min_nontrivial(q).n_value != constructions::exact_value_g34(k, g, s)) ++disagree;
      }
  d << "McGee minus a heptagon: order " << mcgee.output.order() << (a ? " nontrivial" : " INVALID")
    << "; Robertson (4,5,10): order " << rob.output.order() << ", search n(4,5,10) = "
    << (best ? std::to_string(*best) : "none") << "; exact values vs search: " << instances << " instances, "
    << disagree << " disagree";
  verdict("10", a && b && c && instances > 0 && disagree == 0, d.str());
}

void bound_side_57() {
  // A (57,5)-Moore graph would have order M(57,5) = 3250, below 2*b2(57,5,275), so the
  // cage theorem applies to it with value (k-2)g = 275.
  const auto t = bounds::theorem5_threshold(57, 5);
  const auto moore = bounds::moore_bound(57, 5);
  const bool ok = moore == 3250 && bounds::below_threshold(t, 3250) && !bounds::below_threshold(t, 6500) &&
                  (57 - 2) * 5 == 275;
  verdict("57-5", ok,
          "M(57,5) = " + moore.str() + ", threshold 2*b2 = " + bounds::exact_string(t) + " ~ " + bounds::decimal(t, 2) +
              ", order below threshold: " + (bounds::below_threshold(t, 3250) ? "yes" : "no") +
              ", (k-2)g = " + std::to_string(55 * 5));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                 criterion6, criterion7, criterion8, criterion9, criterion10,
                                                 bound_side_57};
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::cout << "criterion aborted: FAIL  " << e.what() << std::endl;
      ++failures;
    }
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
  return failures ? 1 : 0;
}
