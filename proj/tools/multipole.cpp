#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multipole/bounds.hpp"
#include "multipole/constructions.hpp"
#include "multipole/core.hpp"
#include "multipole/cyclic.hpp"
#include "multipole/io.hpp"
#include "multipole/search.hpp"
#include "multipole/tables.hpp"

using namespace multipole;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, budget = 3 };

struct Common {
  std::string format = "text";
  std::string output;
  int workers = 1;
  bool long_gate = false;
  bool deterministic = false;
  bool verbose = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c, bool with_workers = true) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "md", "json"}));
  cmd->add_option("-o,--output", c.output, "Output file");
  if (with_workers) cmd->add_option("--workers", c.workers, "Worker threads; 1 is serial, 0 lets OpenMP choose");
  cmd->add_flag("--long", c.long_gate, "Lift the desk-scale limits (also MULTIPOLE_LONG=1)");
  cmd->add_flag("--deterministic", c.deterministic, "Omit timings so identical runs print identical bytes");
  cmd->add_flag("-v,--verbose", c.verbose, "Extra diagnostics on stderr");
}

bool long_gate(const Common& c) {
  const char* env = std::getenv("MULTIPOLE_LONG");
  return c.long_gate || (env && std::string(env) == "1");
}

std::string approx(const bounds::Surd& x, int digits) { return bounds::decimal(x, digits); }

std::string fmt_time(const Common& c, double secs) {
  if (c.deterministic) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << secs;
  return s.str();
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.format == "text") {
    std::cout << text;
    return;
  }
  io::write_text_file(c.output, text);
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : kv) out += k + "," + v + "\n";
  return out;
}

std::string key_value_md(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = "| key | value |\n|---|---|\n";
  for (const auto& [k, v] : kv) out += "| " + k + " | " + v + " |\n";
  return out;
}

std::string key_value_text(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

std::string render_grid(const tables::Grid& g, const std::string& format, const std::string& name) {
  if (format == "md") return tables::to_markdown(g);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : g.rows) rows.push_back(r);
    return json{{"command", "tables"}, {"table", name}, {"header", g.header}, {"rows", rows}}.dump(2) + "\n";
  }
  return tables::to_csv(g);
}

// bounds ---------------------------------------------------------------------

struct BoundsArgs {
  std::vector<int> kgs;
  bool all_s = false;
  int table = 0;
  int digits = 2;
};

std::vector<std::pair<std::string, std::string>> bound_fields(int k, int g, int s, int digits) {
  const auto qb = bounds::quadratic(k, g, s);
  const auto t5 = bounds::theorem5_threshold(k, g);
  std::vector<std::pair<std::string, std::string>> kv{
      {"k", std::to_string(k)},
      {"g", std::to_string(g)},
      {"s", std::to_string(s)},
      {"moore_bound", qb.moore.str()},
      {"a", bounds::to_string(qb.a)},
      {"b", bounds::to_string(qb.b)},
      {"c", bounds::to_string(qb.c)},
      {"vertex", bounds::to_string(qb.vertex)},
      {"discriminant", bounds::to_string(qb.discriminant)},
      {"real_roots", qb.has_real_roots ? "true" : "false"},
      {"b1", bounds::exact_string(qb.b1())},
      {"b1_approx", approx(qb.b1(), digits)},
      {"b2", bounds::exact_string(qb.b2())},
      {"b2_approx", approx(qb.b2(), digits)},
      {"simple_bounds_hold", bounds::simple_bounds_hold(k, g) ? "true" : "false"},
      {"theorem5_threshold", bounds::exact_string(t5)},
      {"theorem5_threshold_approx", approx(t5, digits)},
  };
  return kv;
}

int run_bounds(const BoundsArgs& a, const Common& c) {
  if (a.table) {
    if (a.table != 3 && a.table != 4) throw UsageError("--table takes 3 or 4");
    emit(c, render_grid(a.table == 3 ? tables::table3() : tables::table4(), c.format == "text" ? "csv" : c.format,
                        std::to_string(a.table)));
    return ok;
  }
  if (a.kgs.size() != (a.all_s ? 2U : 3U)) throw UsageError(a.all_s ? "expected k g" : "expected k g s");
  const int k = a.kgs[0], g = a.kgs[1];
  if (k < 3) throw UsageError("k must be at least 3");
  if (g < 3) throw UsageError("g must be at least 3");
  if (!a.all_s) {
    const int s = a.kgs[2];
    if (s < 0) throw UsageError("s must be nonnegative");
    const auto kv = bound_fields(k, g, s, a.digits);
    if (c.format == "json") {
      json j{{"command", "bounds"}};
      for (const auto& [key, v] : kv) j[key] = v;
      for (const char* n : {"k", "g", "s"}) j[n] = std::stoi(j[n].get<std::string>());
      j["real_roots"] = j["real_roots"] == "true";
      j["simple_bounds_hold"] = j["simple_bounds_hold"] == "true";
      emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
      emit(c, key_value_csv(kv));
    } else if (c.format == "md") {
      emit(c, key_value_md(kv));
    } else {
      emit(c, key_value_text(kv));
    }
    return ok;
  }
  tables::Grid grid;
  grid.header = {"s", "b1", "b2", "vertex", "real_roots"};
  for (int s = 0; s <= (k - 2) * g; ++s) {
    const auto qb = bounds::quadratic(k, g, s);
    grid.rows.push_back({std::to_string(s), approx(qb.b1(), a.digits), approx(qb.b2(), a.digits),
                         bounds::to_string(qb.vertex), qb.has_real_roots ? "true" : "false"});
  }
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : grid.rows)
      rows.push_back({{"s", std::stoi(r[0])}, {"b1", r[1]}, {"b2", r[2]}, {"vertex", r[3]}, {"real_roots", r[4] == "true"}});
    emit(c, json{{"command", "bounds-all-s"}, {"k", k}, {"g", g}, {"rows", rows}}.dump(2) + "\n");
  } else {
    emit(c, c.format == "md" ? tables::to_markdown(grid) : tables::to_csv(grid));
  }
  return ok;
}

// search ---------------------------------------------------------------------

struct SearchArgs {
  int k = 0, g = 0, s = 0;
  std::optional<int> max_order, min_order;
  std::optional<long long> node_budget;
  bool all_multipoles = false;
  bool allow_isolated = false;
  std::string witness;
};

constexpr long long desk_budget = 50'000'000;

int run_search(const SearchArgs& a, const Common& c) {
  search::SearchParams p;
  p.k = a.k;
  p.g = a.g;
  p.s = a.s;
  p.max_order = a.max_order;
  p.min_order = a.min_order;
  p.workers = c.workers;
  p.require_nontrivial = !a.all_multipoles;
  p.assume_min_inner_degree_2 = !a.allow_isolated;
  if (a.node_budget)
    p.node_budget = a.node_budget;
  else if (!long_gate(c))
    p.node_budget = desk_budget;
  if (p.k < 3 || p.g < 3 || p.s < 0) throw UsageError("need k >= 3, g >= 3, s >= 0");
  if (p.require_nontrivial && p.s > (p.k - 2) * p.g)
    throw UsageError("s exceeds (k-2)g; pass --all-multipoles to search without the triviality filter");

  const auto r = search::find_min_nontrivial(p);
  std::string witness_file = "-";
  if (r.witness) {
    witness_file = a.witness.empty() ? "witness_" + std::to_string(p.k) + "_" + std::to_string(p.g) + "_" +
                                           std::to_string(p.s) + ".mpole"
                                     : a.witness;
    io::write_text_file(witness_file, io::serialize_mpole(*r.witness));
  }
  const std::string value = r.n_value ? std::to_string(*r.n_value) : "none";
  if (c.format == "json") {
    json counts = json::object();
    for (const auto& [n, count] : r.counted_canonical) counts[std::to_string(n)] = count;
    json j{{"command", "search"},
           {"k", p.k},
           {"g", p.g},
           {"s", p.s},
           {"n_value", r.n_value ? json(*r.n_value) : json(nullptr)},
           {"witness", r.witness ? json(witness_file) : json(nullptr)},
           {"explored", r.nodes_explored},
           {"time", c.deterministic ? json(nullptr) : json(r.wall_time)},
           {"last_order", r.last_order},
           {"counted_canonical", counts},
           {"budget_exceeded", r.budget_exceeded}};
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    std::string out = "order,classes\n";
    for (const auto& [n, count] : r.counted_canonical) out += std::to_string(n) + "," + std::to_string(count) + "\n";
    emit(c, out);
  } else {
    std::string line = "n(" + std::to_string(p.k) + "," + std::to_string(p.g) + "," + std::to_string(p.s) +
                       ") = " + value + " witness=" + witness_file + " explored=" + std::to_string(r.nodes_explored) +
                       " time=" + fmt_time(c, r.wall_time) + "\n";
    emit(c, line);
  }
  if (c.verbose)
    for (const auto& [n, count] : r.counted_canonical) std::cerr << "order " << n << ": " << count << " classes\n";
  if (r.n_value) return ok;
  if (r.budget_exceeded) {
    std::cerr << "node budget exhausted after order " << r.last_order << "; rerun with --long or --budget\n";
    return budget;
  }
  std::cerr << "no multipole found up to order " << r.last_order << "\n";
  return budget;
}

// cc -------------------------------------------------------------------------

std::string vertex_list(Row side) {
  std::string out;
  for (Row r = side; r; r &= r - 1) out += (out.empty() ? "" : " ") + std::to_string(lowest(r));
  return out;
}

std::string certificate_text(const cyclic::CutCertificate& cert) {
  std::string out = "size " + std::to_string(cert.size) + "\nedges";
  for (const Link& l : cert.cut_edges) out += " " + std::to_string(l.u) + "-" + std::to_string(l.v);
  out += "\nside_a " + vertex_list(cert.side_a) + "\nside_b " + vertex_list(cert.side_b);
  out += std::string("\nside_a_is_g_cycle ") + (cert.side_a_is_g_cycle ? "true" : "false");
  out += std::string("\nside_b_is_g_cycle ") + (cert.side_b_is_g_cycle ? "true" : "false") + "\n";
  return out;
}

json certificate_json(const cyclic::CutCertificate& cert) {
  json edges = json::array();
  for (const Link& l : cert.cut_edges) edges.push_back({l.u, l.v});
  std::vector<int> a, b;
  for (Row r = cert.side_a; r; r &= r - 1) a.push_back(lowest(r));
  for (Row r = cert.side_b; r; r &= r - 1) b.push_back(lowest(r));
  return {{"size", cert.size},
          {"cut_edges", edges},
          {"side_a", a},
          {"side_b", b},
          {"side_a_is_g_cycle", cert.side_a_is_g_cycle},
          {"side_b_is_g_cycle", cert.side_b_is_g_cycle}};
}

GraphInstance load_graph(const std::string& path) {
  try {
    auto all = io::read_graph_file(path);
    if (all.empty()) throw UsageError(path + ": no graph");
    return all.front();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int run_cc(const std::string& path, bool all_cuts, const Common& c) {
  const GraphInstance inst = load_graph(path);
  cyclic::Options opt;
  opt.workers = c.workers;
  opt.all_min_cuts = all_cuts;
  const auto r = cyclic::cyclic_edge_connectivity(inst.graph, opt);
  const bool every = r.all_min_cuts && std::all_of(r.all_min_cuts->begin(), r.all_min_cuts->end(), [](const auto& x) {
                       return x.side_a_is_g_cycle || x.side_b_is_g_cycle;
                     });
  if (c.format == "json") {
    json j{{"command", "cc"},
           {"graph", inst.name},
           {"order", inst.graph.order()},
           {"value", r.value ? json(*r.value) : json(nullptr)},
           {"witness", r.witness ? certificate_json(*r.witness) : json(nullptr)},
           {"pairs_examined", r.pairs_examined},
           {"flow_calls", r.flow_calls}};
    if (r.all_min_cuts) {
      json list = json::array();
      for (const auto& cert : *r.all_min_cuts) list.push_back(certificate_json(cert));
      j["all_min_cuts"] = list;
      j["truncated"] = r.truncated;
      j["every_min_cut_separates_g_cycle"] = every;
    }
    emit(c, j.dump(2) + "\n");
    return r.truncated ? budget : ok;
  }
  std::string text;
  if (!r.value) {
    text = inst.name + ": no cycle-separating cut\n";
  } else {
    text = inst.name + ": cyclic edge-connectivity " + std::to_string(*r.value) + "\n";
    std::string certs = certificate_text(*r.witness);
    if (r.all_min_cuts) {
      certs.clear();
      for (const auto& cert : *r.all_min_cuts) certs += certificate_text(cert) + "\n";
      text += "minimum cuts " + std::to_string(r.all_min_cuts->size()) + (r.truncated ? " (truncated)" : "") + "\n";
      text += std::string("every minimum cut separates a girth cycle: ") + (every ? "yes" : "no") + "\n";
    }
    if (c.output.empty())
      text += certs;
    else
      io::write_text_file(c.output, certs);
  }
  if (c.verbose) std::cerr << "pairs " << r.pairs_examined << ", flow calls " << r.flow_calls << "\n";
  std::cout << text;
  return r.truncated ? budget : ok;
}

// verify-cage ----------------------------------------------------------------

int run_verify(const std::string& path, int k, int g, const Common& c) {
  const GraphInstance inst = load_graph(path);
  cyclic::CageReport rep;
  try {
    rep = cyclic::verify_cage_theorem(inst.graph, k, g, c.workers);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::vector<std::pair<std::string, std::string>> kv{
      {"graph", inst.name},
      {"order", std::to_string(rep.order)},
      {"threshold", bounds::exact_string(rep.threshold)},
      {"threshold_approx", approx(rep.threshold, 2)},
      {"below_threshold", rep.below_threshold ? "true" : "false"},
      {"route", cyclic::to_string(rep.route)},
      {"value", rep.value ? std::to_string(*rep.value) : "none"},
      {"expected", std::to_string(rep.expected)},
      {"min_cuts", std::to_string(rep.min_cut_count)},
      {"every_min_cut_separates_g_cycle", rep.every_min_cut_separates_g_cycle ? "true" : "false"},
      {"verdict", rep.passed ? "PASS" : "FAIL"},
  };
  if (c.format == "json") {
    json j{{"command", "verify-cage"},
           {"graph", inst.name},
           {"k", k},
           {"g", g},
           {"order", rep.order},
           {"threshold", bounds::exact_string(rep.threshold)},
           {"below_threshold", rep.below_threshold},
           {"route", cyclic::to_string(rep.route)},
           {"value", rep.value ? json(*rep.value) : json(nullptr)},
           {"expected", rep.expected},
           {"min_cuts", rep.min_cut_count},
           {"every_min_cut_separates_g_cycle", rep.every_min_cut_separates_g_cycle},
           {"passed", rep.passed}};
    emit(c, j.dump(2) + "\n");
  } else if (c.format == "csv") {
    emit(c, key_value_csv(kv));
  } else if (c.format == "md") {
    emit(c, key_value_md(kv));
  } else {
    emit(c, key_value_text(kv));
  }
  return rep.passed ? ok : failed;
}

// construct ------------------------------------------------------------------

int run_construct(const std::string& path, int k, int g, int s, const std::string& log, const Common& c) {
  const GraphInstance inst = load_graph(path);
  constructions::ConstructionReport rep;
  try {
    rep = constructions::construct_multipole(inst, k, g, s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::string line = constructions::report_json(rep);
  if (!log.empty()) {
    std::ofstream out(log, std::ios::app);
    if (!out) throw UsageError("cannot open " + log);
    out << line << "\n";
  }
  const std::string mpole = io::serialize_mpole(rep.output);
  if (!c.output.empty()) io::write_text_file(c.output, mpole);
  const bool good = rep.verdict.is_nontrivial() && rep.order_bound_met;
  if (c.format == "json") {
    std::cout << line << "\n";
  } else {
    std::cout << inst.name << ": " << constructions::to_string(rep.construction_used) << " i=" << rep.i
              << " j=" << rep.j << " order " << rep.output.order() << " (expected " << rep.expected_order << ")"
              << " semiedges " << rep.output.semiedge_count() << " " << to_string(rep.verdict.triviality) << "\n";
    if (rep.printed_recipe_semiedges)
      std::cout << "printed recipe leaves " << *rep.printed_recipe_semiedges << " semiedges\n";
    if (c.output.empty()) std::cout << mpole;
  }
  return good ? ok : failed;
}

// tables ---------------------------------------------------------------------

int run_tables(int which, const std::string& published, const Common& c) {
  tables::Grid grid;
  switch (which) {
    case 1: grid = tables::table1(long_gate(c) ? 8 : 6, c.workers); break;
    case 2: grid = tables::table2(long_gate(c) ? 6 : 4, c.workers); break;
    case 3: grid = tables::table3(); break;
    case 4: grid = tables::table4(); break;
    default: throw UsageError("--which takes 1, 2, 3 or 4");
  }
  emit(c, render_grid(grid, c.format == "text" ? "csv" : c.format, std::to_string(which)));
  if (!published.empty()) {
    tables::Grid given;
    try {
      given = tables::read_csv(published);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    const auto diffs = tables::diff(given, grid);
    std::cerr << diffs.size() << " cells differ from " << published << "\n";
    for (const auto& d : diffs)
      std::cerr << "  g=" << d.row << " " << d.column << ": published " << d.expected << ", computed " << d.actual
                << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for regular multipoles of prescribed girth"};
  app.require_subcommand(1, 1);
  Common common;

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "Moore and quadratic bounds");
  bounds_cmd->add_option("kgs", ba.kgs, "k g s");
  bounds_cmd->add_flag("--all-s", ba.all_s, "All s from 0 to (k-2)g");
  bounds_cmd->add_option("--table", ba.table, "Print Table 3 (b1) or 4 (b2)");
  bounds_cmd->add_option("--digits", ba.digits, "Decimals in approximations")->check(CLI::Range(0, 30));
  add_common(bounds_cmd, common, false);

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Smallest nontrivial (k,g,s)-multipole");
  search_cmd->add_option("k", sa.k)->required();
  search_cmd->add_option("g", sa.g)->required();
  search_cmd->add_option("s", sa.s)->required();
  search_cmd->add_option("--max-order", sa.max_order);
  search_cmd->add_option("--min-order", sa.min_order);
  search_cmd->add_option("--budget", sa.node_budget, "Node budget (default 5e7 without --long)");
  search_cmd->add_option("--witness", sa.witness, "Witness .mpole path");
  search_cmd->add_flag("--all-multipoles", sa.all_multipoles, "Drop the triviality filter; admits s > (k-2)g");
  search_cmd->add_flag("--allow-isolated", sa.allow_isolated, "Also generate vertices of inner degree 0");
  add_common(search_cmd, common);

  std::string cc_path;
  bool all_cuts = false;
  auto* cc_cmd = app.add_subcommand("cc", "Cyclic edge-connectivity of a graph6/sparse6 graph");
  cc_cmd->add_option("graph", cc_path)->required();
  cc_cmd->add_flag("--all-min-cuts", all_cuts, "List every minimum cycle-separating cut");
  add_common(cc_cmd, common);

  std::string vc_path;
  int vc_k = 0, vc_g = 0;
  auto* vc_cmd = app.add_subcommand("verify-cage", "Check cyclic connectivity claims on a cage");
  vc_cmd->add_option("graph", vc_path)->required();
  vc_cmd->add_option("k", vc_k)->required();
  vc_cmd->add_option("g", vc_g)->required();
  add_common(vc_cmd, common);

  std::string co_path, co_log;
  int co_k = 0, co_g = 0, co_s = 0;
  auto* co_cmd = app.add_subcommand("construct", "Build a (k,g,s)-multipole from a cage");
  co_cmd->add_option("graph", co_path)->required();
  co_cmd->add_option("k", co_k)->required();
  co_cmd->add_option("g", co_g)->required();
  co_cmd->add_option("s", co_s)->required();
  co_cmd->add_option("--log", co_log, "Append a JSON line to this file");
  add_common(co_cmd, common, false);

  int which = 0;
  std::string published;
  auto* tb_cmd = app.add_subcommand("tables", "Regenerate Tables 1-4");
  tb_cmd->add_option("--which", which)->required();
  tb_cmd->add_option("--published", published, "Compare against a CSV and list differing cells on stderr");
  add_common(tb_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*bounds_cmd) return run_bounds(ba, common);
    if (*search_cmd) return run_search(sa, common);
    if (*cc_cmd) return run_cc(cc_path, all_cuts, common);
    if (*vc_cmd) return run_verify(vc_path, vc_k, vc_g, common);
    if (*co_cmd) return run_construct(co_path, co_k, co_g, co_s, co_log, common);
    if (*tb_cmd) return run_tables(which, published, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
