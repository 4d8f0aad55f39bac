#include "multipole/constructions.hpp"

#include <functional>

#include <json.hpp>

#include "multipole/cyclic.hpp"

namespace multipole::constructions {

namespace {

constexpr long long candidate_cap = 1'000'000;

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Semiedges created by removing an induced path of p vertices; p = -1 subdivides a link.
int path_semiedges(int p, int k) {
  if (p < 0) return k - 2;
  if (p == 0) return 0;
  return p * (k - 2) + 2;
}

// Induced paths with p >= 1 vertices, first vertex smaller than the last for p >= 2.
void induced_paths(const SimpleGraph& g, int p, const std::function<bool(const std::vector<int>&)>& each) {
  std::vector<int> path;
  std::function<bool(Row)> walk = [&](Row on) {
    if (static_cast<int>(path.size()) == p) return (p == 1 || path.front() < path.back()) ? each(path) : true;
    const int u = path.back();
    const Row earlier = on & ~bit(u);
    for (Row r = g.row(u) & ~on; r; r &= r - 1) {
      const int v = lowest(r);
      if (g.row(v) & earlier) continue;
      path.push_back(v);
      const bool go = walk(on | bit(v));
      path.pop_back();
      if (!go) return false;
    }
    return true;
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    if (!walk(bit(s))) return;
  }
}

// e-subsets of the links in lexicographic order; pairwise disjoint when matching is set.
bool edge_sets(const std::vector<Link>& links, int e, bool matching,
               const std::function<bool(const std::vector<Link>&)>& each) {
  std::vector<Link> chosen;
  std::function<bool(std::size_t, Row)> pick = [&](std::size_t from, Row used) {
    if (static_cast<int>(chosen.size()) == e) return each(chosen);
    for (std::size_t t = from; t < links.size(); ++t) {
      const Link& l = links[t];
      if (matching && (used & (bit(l.u) | bit(l.v)))) continue;
      chosen.push_back(l);
      const bool go = pick(t + 1, used | bit(l.u) | bit(l.v));
      chosen.pop_back();
      if (!go) return false;
    }
    return true;
  };
  return pick(0, 0);
}

struct Surgery {
  std::vector<int> removed;
  std::optional<Link> subdivided;
  std::vector<Link> severed;
};

Multipole apply(const SimpleGraph& cage, int k, const Surgery& op) {
  if (op.subdivided) {
    SimpleGraph h = cage;
    h.remove_link(op.subdivided->u, op.subdivided->v);
    const int w = h.add_vertex();
    h.add_link(op.subdivided->u, w);
    h.add_link(w, op.subdivided->v);
    for (const Link& l : op.severed) h.remove_link(l.u, l.v);
    return Multipole::completed(std::move(h), k);
  }
  Row gone = 0;
  for (int v : op.removed) gone |= bit(v);
  std::vector<int> old_index;
  SimpleGraph h = cage.induced(cage.all() & ~gone, &old_index);
  std::vector<int> new_index(cage.order(), -1);
  for (int v = 0; v < h.order(); ++v) new_index[old_index[v]] = v;
  for (const Link& l : op.severed) h.remove_link(new_index[l.u], new_index[l.v]);
  return Multipole::completed(std::move(h), k);
}

// Links left after the removal, in input labels.
std::vector<Link> remaining_links(const SimpleGraph& cage, const Surgery& op) {
  Row gone = 0;
  for (int v : op.removed) gone |= bit(v);
  std::vector<Link> out;
  for (const Link& l : cage.links())
    if (!(gone & (bit(l.u) | bit(l.v))) && !(op.subdivided && *op.subdivided == l)) out.push_back(l);
  return out;
}

// Calls each with every removal of p vertices, in canonical order.
void removals(const SimpleGraph& cage, int p, const std::function<bool(Surgery)>& each) {
  if (p < 0) {
    for (const Link& l : cage.links()) {
      Surgery op;
      op.subdivided = l;
      if (!each(std::move(op))) return;
    }
  } else if (p == 0) {
    each(Surgery{});
  } else {
    induced_paths(cage, p, [&](const std::vector<int>& path) { return each(Surgery{path, std::nullopt, {}}); });
  }
}

}  // namespace

const char* to_string(Construction c) {
  switch (c) {
    case Construction::RemoveGCycle: return "remove-g-cycle";
    case Construction::RemovePathSeverEdges: return "remove-path-sever-edges";
    case Construction::OddJVariant: return "odd-j-variant";
  }
  return "?";
}

bool construction_applies(int k, int g, int s) {
  if (k < 3 || g < 3 || s <= 0 || s > (k - 2) * g || k + g < 9) return false;
  if (s == (k - 2) * g) return true;
  if (k % 2 == 0 && s % 2 == 1) return false;
  return s % 2 == 0 || s >= k - 2;
}

int construction_order(int cage_order, int k, int g, int s) {
  if (s == (k - 2) * g) return cage_order - g;
  const int i = floor_div(s - 2, k - 2);
  return cage_order - i + (((k * i + s) % 2) + 2) % 2;
}

ConstructionReport construct_multipole(const GraphInstance& cage, int k, int g, int s) {
  const SimpleGraph& G = cage.graph;
  for (int v = 0; v < G.order(); ++v)
    if (G.degree(v) != k) throw Error("cage is not " + std::to_string(k) + "-regular");
  if (girth(G) != Distance(g)) throw Error("cage girth is " + girth(G).str() + ", expected " + std::to_string(g));
  if (!construction_applies(k, g, s))
    throw Error("parameters (" + std::to_string(k) + "," + std::to_string(g) + "," + std::to_string(s) +
                ") violate the construction conditions");

  ConstructionReport rep;
  rep.input_cage = cage;
  rep.k = k;
  rep.g = g;
  rep.s_target = s;
  rep.i = floor_div(s - 2, k - 2);
  rep.j = s - rep.i * (k - 2) - 2;
  rep.expected_order = construction_order(G.order(), k, g, s);

  auto accept = [&](const Surgery& op) {
    ++rep.candidates_tried;
    Multipole out = apply(G, k, op);
    const StructureReport verdict = classify(out, k, g);
    if (!is_kgs_multipole(out, k, g, s) || !verdict.is_nontrivial()) return false;
    rep.removed = op.removed;
    rep.subdivided = op.subdivided;
    rep.severed = op.severed;
    rep.output = std::move(out);
    rep.verdict = verdict;
    return true;
  };
  bool found = false;
  auto over_cap = [&] { return rep.candidates_tried >= candidate_cap; };

  if (s == (k - 2) * g) {
    rep.construction_used = Construction::RemoveGCycle;
    for (const auto& cycle : cyclic::induced_cycles(G, g)) {
      if (static_cast<int>(cycle.size()) != g) continue;
      if ((found = accept(Surgery{cycle, std::nullopt, {}})) || over_cap()) break;
    }
  } else {
    const bool even = rep.j % 2 == 0;
    rep.construction_used = even ? Construction::RemovePathSeverEdges : Construction::OddJVariant;
    const int p = even ? rep.i : rep.i - 1;
    const int e = (s - path_semiedges(p, k)) / 2;
    if (!even && p >= 1) {
      // The printed recipe severs (k+2+j)/2 edges after the same removal.
      const int printed = (k + 2 + rep.j) / 2;
      removals(G, p, [&](Surgery op) {
        const auto links = remaining_links(G, op);
        edge_sets(links, printed, false, [&](const std::vector<Link>& m) {
          op.severed = m;
          rep.printed_recipe_semiedges = apply(G, k, op).semiedge_count();
          return false;
        });
        return !rep.printed_recipe_semiedges;
      });
    }
    // Disjoint severed links first; small complete graphs may have no large enough matching.
    for (bool matching : {true, false}) {
      removals(G, p, [&](Surgery op) {
        const auto links = remaining_links(G, op);
        edge_sets(links, e, matching, [&](const std::vector<Link>& m) {
          op.severed = m;
          found = accept(op);
          return !found && !over_cap();
        });
        return !found && !over_cap();
      });
      if (found || over_cap()) break;
    }
  }
  if (!found) throw Error("no candidate removal yields a nontrivial multipole");
  rep.order_bound_met = rep.output.order() == rep.expected_order;
  return rep;
}

std::string report_json(const ConstructionReport& r) {
  using nlohmann::json;
  auto links = [](const std::vector<Link>& ls) {
    json a = json::array();
    for (const Link& l : ls) a.push_back({l.u, l.v});
    return a;
  };
  json j;
  j["input"] = r.input_cage.name;
  j["input_order"] = r.input_cage.graph.order();
  j["k"] = r.k;
  j["g"] = r.g;
  j["s"] = r.s_target;
  j["i"] = r.i;
  j["j"] = r.j;
  j["construction"] = to_string(r.construction_used);
  j["removed"] = r.removed;
  j["subdivided"] = r.subdivided ? json{r.subdivided->u, r.subdivided->v} : json(nullptr);
  j["severed"] = links(r.severed);
  j["output_order"] = r.output.order();
  j["output_semiedges"] = r.output.semiedge_count();
  j["verdict"] = {{"regular", r.verdict.is_regular},
                  {"girth", r.verdict.girth.str()},
                  {"cyclic", r.verdict.is_cyclic},
                  {"triviality", to_string(r.verdict.triviality)},
                  {"components", r.verdict.component_count}};
  j["expected_order"] = r.expected_order;
  j["order_bound_met"] = r.order_bound_met;
  j["printed_recipe_semiedges"] = r.printed_recipe_semiedges ? json(*r.printed_recipe_semiedges) : json(nullptr);
  j["candidates_tried"] = r.candidates_tried;
  return j.dump();
}

bool exact_value_applies(int k, int g, int s) {
  if (g != 3 && g != 4) return false;
  return construction_applies(k, g, s);
}

int exact_value_g34(int k, int g, int s) {
  if (!exact_value_applies(k, g, s))
    throw Error("exact value formula needs g in {3,4}, 0 < s <= (k-2)g, k odd or s even, k+g >= 9, and s >= k-2 when s is odd");
  return construction_order(g == 3 ? k + 1 : 2 * k, k, g, s);
}

long long g34_quadratic(int k, int g, int s, long long n) {
  if (g == 3) return n * n - (k + 1) * n + s;
  if (g == 4) return n * n - 2LL * k * n + 2LL * s;
  throw Error("girth must be 3 or 4");
}

SimpleGraph small_cage(int k, int g) {
  if (k < 2) throw Error("degree must be at least 2");
  if (g == 3) {
    SimpleGraph c(k + 1);
    for (int u = 0; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) c.add_link(u, v);
    return c;
  }
  if (g == 4) {
    SimpleGraph c(2 * k);
    for (int u = 0; u < k; ++u)
      for (int v = k; v < 2 * k; ++v) c.add_link(u, v);
    return c;
  }
  throw Error("girth must be 3 or 4");
}

}  // namespace multipole::constructions
