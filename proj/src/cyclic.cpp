#include "multipole/cyclic.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <map>

#include <omp.h>

#include "multipole/core.hpp"

namespace multipole::cyclic {

namespace {

class CycleWalker {
 public:
  CycleWalker(const SimpleGraph& g, int max_len, std::vector<std::vector<int>>& out)
      : g_(g), max_len_(max_len), out_(out) {}

  void from(int s) {
    path_.assign(1, s);
    walk(bit(s));
  }

 private:
  void walk(Row on_path) {
    const int s = path_.front(), u = path_.back();
    const int len = static_cast<int>(path_.size());
    // Interior vertices: everything on the path except its two ends.
    const Row interior = on_path & ~bit(s) & ~bit(u);
    for (Row r = g_.row(u) & ~on_path; r; r &= r - 1) {
      const int v = lowest(r);
      if (v < s || (g_.row(v) & interior)) continue;
      const bool closes = len >= 2 && g_.adjacent(v, s);
      if (closes) {
        if (path_[1] < v) {
          out_.push_back(path_);
          out_.back().push_back(v);
        }
        continue;
      }
      if (len + 1 >= max_len_) continue;
      path_.push_back(v);
      walk(on_path | bit(v));
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  int max_len_;
  std::vector<std::vector<int>>& out_;
  std::vector<int> path_;
};

// Unit-capacity flow on an undirected graph. pos[u] holds v with flow u->v, neg[u] with v->u.
class Flow {
 public:
  explicit Flow(const SimpleGraph& g) : g_(g), n_(g.order()), pos_(n_, 0), neg_(n_, 0) {}

  // Max flow from source set to sink set, stopping once it exceeds limit.
  int run(Row source, Row sink, int limit) {
    std::fill(pos_.begin(), pos_.end(), 0);
    std::fill(neg_.begin(), neg_.end(), 0);
    int value = 0;
    std::vector<int> parent(n_);
    while (value <= limit) {
      Row seen = source, frontier = source;
      int hit = -1;
      while (frontier && hit < 0) {
        Row next = 0;
        for (Row f = frontier; f && hit < 0; f &= f - 1) {
          const int u = lowest(f);
          for (Row r = residual(u) & ~seen; r; r &= r - 1) {
            const int v = lowest(r);
            parent[v] = u;
            seen |= bit(v);
            next |= bit(v);
            if (sink & bit(v)) {
              hit = v;
              break;
            }
          }
        }
        frontier = next;
      }
      if (hit < 0) break;
      for (int v = hit; !(source & bit(v));) {
        const int u = parent[v];
        if (neg_[u] & bit(v)) {
          neg_[u] &= ~bit(v);
          pos_[v] &= ~bit(u);
        } else {
          pos_[u] |= bit(v);
          neg_[v] |= bit(u);
        }
        v = u;
      }
      ++value;
    }
    return value;
  }

  Row residual(int u) const { return g_.row(u) & ~pos_[u]; }

  // Vertices reachable in the residual network.
  Row reach(Row from) const {
    Row seen = from, frontier = from;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= residual(lowest(f));
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

 private:
  const SimpleGraph& g_;
  int n_;
  std::vector<Row> pos_, neg_;
};

std::vector<Link> crossing(const SimpleGraph& g, Row side) {
  std::vector<Link> out;
  for (int u = 0; u < g.order(); ++u)
    for (Row r = g.row(u) & ~(bit(u) | (bit(u) - 1)); r; r &= r - 1) {
      const int v = lowest(r);
      if (((side >> u) & 1U) != ((side >> v) & 1U)) out.push_back({u, v});
    }
  return out;
}

std::vector<Row> cycle_masks(const std::vector<std::vector<int>>& cycles) {
  std::vector<Row> out;
  for (const auto& c : cycles) {
    Row m = 0;
    for (int v : c) m |= bit(v);
    out.push_back(m);
  }
  return out;
}

bool is_g_cycle_side(const SimpleGraph& g, Row side, const Distance& girth) {
  if (!girth.is_finite() || popcount(side) != girth.value()) return false;
  return is_single_cycle(g.induced(side), girth.value());
}

struct Best {
  int value = INT_MAX;
  std::vector<Link> edges;
  Row side = 0;

  void offer(int v, std::vector<Link> e, Row s) {
    if (v < value || (v == value && e < edges)) {
      value = v;
      edges = std::move(e);
      side = s;
    }
  }
};

// Closed sets of the residual network that contain the source set and avoid the sink set.
class ClosedSets {
 public:
  ClosedSets(const Flow& flow, int n, Row sink, long long& budget, const std::function<void(Row)>& emit)
      : flow_(flow), n_(n), sink_(sink), budget_(budget), emit_(emit) {}

  bool run(Row source) { return step(flow_.reach(source), 0, 0); }

 private:
  bool step(Row in, Row out, int from) {
    if (--budget_ < 0) return false;
    const Row decided = in | out | sink_;
    int v = from;
    while (v < n_ && (decided & bit(v))) ++v;
    if (v == n_) {
      emit_(in);
      return true;
    }
    const Row grown = in | flow_.reach(bit(v));
    if (!(grown & (sink_ | out)) && !step(grown, out, v + 1)) return false;
    return step(in, out | bit(v), v + 1);
  }

  const Flow& flow_;
  int n_;
  Row sink_;
  long long& budget_;
  const std::function<void(Row)>& emit_;
};

struct Pairs {
  std::vector<Row> cycles;
  std::vector<std::pair<int, int>> disjoint;
};

Pairs disjoint_pairs(const SimpleGraph& g) {
  Pairs p;
  p.cycles = cycle_masks(induced_cycles(g));
  for (int i = 0; i < static_cast<int>(p.cycles.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(p.cycles.size()); ++j)
      if (!(p.cycles[i] & p.cycles[j])) p.disjoint.emplace_back(i, j);
  return p;
}

// Minimum cuts of size c between every disjoint pair, keyed by edge set.
bool collect_min_cuts(const SimpleGraph& g, const Pairs& pairs, int c, long long budget,
                      std::map<std::vector<Link>, Row>& cuts) {
  Flow flow(g);
  const std::function<void(Row)> emit = [&](Row side) {
    auto edges = crossing(g, side);
    cuts.emplace(std::move(edges), side);
  };
  for (const auto& [i, j] : pairs.disjoint) {
    if (flow.run(pairs.cycles[i], pairs.cycles[j], c) != c) continue;
    ClosedSets sets(flow, g.order(), pairs.cycles[j], budget, emit);
    if (!sets.run(pairs.cycles[i])) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, std::optional<int> max_len) {
  std::vector<std::vector<int>> out;
  const int cap = max_len.value_or(g.order());
  if (cap < 3) return out;
  CycleWalker walker(g, cap, out);
  for (int s = 0; s < g.order(); ++s) walker.from(s);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CutCertificate certificate(const SimpleGraph& g, Row side) {
  const Row all = g.all();
  side &= all;
  if (g.order() > 0 && !(side & 1U)) side = all & ~side;
  CutCertificate c;
  c.side_a = side;
  c.side_b = all & ~side;
  c.cut_edges = crossing(g, side);
  c.size = static_cast<int>(c.cut_edges.size());
  const Distance gi = girth(g);
  c.side_a_is_g_cycle = is_g_cycle_side(g, c.side_a, gi);
  c.side_b_is_g_cycle = is_g_cycle_side(g, c.side_b, gi);
  return c;
}

bool verify_certificate(const SimpleGraph& g, const CutCertificate& c) {
  if ((c.side_a & c.side_b) || (c.side_a | c.side_b) != g.all()) return false;
  if (!c.side_a || !c.side_b) return false;
  if (c.cut_edges != crossing(g, c.side_a) || c.size != static_cast<int>(c.cut_edges.size())) return false;
  return is_cyclic(g.induced(c.side_a)) && is_cyclic(g.induced(c.side_b));
}

CyclicConnectivityResult cyclic_edge_connectivity(const SimpleGraph& g, const Options& opt) {
  CyclicConnectivityResult result;
  const Pairs pairs = disjoint_pairs(g);
  const long long total = static_cast<long long>(pairs.disjoint.size());
  result.pairs_examined = total;
  result.flow_calls = total;
  if (total == 0) return result;

  Best best;
  if (opt.workers == 1) {
    Flow flow(g);
    for (const auto& [i, j] : pairs.disjoint) {
      const int v = flow.run(pairs.cycles[i], pairs.cycles[j], best.value == INT_MAX ? INT_MAX - 1 : best.value);
      if (v > best.value) continue;
      const Row side = flow.reach(pairs.cycles[i]);
      best.offer(v, crossing(g, side), side);
    }
  } else {
    std::atomic<int> bound{INT_MAX - 1};
    const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
    std::vector<Best> local(threads);
#pragma omp parallel num_threads(threads)
    {
      Flow flow(g);
      Best& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
      for (long long t = 0; t < total; ++t) {
        const auto [i, j] = pairs.disjoint[t];
        const int v = flow.run(pairs.cycles[i], pairs.cycles[j], bound.load(std::memory_order_relaxed));
        if (v > mine.value) continue;
        const Row side = flow.reach(pairs.cycles[i]);
        mine.offer(v, crossing(g, side), side);
        int seen = bound.load(std::memory_order_relaxed);
        while (v < seen && !bound.compare_exchange_weak(seen, v, std::memory_order_relaxed)) {
        }
      }
    }
    for (Best& b : local) best.offer(b.value, std::move(b.edges), b.side);
  }
  result.value = best.value;
  result.witness = certificate(g, best.side);

  if (opt.all_min_cuts) {
    std::map<std::vector<Link>, Row> cuts;
    result.truncated = !collect_min_cuts(g, pairs, best.value, opt.budget, cuts);
    std::vector<CutCertificate> list;
    for (const auto& [edges, side] : cuts) list.push_back(certificate(g, side));
    result.all_min_cuts = std::move(list);
  }
  return result;
}

std::vector<CutCertificate> all_min_cycle_separating_cuts(const SimpleGraph& g, long long budget) {
  Options opt;
  opt.all_min_cuts = true;
  opt.budget = budget;
  auto r = cyclic_edge_connectivity(g, opt);
  if (!r.value) throw Error("graph has no cycle-separating cut");
  if (r.truncated) throw Error("minimum cut enumeration exceeded its budget");
  return std::move(*r.all_min_cuts);
}

const char* to_string(Route r) {
  switch (r) {
    case Route::Theorem5: return "theorem5";
    case Route::MooreGraph: return "moore-graph";
    case Route::Direct: return "direct";
    case Route::NoCut: return "no-cut";
  }
  return "?";
}

CageReport verify_cage_theorem(const SimpleGraph& graph, int k, int girth_expected, int workers) {
  for (int v = 0; v < graph.order(); ++v)
    if (graph.degree(v) != k) throw Error("graph is not " + std::to_string(k) + "-regular");
  if (girth(graph) != Distance(girth_expected))
    throw Error("graph girth is " + girth(graph).str() + ", expected " + std::to_string(girth_expected));
  CageReport rep;
  rep.k = k;
  rep.g = girth_expected;
  rep.order = graph.order();
  rep.expected = (k - 2) * girth_expected;
  rep.threshold = bounds::theorem5_threshold(k, girth_expected);
  rep.below_threshold = bounds::below_threshold(rep.threshold, rep.order);

  Options opt;
  opt.workers = workers;
  opt.all_min_cuts = true;
  const auto r = cyclic_edge_connectivity(graph, opt);
  rep.value = r.value;
  if (!r.value) {
    rep.route = Route::NoCut;
    rep.every_min_cut_separates_g_cycle = true;
    rep.passed = true;
    return rep;
  }
  if (rep.below_threshold)
    rep.route = Route::Theorem5;
  else if (bounds::moore_bound(k, girth_expected) == rep.order)
    rep.route = Route::MooreGraph;
  else
    rep.route = Route::Direct;
  rep.min_cut_count = static_cast<long long>(r.all_min_cuts->size());
  rep.every_min_cut_separates_g_cycle =
      !r.truncated && std::all_of(r.all_min_cuts->begin(), r.all_min_cuts->end(),
                                  [](const CutCertificate& c) { return c.side_a_is_g_cycle || c.side_b_is_g_cycle; });
  rep.passed = *r.value == rep.expected && rep.every_min_cut_separates_g_cycle;
  return rep;
}

bool has_cycle(const SimpleGraph& g, Row side) {
  // Peel vertices of degree at most 1; a cycle survives.
  for (bool again = true; again && side;) {
    again = false;
    for (Row r = side; r; r &= r - 1) {
      const int v = lowest(r);
      if (popcount(g.row(v) & side) <= 1) {
        side &= ~bit(v);
        again = true;
      }
    }
  }
  return side != 0;
}

std::optional<int> partition_oracle(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 32) throw Error("partition oracle is limited to 32 vertices");
  std::optional<int> best;
  if (n < 2) return best;
  const Row all = g.all();
  // Vertex 0 always lies on side a.
  for (Row a = 0; a < bit(n - 1); ++a) {
    const Row side = a << 1 | 1U;
    if (side == all) continue;
    int cross = 0;
    for (Row r = side; r; r &= r - 1) cross += popcount(g.row(lowest(r)) & ~side);
    if (best && cross >= *best) continue;
    if (has_cycle(g, side) && has_cycle(g, all & ~side)) best = cross;
  }
  return best;
}

Multipole side_multipole(const SimpleGraph& g, Row side, int k) { return Multipole::completed(g.induced(side), k); }

CyclicPartReport cyclic_part_bound_check(const SimpleGraph& g, int workers) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) throw Error("graph is not cubic");
  Options opt;
  opt.workers = workers;
  const auto r = cyclic_edge_connectivity(g, opt);
  if (!r.value) throw Error("graph has no cycle-separating cut");
  CyclicPartReport rep;
  rep.c = *r.value;
  const Row a = r.witness->side_a, b = r.witness->side_b;
  const Row part = popcount(b) < popcount(a) ? b : a;
  rep.part_order = popcount(part);
  rep.linear_bound = 2 * rep.c - 4;
  if (rep.c >= 3) {
    const Multipole m = side_multipole(g, part, 3);
    rep.nontrivial = is_kgs_multipole(m, 3, rep.c, rep.c) && classify(m, 3, rep.c).is_nontrivial();
    rep.half_moore = static_cast<int>((bounds::moore_bound(3, rep.c) + 1) / 2);
  }
  rep.asserted = rep.nontrivial && rep.c >= 5;
  if (rep.asserted) {
    const auto qb = bounds::quadratic(3, rep.c, rep.c);
    rep.at_least_b2 = bounds::order_position(qb, rep.part_order) == bounds::Position::AtLeastB2;
  }
  rep.passed = !rep.asserted || (rep.at_least_b2 && rep.part_order >= rep.half_moore);
  return rep;
}

}  // namespace multipole::cyclic
