#include "multipole/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

#include <omp.h>

#include "multipole/canon.hpp"
#include "multipole/core.hpp"

namespace multipole::search {

namespace {

struct Limits {
  int k = 0, g = 0, s = 0, n = 0, m = 0, dmin = 0;
  bool nontrivial = true;
  std::vector<int> need;  // fewest links an ancestor on j vertices can have
};

Limits make_limits(const SearchParams& p, int n) {
  Limits lim;
  lim.k = p.k;
  lim.g = p.g;
  lim.s = p.s;
  lim.n = n;
  lim.m = (p.k * n - p.s) / 2;
  lim.dmin = p.assume_min_inner_degree_2 ? 2 : 0;
  lim.nontrivial = p.require_nontrivial;
  lim.need.assign(n + 1, 0);
  lim.need[n] = lim.m;
  // Deleting a minimum-degree vertex from j vertices and e links removes at most
  // min(k, j-1, floor(2e/j)) links.
  for (int j = n; j >= 1; --j) lim.need[j - 1] = std::max(0, lim.need[j] - std::min({p.k, j - 1, 2 * lim.need[j] / j}));
  return lim;
}

struct Node {
  std::vector<Row> adj;
  std::vector<int> deg;
  int links = 0;
  std::optional<std::vector<canon::Permutation>> aut;

  int order() const { return static_cast<int>(adj.size()); }
};

bool orbit_minimal(Row x, const std::vector<canon::Permutation>& gens) {
  if (gens.empty()) return true;
  std::unordered_set<Row> seen{x};
  std::vector<Row> stack{x};
  while (!stack.empty()) {
    const Row y = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      const Row z = canon::apply(p, y);
      if (z < x) return false;
      if (seen.insert(z).second) stack.push_back(z);
    }
  }
  return true;
}

class Generator {
 public:
  Generator(const Limits& lim, std::vector<SimpleGraph>& leaves) : lim_(lim), leaves_(leaves) {}

  long long nodes = 0;

  void dfs(Node& node) {
    ++nodes;
    if (node.order() == lim_.n) {
      leaf(node);
      return;
    }
    for (Node& child : children(node)) dfs(child);
  }

  // Nodes at depth `split` (or complete graphs) in DFS order; shallower nodes are counted.
  void collect(Node& node, int split, std::vector<Node>& out) {
    if (node.order() >= split || node.order() == lim_.n) {
      out.push_back(std::move(node));
      return;
    }
    ++nodes;
    for (Node& child : children(node)) collect(child, split, out);
  }

  std::vector<Node> children(Node& node) {
    std::vector<Node> out;
    const int i = node.order(), k = lim_.k;
    int low = k;
    for (int d : node.deg) low = std::min(low, d);
    std::vector<Row> conflict(i);
    for (int u = 0; u < i; ++u) conflict[u] = lim_.g > 3 ? ball_of(node, u) : bit(u);

    for (int t = 0; t <= std::min(k, i); ++t) {
      if (node.links + t < lim_.need[i + 1]) continue;
      if (t > low + 1) break;
      Row must = 0, optional = 0;
      for (int u = 0; u < i; ++u) {
        if (node.deg[u] == t - 1) must |= bit(u);
        else if (node.deg[u] >= t && node.deg[u] < k) optional |= bit(u);
      }
      if (popcount(must) > t) continue;
      bool clash = false;
      Row blocked = 0;
      for (Row r = must; r; r &= r - 1) {
        const int u = lowest(r);
        if (conflict[u] & must & ~bit(u)) clash = true;
        blocked |= conflict[u];
      }
      if (clash) continue;
      choose(node, must, optional & ~blocked, t - popcount(must), conflict, out);
    }
    return out;
  }

 private:
  const Limits& lim_;
  std::vector<SimpleGraph>& leaves_;

  Row ball_of(const Node& node, int u) const {
    Row seen = bit(u), frontier = bit(u);
    for (int r = 0; r < lim_.g - 3 && frontier; ++r) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= node.adj[lowest(f)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  void choose(Node& node, Row chosen, Row pool, int left, const std::vector<Row>& conflict, std::vector<Node>& out) {
    if (left == 0) {
      try_child(node, chosen, out);
      return;
    }
    if (popcount(pool) < left) return;
    for (Row r = pool; r; r &= r - 1) {
      const int u = lowest(r);
      const Row rest = (r & (r - 1)) & ~conflict[u];
      choose(node, chosen | bit(u), rest, left - 1, conflict, out);
    }
  }

  const std::vector<canon::Permutation>& aut(Node& node) {
    if (!node.aut) node.aut = canon::canonical_labeling(node.adj).generators;
    return *node.aut;
  }

  void try_child(Node& node, Row x, std::vector<Node>& out) {
    if (x && !orbit_minimal(x, aut(node))) return;
    const int v = node.order();
    Node child;
    child.adj = node.adj;
    child.deg = node.deg;
    child.adj.push_back(x);
    child.deg.push_back(popcount(x));
    for (Row r = x; r; r &= r - 1) {
      const int u = lowest(r);
      child.adj[u] |= bit(v);
      ++child.deg[u];
    }
    child.links = node.links + popcount(x);
    if (!feasible(child)) return;
    if (!canonical_deletion(child, v)) return;
    out.push_back(std::move(child));
  }

  bool feasible(const Node& c) const {
    const int j = c.order(), rest = lim_.n - j, k = lim_.k;
    if (c.links < lim_.need[j]) return false;
    int cap = 0;
    for (int d : c.deg) {
      if (lim_.dmin - d > rest) return false;
      cap += k - d;
    }
    const int missing = lim_.m - c.links;
    if (missing < 0) return false;
    if (2 * missing > k * rest + cap) return false;
    if (missing > cap + rest * (rest - 1) / 2) return false;
    if (cap - k * rest > lim_.s) return false;
    return true;
  }

  std::pair<long long, long long> invariant(const Node& c, int u) const {
    long long first = 0, second = 0;
    for (Row r = c.adj[u]; r; r &= r - 1) {
      const int w = lowest(r);
      first += c.deg[w];
      for (Row q = c.adj[w]; q; q &= q - 1) second += c.deg[lowest(q)];
    }
    return {first, second};
  }

  // The parent of a graph is obtained by deleting a minimum-degree vertex of maximal
  // invariant, ties broken by canonical position. Accept when v is in that vertex's orbit.
  bool canonical_deletion(Node& c, int v) {
    const int d = c.deg[v];
    const auto mine = invariant(c, v);
    Row ties = 0;
    for (int u = 0; u < c.order(); ++u) {
      if (u == v || c.deg[u] != d) continue;
      const auto other = invariant(c, u);
      if (other > mine) return false;
      if (other == mine) ties |= bit(u);
    }
    if (!ties) return true;
    ties |= bit(v);
    auto lab = canon::canonical_labeling(c.adj);
    int best = -1;
    for (Row r = ties; r; r &= r - 1) {
      const int u = lowest(r);
      if (best < 0 || lab.position[u] < lab.position[best]) best = u;
    }
    const bool ok = lab.orbit[best] == lab.orbit[v];
    if (ok) c.aut = std::move(lab.generators);
    return ok;
  }

  void leaf(const Node& c) {
    if (c.links != lim_.m) return;
    for (int d : c.deg)
      if (d < lim_.dmin) return;
    SimpleGraph g(c.order());
    for (int u = 0; u < c.order(); ++u)
      for (Row r = c.adj[u] & ~(bit(u) | (bit(u) - 1)); r; r &= r - 1) g.add_link(u, lowest(r));
    if (lim_.nontrivial) {
      if (!is_cyclic(g)) return;
      if (c.order() == lim_.g && is_single_cycle(g, lim_.g)) return;
    }
    leaves_.push_back(std::move(g));
  }
};

void validate(const SearchParams& p) {
  if (p.k < 3) throw Error("degree must be at least 3");
  if (p.g < 3) throw Error("girth must be at least 3");
  if (p.s < 0) throw Error("negative semiedge count");
  if (p.require_nontrivial && p.s > (p.k - 2) * p.g)
    throw Error("nontriviality is only defined for at most (k-2)g semiedges");
}

std::vector<Row> key(const Multipole& m) {
  std::vector<Row> out(m.links.rows().begin(), m.links.rows().end());
  for (int c : m.semi) out.push_back(static_cast<Row>(c));
  return out;
}

}  // namespace

bool canonical_less(const Multipole& a, const Multipole& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return key(a) < key(b);
}

std::vector<int> candidate_orders(const SearchParams& p, int from, int to) {
  std::vector<int> out;
  const int dmin = p.assume_min_inner_degree_2 ? 2 : 0;
  for (int n = std::max(from, 1); n <= to; ++n) {
    const int degree_sum = p.k * n - p.s;
    if (degree_sum < 0 || degree_sum % 2 || degree_sum < dmin * n) continue;
    out.push_back(n);
  }
  return out;
}

long long generate(const SearchParams& p, int n, Backend backend, const std::function<void(const Multipole&)>& visit,
                   long long* nodes) {
  validate(p);
  if (n < 1 || n > max_vertices) throw Error("order must lie in [1, 64]");
  if (nodes) *nodes = 0;
  if (candidate_orders(p, n, n).empty()) return 0;
  const Limits lim = make_limits(p, n);

  std::vector<std::vector<SimpleGraph>> buckets;
  long long explored = 0;
  Node root;
  if (backend == Backend::Serial) {
    buckets.resize(1);
    Generator gen(lim, buckets[0]);
    gen.dfs(root);
    explored = gen.nodes;
  } else {
    std::vector<SimpleGraph> unused;
    Generator top(lim, unused);
    std::vector<Node> tasks;
    top.collect(root, (n + 1) / 2, tasks);
    explored = top.nodes;
    buckets.resize(tasks.size());
    std::vector<long long> counts(tasks.size(), 0);
    const int threads = p.workers > 0 ? p.workers : omp_get_max_threads();
    const long long size = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long t = 0; t < size; ++t) {
      Generator gen(lim, buckets[t]);
      gen.dfs(tasks[t]);
      counts[t] = gen.nodes;
    }
    for (long long c : counts) explored += c;
  }
  if (nodes) *nodes = explored;
  long long total = 0;
  for (const auto& bucket : buckets)
    for (const auto& g : bucket) {
      visit(Multipole::completed(g, p.k));
      ++total;
    }
  return total;
}

std::vector<Multipole> enumerate_all(const SearchParams& p, int n, Backend backend) {
  std::vector<Multipole> out;
  generate(p, n, backend, [&](const Multipole& m) { out.push_back(canon::canonical_multipole(m)); });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SearchResult find_min_nontrivial(const SearchParams& p) {
  validate(p);
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  const int lower = std::max({3, (p.s + p.k - 1) / p.k, p.min_order.value_or(0)});
  const int upper = std::min(p.max_order.value_or(max_vertices), max_vertices);
  const Backend backend = p.workers == 1 ? Backend::Serial : Backend::Parallel;
  const auto orders = candidate_orders(p, lower, upper);
  for (int n : orders) {
    std::optional<Multipole> best;
    long long nodes = 0;
    const long long count = generate(
        p, n, backend,
        [&](const Multipole& m) {
          auto c = canon::canonical_multipole(m);
          if (!best || canonical_less(c, *best)) best = std::move(c);
        },
        &nodes);
    result.nodes_explored += nodes;
    result.counted_canonical[n] = count;
    result.last_order = n;
    if (count > 0) {
      result.n_value = n;
      result.witness = std::move(best);
      break;
    }
    if (p.node_budget && result.nodes_explored >= *p.node_budget && n != orders.back()) {
      result.budget_exceeded = true;
      break;
    }
  }
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

// Labeled realizations of a fixed degree sequence: fill rows in vertex order.
class Realizer {
 public:
  Realizer(int n, int g, std::vector<int> degrees, std::function<void(const SimpleGraph&)> emit)
      : n_(n), g_(g), want_(std::move(degrees)), emit_(std::move(emit)), graph_(n), have_(n, 0) {}

  void run() { row(0); }

 private:
  int n_, g_;
  std::vector<int> want_;
  std::function<void(const SimpleGraph&)> emit_;
  SimpleGraph graph_;
  std::vector<int> have_;

  bool closes_short_cycle(int u, int v) const {
    if (g_ <= 3) return false;
    return ball(graph_, bit(u), g_ - 2) & bit(v);
  }

  void row(int u) {
    if (u == n_) {
      emit_(graph_);
      return;
    }
    pick(u, u + 1, want_[u] - have_[u]);
  }

  void pick(int u, int from, int left) {
    if (left == 0) {
      row(u + 1);
      return;
    }
    for (int v = from; v < n_; ++v) {
      if (have_[v] >= want_[v] || closes_short_cycle(u, v)) continue;
      graph_.add_link(u, v);
      ++have_[u];
      ++have_[v];
      pick(u, v + 1, left - 1);
      graph_.remove_link(u, v);
      --have_[u];
      --have_[v];
    }
  }
};

void sequences(int n, int low, int high, int sum, std::vector<int>& seq, const std::function<void()>& each) {
  const int i = static_cast<int>(seq.size());
  if (i == n) {
    if (sum == 0) each();
    return;
  }
  const int left = n - i;
  for (int d = high; d >= low; --d) {
    if (d * left < sum || low * left > sum) continue;
    seq.push_back(d);
    sequences(n, low, d, sum - d, seq, each);
    seq.pop_back();
  }
}

}  // namespace

long long brute_force_oracle(int k, int g, int s, int n, bool min_inner_degree_2) {
  if (k < 3 || g < 3 || s < 0 || s > (k - 2) * g) throw Error("parameters outside the oracle's domain");
  if (n < 1 || n > 10) throw Error("oracle is limited to 10 vertices");
  const int degree_sum = k * n - s;
  if (degree_sum < 0 || degree_sum % 2) return 0;
  std::set<std::vector<Row>> classes;
  std::vector<int> seq;
  sequences(n, min_inner_degree_2 ? 2 : 0, std::min(k, n - 1), degree_sum, seq, [&] {
    Realizer(n, g, seq, [&](const SimpleGraph& gr) {
      const Multipole m = Multipole::completed(gr, k);
      if (!classify(m, k, g).is_nontrivial()) return;
      classes.insert(canon::canonical_form(m));
    }).run();
  });
  return static_cast<long long>(classes.size());
}

}  // namespace multipole::search
