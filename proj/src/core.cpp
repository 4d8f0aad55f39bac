#include "multipole/core.hpp"

#include <algorithm>

namespace multipole {

int inner_degree(const Multipole& m, int v) { return m.links.degree(v); }

Distance girth(const SimpleGraph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      // No shorter cycle through root can be found beyond this depth.
      if (best != -1 && 2 * dist[u] + 1 >= best) break;
      for (Row r = g.row(u); r; r &= r - 1) {
        const int w = lowest(r);
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  return best == -1 ? Distance::infinity() : Distance(best);
}

Row ball(const SimpleGraph& g, Row sources, int radius) {
  Row seen = sources, frontier = sources;
  for (int d = 0; d < radius && frontier; ++d) {
    Row next = 0;
    for (Row r = frontier; r; r &= r - 1) next |= g.row(lowest(r));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<Distance> distances_from(const SimpleGraph& g, Row sources) {
  std::vector<Distance> out(g.order(), Distance::infinity());
  Row seen = sources, frontier = sources;
  for (int d = 0; frontier; ++d) {
    for (Row r = frontier; r; r &= r - 1) out[lowest(r)] = Distance(d);
    Row next = 0;
    for (Row r = frontier; r; r &= r - 1) next |= g.row(lowest(r));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return out;
}

Distance dist_vertex(const SimpleGraph& g, int u, int v) {
  g.row(u);
  return distances_from(g, bit(u))[v];
}

namespace {

Row anchor_set(const Multipole& m, const Anchor& x) {
  if (const int* v = std::get_if<int>(&x)) {
    m.links.row(*v);
    return bit(*v);
  }
  const Link& l = std::get<Link>(x);
  if (!m.links.adjacent(l.u, l.v))
    throw Error("anchor " + std::to_string(l.u) + "-" + std::to_string(l.v) + " is not a link");
  return bit(l.u) | bit(l.v);
}

}  // namespace

Distance dist_to_semiedge(const Multipole& m, const Anchor& x, SemiedgeSlot f) {
  if (f.vertex < 0 || f.vertex >= m.order() || f.slot < 0 || f.slot >= m.semi[f.vertex])
    throw Error("invalid semiedge slot (" + std::to_string(f.vertex) + ", " + std::to_string(f.slot) + ")");
  return distances_from(m.links, anchor_set(m, x))[f.vertex];
}

std::vector<Distance> semiedge_distances(const Multipole& m, const Anchor& x) {
  const auto dist = distances_from(m.links, anchor_set(m, x));
  std::vector<Distance> out;
  for (int v = 0; v < m.order(); ++v)
    for (int i = 0; i < m.semi[v]; ++i) out.push_back(dist[v]);
  return out;
}

std::vector<Row> components(const SimpleGraph& g) {
  std::vector<Row> out;
  Row left = g.all();
  while (left) {
    const Row c = ball(g, bit(lowest(left)), g.order());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

int component_count(const SimpleGraph& g) { return static_cast<int>(components(g).size()); }

bool is_cyclic(const SimpleGraph& g) { return g.link_count() > g.order() - component_count(g); }

bool is_single_cycle(const SimpleGraph& g, int len) {
  if (g.order() != len || len < 3) return false;
  for (int v = 0; v < len; ++v)
    if (g.degree(v) != 2) return false;
  return component_count(g) == 1;
}

const char* to_string(Triviality t) {
  switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::Nontrivial: return "nontrivial";
    case Triviality::Undefined: return "undefined";
  }
  return "?";
}

StructureReport classify(const Multipole& m, int k, int g) {
  StructureReport rep;
  const int n = m.order();
  rep.is_regular = true;
  for (int v = 0; v < n; ++v) {
    const int d = m.links.degree(v) + m.semi[v];
    if (!rep.degree) rep.degree = d;
    if (d != *rep.degree) rep.is_regular = false;
  }
  if (!rep.is_regular) rep.degree.reset();
  rep.girth = girth(m.links);
  rep.is_cyclic = rep.girth.is_finite();
  rep.component_count = component_count(m.links);

  const int s = m.semiedge_count();
  if (s > (k - 2) * g) {
    rep.triviality = Triviality::Undefined;
  } else if (!rep.is_cyclic) {
    rep.triviality = Triviality::Trivial;
  } else if (is_single_cycle(m.links, g) &&
             std::all_of(m.semi.begin(), m.semi.end(), [k](int c) { return c == k - 2; })) {
    rep.triviality = Triviality::Trivial;
  } else {
    rep.triviality = Triviality::Nontrivial;
  }
  return rep;
}

bool is_kgs_multipole(const Multipole& m, int k, int g, int s) {
  for (int v = 0; v < m.order(); ++v)
    if (m.links.degree(v) + m.semi[v] != k) return false;
  return m.semiedge_count() == s && girth(m.links) >= Distance(g);
}

namespace {

// A link lies on a cycle iff its endpoints stay connected without it.
bool on_cycle(const SimpleGraph& g, Link l) {
  SimpleGraph h = g;
  h.remove_link(l.u, l.v);
  return (ball(h, bit(l.u), h.order()) >> l.v) & 1U;
}

}  // namespace

Multipole eliminate_inner_degree_one(const Multipole& m, int k, int g) {
  if (!is_kgs_multipole(m, k, g, m.semiedge_count()))
    throw Error("input is not a (k,g,s)-multipole for the given k and g");
  if (!classify(m, k, g).is_nontrivial()) throw Error("input multipole is not nontrivial");

  Multipole h = m;
  for (;;) {
    int pendant = -1;
    for (int v = 0; v < h.order(); ++v)
      if (h.links.degree(v) == 1) {
        pendant = v;
        break;
      }
    if (pendant == -1) break;
    const int u = lowest(h.links.row(pendant));

    // Subdivide the least link that lies on a cycle; that link is never the pendant one.
    std::optional<Link> target;
    for (const Link& l : h.links.links())
      if (on_cycle(h.links, l)) {
        target = l;
        break;
      }
    if (!target) throw Error("nontrivial multipole without a cycle link");

    SimpleGraph next = h.links;
    std::vector<int> semi = h.semi;
    next.remove_link(target->u, target->v);
    const int w = next.add_vertex();
    semi.push_back(k - 2);
    next.add_link(target->u, w);
    next.add_link(w, target->v);
    next.remove_link(pendant, u);
    semi[u] += 1;

    // Drop the pendant vertex and compact indices.
    std::vector<int> old_index;
    const Row keep = next.all() & ~bit(pendant);
    SimpleGraph compact = next.induced(keep, &old_index);
    std::vector<int> compact_semi;
    for (int old : old_index) compact_semi.push_back(semi[old]);
    h = Multipole(std::move(compact), std::move(compact_semi), k);

    if (girth(h.links) < Distance(g)) throw Error("inner-degree-1 rewrite produced a cycle shorter than g");
  }
  return h;
}

}  // namespace multipole
