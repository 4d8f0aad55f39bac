#include "multipole/graph.hpp"

#include <numeric>

namespace multipole {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > max_vertices)
    throw Error("graphs are limited to " + std::to_string(max_vertices) + " vertices, got " +
                std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<Link>& links) : SimpleGraph(n) {
  for (const auto& l : links) {
    if (adjacent(l.u, l.v)) throw Error("duplicate link " + std::to_string(l.u) + "-" + std::to_string(l.v));
    add_link(l.u, l.v);
  }
}

int SimpleGraph::link_count() const {
  int twice = 0;
  for (Row r : adj_) twice += popcount(r);
  return twice / 2;
}

void SimpleGraph::add_link(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw Error("loops are not allowed (vertex " + std::to_string(u) + ")");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void SimpleGraph::remove_link(int u, int v) {
  check(u);
  check(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int SimpleGraph::add_vertex() {
  if (order() >= max_vertices) throw Error("vertex limit reached");
  adj_.push_back(0);
  return order() - 1;
}

std::vector<Link> SimpleGraph::links() const {
  std::vector<Link> out;
  for (int u = 0; u < order(); ++u)
    for (Row r = u == 63 ? 0 : adj_[u] & (~Row{0} << (u + 1)); r; r &= r - 1) out.push_back({u, lowest(r)});
  return out;
}

SimpleGraph SimpleGraph::induced(Row vertices, std::vector<int>* old_index) const {
  std::vector<int> index(order(), -1);
  std::vector<int> olds;
  for (Row r = vertices & all(); r; r &= r - 1) {
    index[lowest(r)] = static_cast<int>(olds.size());
    olds.push_back(lowest(r));
  }
  SimpleGraph h(static_cast<int>(olds.size()));
  for (int i = 0; i < h.order(); ++i)
    for (Row r = adj_[olds[i]] & vertices; r; r &= r - 1) h.adj_[i] |= bit(index[lowest(r)]);
  if (old_index) *old_index = std::move(olds);
  return h;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& new_of_old) const {
  SimpleGraph h(order());
  for (int u = 0; u < order(); ++u)
    for (Row r = adj_[u]; r; r &= r - 1) h.adj_[new_of_old[u]] |= bit(new_of_old[lowest(r)]);
  return h;
}

Multipole::Multipole(SimpleGraph g, std::vector<int> semiedges, std::optional<int> degree)
    : links(std::move(g)), semi(std::move(semiedges)), k(degree) {
  if (static_cast<int>(semi.size()) != links.order()) throw Error("semiedge vector length differs from order");
  for (int c : semi)
    if (c < 0) throw Error("negative semiedge count");
}

Multipole Multipole::completed(SimpleGraph g, int k) {
  std::vector<int> semi(g.order());
  for (int v = 0; v < g.order(); ++v) {
    semi[v] = k - g.degree(v);
    if (semi[v] < 0) throw Error("vertex " + std::to_string(v) + " has inner degree above k");
  }
  return Multipole(std::move(g), std::move(semi), k);
}

int Multipole::semiedge_count() const { return std::accumulate(semi.begin(), semi.end(), 0); }

}  // namespace multipole
