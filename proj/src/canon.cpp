#include "multipole/canon.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace multipole::canon {

namespace {

// Ordered partition cells; fixed capacity keeps the search free of allocations.
struct Cells {
  std::array<Row, max_vertices> cell;
  int size = 0;

  Row& operator[](int i) { return cell[i]; }
  Row operator[](int i) const { return cell[i]; }
  void push_back(Row r) { cell[size++] = r; }
  void insert(int at, const Row* first, int count) {
    std::copy_backward(cell.begin() + at, cell.begin() + size, cell.begin() + size + count);
    std::copy(first, first + count, cell.begin() + at);
    size += count;
  }
};
constexpr int no_jump = -1;

// Splits cells by neighbor counts until the partition is equitable. Each fragment is
// queued as a splitter; stale queued sets are unions of current cells and remain valid.
void refine(std::span<const Row> adj, Cells& cells, std::vector<Row>& splitters) {
  std::size_t next = 0;
  std::array<std::pair<int, int>, max_vertices> keyed;
  std::array<Row, max_vertices> fragments;
  while (next < splitters.size()) {
    const Row w = splitters[next++];
    Row touched = 0;
    for (Row r = w; r; r &= r - 1) touched |= adj[lowest(r)];
    for (int ci = 0; ci < cells.size; ++ci) {
      const Row c = cells[ci];
      if (!(c & touched) || !(c & (c - 1))) continue;
      int size = 0;
      bool uniform = true;
      for (Row r = c; r; r &= r - 1) {
        const int v = lowest(r);
        keyed[size] = {popcount(adj[v] & w), v};
        uniform = uniform && keyed[size].first == keyed[0].first;
        ++size;
      }
      if (uniform) continue;
      std::sort(keyed.begin(), keyed.begin() + size);
      int parts = 0, current = -1;
      for (int e = 0; e < size; ++e) {
        if (keyed[e].first != current) {
          fragments[parts++] = 0;
          current = keyed[e].first;
        }
        fragments[parts - 1] |= bit(keyed[e].second);
      }
      cells[ci] = fragments[0];
      cells.insert(ci + 1, fragments.data() + 1, parts - 1);
      splitters.insert(splitters.end(), fragments.begin(), fragments.begin() + parts);
      ci += parts - 1;
    }
  }
}

class Search {
 public:
  explicit Search(std::span<const Row> adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  void run(Cells cells) {
    splitters_.assign(cells.cell.begin(), cells.cell.begin() + cells.size);
    refine(adj_, cells, splitters_);
    std::vector<int> path;
    visit(cells, path);
  }

  std::vector<int> best_lab;
  std::vector<Row> best_form;
  std::vector<Permutation> gens;
  long long leaves = 0;

 private:
  int visit(const Cells& cells, std::vector<int>& path) {
    const int level = static_cast<int>(path.size());
    int target = -1;
    for (int i = 0; i < cells.size; ++i) {
      const int size = popcount(cells[i]);
      if (size > 1 && (target == -1 || size < popcount(cells[target]))) target = i;
    }
    if (target == -1) return leaf(cells, path);

    Row done = 0;
    std::vector<int> orbit;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    for (Row r = cells[target]; r; r &= r - 1) {
      const int v = lowest(r);
      if (done) {
        if (orbit_gens != gens.size()) {
          orbit = stabilizer_orbits(path);
          orbit_gens = gens.size();
        }
        bool covered = false;
        for (Row d = done; d; d &= d - 1)
          if (orbit[lowest(d)] == orbit[v]) {
            covered = true;
            break;
          }
        if (covered) continue;
      }
      Cells child = cells;
      child[target] = bit(v);
      const Row rest = cells[target] & ~bit(v);
      child.insert(target + 1, &rest, 1);
      splitters_.assign(1, bit(v));
      refine(adj_, child, splitters_);
      path.push_back(v);
      const int jump = visit(child, path);
      path.pop_back();
      done |= bit(v);
      if (jump != no_jump && jump < level) return jump;
    }
    return no_jump;
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    ++leaves;
    std::vector<int> lab(n_), pos(n_);
    for (int i = 0; i < n_; ++i) {
      lab[i] = lowest(cells[i]);
      pos[lab[i]] = i;
    }
    std::vector<Row> form(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (Row r = adj_[lab[i]]; r; r &= r - 1) form[i] |= bit(pos[lowest(r)]);

    if (first_lab_.empty()) {
      first_lab_ = best_lab = lab;
      first_form_ = best_form = form;
      first_path_ = path;
      return no_jump;
    }
    if (form == first_form_) {
      gens.push_back(mapping(lab, first_lab_));
      int common = 0;
      while (common < static_cast<int>(path.size()) && path[common] == first_path_[common]) ++common;
      return common;
    }
    if (form < best_form) {
      best_form = std::move(form);
      best_lab = std::move(lab);
    } else if (form == best_form) {
      gens.push_back(mapping(lab, best_lab));
    }
    return no_jump;
  }

  Permutation mapping(const std::vector<int>& from, const std::vector<int>& to) const {
    Permutation p(n_);
    for (int i = 0; i < n_; ++i) p[from[i]] = to[i];
    return p;
  }

  std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
    std::vector<Permutation> fixing;
    for (const auto& g : gens)
      if (std::all_of(path.begin(), path.end(), [&](int v) { return g[v] == v; })) fixing.push_back(g);
    return orbits(n_, fixing);
  }

  std::span<const Row> adj_;
  int n_;
  std::vector<Row> splitters_;
  std::vector<int> first_lab_;
  std::vector<Row> first_form_;
  std::vector<int> first_path_;
};

}  // namespace

std::vector<int> orbits(int n, std::span<const Permutation> gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int v = 0; v < n; ++v) {
      const int a = find(v), b = find(g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = find(v);
  return out;
}

Row apply(const Permutation& p, Row set) {
  Row out = 0;
  for (; set; set &= set - 1) out |= bit(p[lowest(set)]);
  return out;
}

Labeling canonical_labeling(std::span<const Row> adj, std::span<const int> colors) {
  const int n = static_cast<int>(adj.size());
  Labeling out;
  if (n == 0) return out;
  if (!colors.empty() && static_cast<int>(colors.size()) != n) throw Error("color vector length differs from order");

  Cells cells;
  if (colors.empty()) {
    cells.push_back(n == 64 ? ~Row{0} : bit(n) - 1);
  } else {
    std::map<int, Row> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[v]] |= bit(v);
    for (const auto& [c, set] : by_color) cells.push_back(set);
  }

  Search search(adj);
  search.run(std::move(cells));
  out.lab = std::move(search.best_lab);
  out.form = std::move(search.best_form);
  out.position.assign(n, 0);
  for (int i = 0; i < n; ++i) out.position[out.lab[i]] = i;
  out.generators = std::move(search.gens);
  out.orbit = orbits(n, out.generators);
  out.leaves = search.leaves;
  return out;
}

std::vector<Row> canonical_form(const Multipole& m) {
  auto lab = canonical_labeling(m.links.rows(), m.semi);
  // Colors are part of the form: append the semiedge counts in canonical order.
  std::vector<Row> form = std::move(lab.form);
  for (int i = 0; i < m.order(); ++i) form.push_back(static_cast<Row>(m.semi[lab.lab[i]]));
  return form;
}

Multipole canonical_multipole(const Multipole& m) {
  const auto lab = canonical_labeling(m.links.rows(), m.semi);
  std::vector<int> semi(m.order());
  for (int i = 0; i < m.order(); ++i) semi[i] = m.semi[lab.lab[i]];
  return Multipole(m.links.relabeled(lab.position), std::move(semi), m.k);
}

}  // namespace multipole::canon
