#pragma once

#include <random>
#include <string>

#include "multipole/core.hpp"
#include "multipole/io.hpp"

namespace multipole::testing {

inline std::string data_path(const std::string& rel) { return std::string(MULTIPOLE_DATA_DIR) + "/" + rel; }

inline SimpleGraph fixture(const std::string& name) {
  return io::read_graph_file(data_path("graphs/" + name + ".g6")).front().graph;
}

inline SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_link(i, (i + 1) % n);
  return g;
}

// Cycle with each vertex carrying the given number of semiedges.
inline Multipole cycle_multipole(int n, int k, int semi_per_vertex) {
  return Multipole(cycle_graph(n), std::vector<int>(n, semi_per_vertex), k);
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_link(u, v);
  return g;
}

// Random graph with maximum degree bounded by k.
inline SimpleGraph random_bounded_graph(std::mt19937& rng, int n, int k, int attempts) {
  SimpleGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < attempts; ++i) {
    const int u = pick(rng), v = pick(rng);
    if (u != v && !g.adjacent(u, v) && g.degree(u) < k && g.degree(v) < k) g.add_link(u, v);
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace multipole::testing
