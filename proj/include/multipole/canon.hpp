#pragma once

#include <span>
#include <vector>

#include "multipole/graph.hpp"

namespace multipole::canon {

using Permutation = std::vector<int>;

// Canonical labeling of a vertex-colored graph.
struct Labeling {
  std::vector<int> lab;           // lab[i]: vertex placed at canonical position i
  std::vector<int> position;      // inverse of lab
  std::vector<Row> form;          // adjacency rows of the relabeled graph
  std::vector<Permutation> generators;  // generate the full color-preserving automorphism group
  std::vector<int> orbit;         // least vertex of each vertex's orbit
  long long leaves = 0;
};

// Colors need not be contiguous; vertices with smaller colors come first in the form.
Labeling canonical_labeling(std::span<const Row> adj, std::span<const int> colors = {});
inline Labeling canonical_labeling(const SimpleGraph& g, std::span<const int> colors = {}) {
  return canonical_labeling(g.rows(), colors);
}

// Canonical form of a multipole: its graph colored by semiedge count.
std::vector<Row> canonical_form(const Multipole& m);
Multipole canonical_multipole(const Multipole& m);

// Orbit (least element) of every vertex under the group generated by gens.
std::vector<int> orbits(int n, std::span<const Permutation> gens);

Row apply(const Permutation& p, Row set);

}  // namespace multipole::canon
