#pragma once

#include <variant>
#include <vector>

#include "multipole/graph.hpp"

namespace multipole {

int inner_degree(const Multipole& m, int v);

Distance girth(const SimpleGraph& g);
inline Distance girth(const Multipole& m) { return girth(m.links); }

Distance dist_vertex(const SimpleGraph& g, int u, int v);
inline Distance dist_vertex(const Multipole& m, int u, int v) { return dist_vertex(m.links, u, v); }

// Vertices at distance <= radius from the given source set.
Row ball(const SimpleGraph& g, Row sources, int radius);

// BFS distances from a source set; entries are infinite outside its component.
std::vector<Distance> distances_from(const SimpleGraph& g, Row sources);

// A semiedge is addressed by its vertex and its slot among that vertex's semiedges.
struct SemiedgeSlot {
  int vertex = 0;
  int slot = 0;
};

// A distance anchor: a vertex for odd girth, a link for even girth.
using Anchor = std::variant<int, Link>;

Distance dist_to_semiedge(const Multipole& m, const Anchor& x, SemiedgeSlot f);

// Distance from x to each semiedge slot, in vertex order.
std::vector<Distance> semiedge_distances(const Multipole& m, const Anchor& x);

int component_count(const SimpleGraph& g);
std::vector<Row> components(const SimpleGraph& g);
bool is_cyclic(const SimpleGraph& g);
// True when g is connected, 2-regular and has exactly len vertices.
bool is_single_cycle(const SimpleGraph& g, int len);

enum class Triviality { Trivial, Nontrivial, Undefined };
const char* to_string(Triviality t);

struct StructureReport {
  bool is_regular = false;
  std::optional<int> degree;
  Distance girth;
  bool is_cyclic = false;
  Triviality triviality = Triviality::Undefined;
  int component_count = 0;

  bool is_trivial() const { return triviality == Triviality::Trivial; }
  bool is_nontrivial() const { return triviality == Triviality::Nontrivial; }
};

StructureReport classify(const Multipole& m, int k, int g);

// True when m is k-regular with girth >= g and exactly s semiedges.
bool is_kgs_multipole(const Multipole& m, int k, int g, int s);

// Repeatedly removes a vertex of inner degree 1, turning its link into a semiedge,
// and subdivides a cycle link with a new vertex carrying k-2 semiedges.
Multipole eliminate_inner_degree_one(const Multipole& m, int k, int g);

}  // namespace multipole
