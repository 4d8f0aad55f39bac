#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multipole/bounds.hpp"
#include "multipole/graph.hpp"

namespace multipole::cyclic {

// Chordless cycles as vertex lists: start at the least vertex, second vertex smaller than the
// last. Sorted by length, then lexicographically.
std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, std::optional<int> max_len = std::nullopt);

struct CutCertificate {
  std::vector<Link> cut_edges;  // sorted, u < v
  Row side_a = 0, side_b = 0;
  int size = 0;
  bool side_a_is_g_cycle = false;
  bool side_b_is_g_cycle = false;
};

// Builds the certificate of the cut between side and its complement. g-cycle flags use the
// girth of the graph.
CutCertificate certificate(const SimpleGraph& g, Row side);
// Sides partition the vertices, cut edges are exactly the crossing links, both sides are cyclic.
bool verify_certificate(const SimpleGraph& g, const CutCertificate& c);

struct Options {
  int workers = 1;  // 1 runs the serial reference; 0 lets OpenMP choose
  bool all_min_cuts = false;
  long long budget = 1'000'000;  // closed sets visited while enumerating minimum cuts
};

struct CyclicConnectivityResult {
  std::optional<int> value;  // empty when no cycle-separating cut exists
  std::optional<CutCertificate> witness;
  std::optional<std::vector<CutCertificate>> all_min_cuts;
  bool truncated = false;
  long long pairs_examined = 0;
  long long flow_calls = 0;
};

CyclicConnectivityResult cyclic_edge_connectivity(const SimpleGraph& g, const Options& opt = {});

// Every cycle-separating cut of the minimum size, sorted by edge set. Throws when the
// budget runs out.
std::vector<CutCertificate> all_min_cycle_separating_cuts(const SimpleGraph& g, long long budget = 1'000'000);

enum class Route { Theorem5, MooreGraph, Direct, NoCut };
const char* to_string(Route r);

struct CageReport {
  int k = 0, g = 0, order = 0;
  bounds::Surd threshold;  // 2*b2(k,g,(k-2)g)
  bool below_threshold = false;
  Route route = Route::Direct;
  std::optional<int> value;
  int expected = 0;  // (k-2)g
  long long min_cut_count = 0;
  bool every_min_cut_separates_g_cycle = false;
  bool passed = false;
};

// Throws when g is not k-regular of the given girth.
CageReport verify_cage_theorem(const SimpleGraph& graph, int k, int girth, int workers = 1);

struct CyclicPartReport {
  int c = 0;
  int part_order = 0;       // smaller side of the witness cut
  bool nontrivial = false;  // as a (3,c,c)-multipole
  bool asserted = false;    // the quadratic bound applies
  bool at_least_b2 = false;
  int half_moore = 0;       // ceil(M(3,c)/2)
  int linear_bound = 0;     // 2c - 4
  bool passed = false;
};

// Throws when g is not cubic or has no cycle-separating cut.
CyclicPartReport cyclic_part_bound_check(const SimpleGraph& g, int workers = 1);

// Minimum crossing count over all 2-partitions with both sides cyclic. Independent of the
// pair reduction; limited to 32 vertices.
std::optional<int> partition_oracle(const SimpleGraph& g);
// Whether the subgraph induced by side contains a cycle.
bool has_cycle(const SimpleGraph& g, Row side);

// Induced side of a cut as a multipole: cut edges become semiedges.
Multipole side_multipole(const SimpleGraph& g, Row side, int k);

}  // namespace multipole::cyclic
