#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "multipole/graph.hpp"

namespace multipole::search {

struct SearchParams {
  int k = 3, g = 3, s = 0;
  std::optional<int> max_order;
  std::optional<int> min_order;
  int workers = 1;  // 1 runs the serial reference; 0 lets OpenMP choose
  bool assume_min_inner_degree_2 = true;
  // When false, every (k,g,s)-multipole is emitted and s may exceed (k-2)g.
  bool require_nontrivial = true;
  // Stop before the next order once this many nodes have been explored.
  std::optional<long long> node_budget;
};

struct SearchResult {
  std::optional<int> n_value;
  std::optional<Multipole> witness;           // canonical form, least among all hits
  std::map<int, long long> counted_canonical; // isomorphism classes found per searched order
  long long nodes_explored = 0;
  double wall_time = 0;
  int last_order = 0;  // largest order searched
  bool budget_exceeded = false;
};

enum class Backend { Serial, Parallel };

// Orders that pass the parity and degree-sum pre-filter, ascending.
std::vector<int> candidate_orders(const SearchParams& p, int from, int to);

// Calls visit once per isomorphism class of nontrivial (k,g,s)-multipoles on n vertices,
// in a deterministic order, and returns the number of classes.
long long generate(const SearchParams& p, int n, Backend backend,
                   const std::function<void(const Multipole&)>& visit, long long* nodes = nullptr);

// All classes on n vertices in canonical form, sorted by canonical form.
std::vector<Multipole> enumerate_all(const SearchParams& p, int n, Backend backend = Backend::Serial);

SearchResult find_min_nontrivial(const SearchParams& p);

// Independent count of isomorphism classes: labeled realizations of every degree sequence,
// bucketed by canonical form. Intended for n <= 10.
long long brute_force_oracle(int k, int g, int s, int n, bool min_inner_degree_2 = true);

// Lexicographic order on canonical multipoles, used to pick witnesses.
bool canonical_less(const Multipole& a, const Multipole& b);

}  // namespace multipole::search
