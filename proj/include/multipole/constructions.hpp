#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multipole/core.hpp"

namespace multipole::constructions {

enum class Construction { RemoveGCycle, RemovePathSeverEdges, OddJVariant };
const char* to_string(Construction c);

struct ConstructionReport {
  GraphInstance input_cage;
  int k = 0, g = 0, s_target = 0;
  int i = 0, j = 0;
  Construction construction_used = Construction::RemoveGCycle;
  // Removed vertices in the order of the cycle or path (input labels). A path of -1
  // vertices is a subdivided link.
  std::vector<int> removed;
  std::optional<Link> subdivided;
  std::vector<Link> severed;  // input labels
  Multipole output;
  StructureReport verdict;
  int expected_order = 0;
  bool order_bound_met = false;
  // Semiedges left by the printed recipe for the odd case, executed as stated.
  std::optional<int> printed_recipe_semiedges;
  long long candidates_tried = 0;
};

// Conditions (i)-(iii) and 0 < s <= (k-2)g; k + g >= 9 keeps the output nontrivial.
bool construction_applies(int k, int g, int s);

// Throws when the cage is not k-regular of girth g, the conditions fail, or no candidate
// verifies.
ConstructionReport construct_multipole(const GraphInstance& cage, int k, int g, int s);

// One JSON object per report, without a trailing newline.
std::string report_json(const ConstructionReport& r);

// Upper bound n(k,g) - i + (ki+s) mod 2, or n(k,g) - g when s = (k-2)g.
int construction_order(int cage_order, int k, int g, int s);

// n(k,g,s) for g in {3,4}; throws outside the hypotheses.
int exact_value_g34(int k, int g, int s);
bool exact_value_applies(int k, int g, int s);

// n^2 - (k+1)n + s for g = 3 and n^2 - 2kn + 2s for g = 4; nonnegative at every order.
long long g34_quadratic(int k, int g, int s, long long n);

// K_{k+1} for g = 3, K_{k,k} for g = 4.
SimpleGraph small_cage(int k, int g);

}  // namespace multipole::constructions
