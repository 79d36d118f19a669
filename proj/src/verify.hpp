#pragma once

#include <string>
#include <vector>

#include "dual_graph.hpp"

namespace tropgw::verify {

struct CriterionResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

// The acceptance checks, in order. All comparisons are exact.
std::vector<CriterionResult> run_all_criteria();

// Independent generator of all stable dual graph types: labeled trees on
// every possible vertex count (via Pruefer sequences) with every leg
// assignment, filtered by stability and deduplicated by canonical form.
// Exponential in n; intended for n <= 6.
std::vector<DualGraph> brute_force_dual_graphs(int n);

}  // namespace tropgw::verify
