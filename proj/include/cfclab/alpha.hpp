#pragma once

#include <vector>

#include "cfclab/graph.hpp"

namespace cfclab {

struct AlphaResult {
  int value = 0;
  std::vector<int> witness;  // ascending vertex labels, pairwise non-adjacent
};

/// Exact maximum independent set. Branch and bound on the lowest-index
/// vertex of maximum degree with degree-<=1 reductions and per-component
/// decomposition; a greedy lower bound and an n - matching upper bound
/// prune the search.
AlphaResult independence_number(const Graph& g);

/// Exhaustive subset oracle, n <= 20. Test cross-check only.
AlphaResult independence_number_subset_oracle(const Graph& g);

}  // namespace cfclab
