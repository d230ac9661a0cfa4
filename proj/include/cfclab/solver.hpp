#pragma once

#include <optional>

#include "cfclab/coloring.hpp"
#include "cfclab/graph.hpp"

namespace cfclab {

struct SearchStats {
  long long nodes = 0;               // color assignments tried
  long long colorings_examined = 0;  // complete colorings that passed all checks
  long long prunes = 0;              // abandoned partial colorings
  int budgets_exhausted = 0;
  double wall_ms = 0.0;
};

struct CfcResult {
  int value = 0;
  EdgeColoring witness;
  SearchStats stats;
};

/// Largest applicable lower bound: 1 always, 2 if non-complete, the tree
/// bound max(max degree, ceil(log2 diameter)) for trees, and the cut-edge
/// bound h_value for non-trees with cut-edges.
int cfc_lower_bound(const Graph& g);

/// Exact conflict-free connection number with a verified witness coloring.
/// Iterative deepening over the palette size, enumerating colorings in
/// canonical first-appearance order with a sound prefix prune; budgets below
/// the returned value are exhausted, so minimality never leans on the
/// lower-bound formulas.
CfcResult cfc_exact(const Graph& g, std::optional<int> budget_cap = std::nullopt,
                    int edge_limit = 20);

/// Max of cfc over the components of the cut-edge subgraph.
int h_value(const Graph& g);

/// True iff exactly one component of the cut-edge subgraph attains h(g) and
/// that component has an optimal coloring with some color on exactly one
/// edge. Requires h(g) >= 2.
bool satisfies_lemma5(const Graph& g);

}  // namespace cfclab
