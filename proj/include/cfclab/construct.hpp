#pragma once

#include <string>
#include <vector>

#include "cfclab/coloring.hpp"
#include "cfclab/graph.hpp"

namespace cfclab {

/// Recursion tree of the applied construction steps. Leaves name base cases;
/// fresh_colors counts colors introduced when a node combines its children.
struct TraceNode {
  std::string label;
  int palette = 0;
  int fresh_colors = 0;
  std::vector<TraceNode> children;
};

struct ConstructionTrace {
  TraceNode root;
};

struct Construction {
  EdgeColoring coloring;
  ConstructionTrace trace;
};

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

/// Rainbow coloring of the star with k legs (center 0).
ColoredGraph color_star(int k);

/// Ruler coloring of the path with m edges: edge i gets 1 plus the 2-adic
/// valuation of i, which uses exactly ceil(log2(m+1)) colors.
ColoredGraph color_path_ruler(int m);

/// The fixed k-coloring of H_k: hub edge to leg i gets i, the leg-1 tip gets
/// k, the leg-i tip gets i-1.
ColoredGraph color_H(int k);

/// H_k coloring extended to Q_k: every pendant edge gets color 1.
ColoredGraph color_Q(int k);

/// Induction on cut-edges: split at a non-pendant cut-edge and spend one
/// fresh color on it, or color the pendant fringe plus 2-edge-connected core.
/// Produces a verified coloring with at most alpha(g) colors.
Construction color_via_theorem1(const Graph& g);

/// Tree procedure for trees with 2*maxdeg >= alpha + 2: star / H_k / Q_k
/// embeddings and split-recursion, yielding a verified coloring with exactly
/// maxdeg colors.
Construction color_tree_via_theorem2(const Graph& t);

std::string trace_to_json(const ConstructionTrace& trace);

}  // namespace cfclab
