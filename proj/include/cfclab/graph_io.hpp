#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "cfclab/coloring.hpp"
#include "cfclab/graph.hpp"

namespace cfclab {

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
/// '#' starts a comment anywhere on a line; blank lines are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

/// Colored edge list: "n m" then m lines "u v c" with c >= 1.
std::pair<Graph, EdgeColoring> read_colored_edge_list(std::istream& in);
void write_colored_edge_list(const Graph& g, const EdgeColoring& c, std::ostream& out);

/// graph6 line (de-facto byte layout, optional ">>graph6<<" header tolerated).
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

}  // namespace cfclab
