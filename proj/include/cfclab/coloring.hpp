#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfclab/graph.hpp"

namespace cfclab {

/// Total assignment of positive colors to the edges of a graph, indexed by
/// edge position. Colors need not be contiguous until normalize_colors.
struct EdgeColoring {
  std::vector<int> colors;
  int palette_size = 0;
};

/// Validates sizes and positivity and computes the palette size.
EdgeColoring make_coloring(const Graph& g, std::vector<int> colors);

/// Renumbers colors by first appearance so they become 1..palette_size.
void normalize_colors(EdgeColoring& c);

int count_distinct_colors(const std::vector<int>& colors);

struct PairWitness {
  int u = 0;
  int v = 0;
  std::vector<int> path;  // vertex sequence from u to v
  int pivot_color = 0;    // color used on exactly one path edge
};

struct Certificate {
  bool passed = false;
  std::vector<PairWitness> pairs;
  std::optional<std::pair<int, int>> failing_pair;
};

/// True iff some color appears on exactly one edge of the path.
bool is_conflict_free_path(const Graph& g, const EdgeColoring& c, const std::vector<int>& path);

/// Production checker. For each candidate pivot edge e with color x, deletes
/// every other x-colored edge and decides whether u and v reach e's endpoints
/// by internally vertex-disjoint paths (unit-vertex-capacity flow), handling
/// the degenerate endpoint cases directly.
std::optional<PairWitness> exists_conflict_free_path(const Graph& g, const EdgeColoring& c,
                                                     int u, int v);

/// Reference oracle: enumerates all simple u-v paths. Only for cross-checks
/// and small graphs; throws PathExplosion past path_cap enumerated paths.
std::optional<PairWitness> exists_conflict_free_path_oracle(const Graph& g, const EdgeColoring& c,
                                                            int u, int v,
                                                            long long path_cap = 10'000'000);

/// All-pairs decision. Returns a witness per unordered pair, or the
/// lexicographically first failing pair.
Certificate is_conflict_free_connected(const Graph& g, const EdgeColoring& c);

std::string certificate_to_json(const Certificate& c);

namespace detail {

/// Existence-only pair check restricted to the edges selected by edge_mask
/// (bit e = edge e usable). Used by the exact solver on partial colorings;
/// requires m <= 64.
bool cf_pair_decided(const Graph& g, const std::vector<int>& colors, std::uint64_t edge_mask,
                     int u, int v);

}  // namespace detail

}  // namespace cfclab
