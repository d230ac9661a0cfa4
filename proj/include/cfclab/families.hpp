#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfclab/graph.hpp"

namespace cfclab {

enum class Family { complete, star, path, H, Q, G_lk, remark1, remark2, random_tree };

std::optional<Family> parse_family(const std::string& name);
const char* to_string(Family f);

/// Parameters: complete/star use n (vertex count), path uses n as the edge
/// count, H/Q/remark1/remark2 use k, G_lk uses n + l + k, random_tree uses
/// n + seed.
struct FamilySpec {
  Family family{};
  int n = 0;
  int k = 0;
  int l = 0;
  std::uint64_t seed = 0;
};

Graph gen(const FamilySpec& spec);

// Fixed labelings (documented in the README):
//   star: center 0, leaves 1..n-1
//   path: vertices 0..m in path order
//   H(k): hub 0, mid ring 1..k, leaves k+1..2k (leg i = 0-i-(k+i))
//   Q(k): H(k) plus pendants 2k+1..3k-2 on legs 3..k
Graph complete_graph(int n);
Graph star_graph(int n);
Graph path_graph(int edges);
Graph H_graph(int k);
Graph Q_graph(int k);
Graph G_lk_graph(int n, int l, int k);
Graph remark1_tree(int k);
Graph remark2_tree(int k);

/// Uniform labeled random tree (random Pruefer string), deterministic per seed.
Graph random_tree(int n, std::uint64_t seed);

Graph tree_from_pruefer(const std::vector<int>& seq, int n);

enum class EnumOrder { forward, reverse };

/// All non-isomorphic trees on n vertices (1 <= n <= 12), grown by leaf
/// augmentation with AHU dedup; output sorted by canonical form. The order
/// parameter changes generation order and labeling, never the result.
std::vector<Graph> enumerate_trees(int n, EnumOrder order = EnumOrder::forward);

/// Full Pruefer-string sweep (n <= 8). Independent cross-check enumerator.
std::vector<Graph> enumerate_trees_pruefer(int n);

/// All non-isomorphic connected graphs on n vertices (1 <= n <= 7) by
/// edge-subset sweep, connectivity filter and canonical dedup.
std::vector<Graph> enumerate_connected_graphs(int n, EnumOrder order = EnumOrder::forward);

}  // namespace cfclab
