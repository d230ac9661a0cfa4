#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cfclab {

struct Edge {
  int u;  // smaller endpoint
  int v;  // larger endpoint
};

inline bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }

/// Immutable simple undirected graph on vertices 0..n-1. The edge list is
/// stored sorted by (u, v) and all queries go through precomputed adjacency.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered vertex pairs. Rejects loops, duplicate
  /// edges and endpoints outside 0..n-1.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(int e) const { return edges_[e]; }

  /// Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  /// (neighbor, edge index) pairs of v, ascending by neighbor.
  const std::vector<std::pair<int, int>>& incidence(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Index of edge {u, v}, or -1 if absent.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
};

/// A piece of a graph with its vertices relabeled to 0..k-1.
/// vertex_map[new_label] = label in the original graph.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_map;
};

bool is_connected(const Graph& g);

/// Bridges of g as sorted edge indices (lowpoint DFS).
std::vector<int> cut_edges(const Graph& g);

/// Definitional bridge oracle: e is a bridge iff deleting it adds a component.
/// Kept independent of cut_edges for cross-validation.
std::vector<int> cut_edges_by_deletion(const Graph& g);

/// Subgraph whose vertices are the endpoints of cut-edges and whose edges are
/// exactly the cut-edges.
Subgraph cut_edge_subgraph(const Graph& g);

/// Connected components, each relabeled with its vertex mapping.
std::vector<Subgraph> components(const Graph& g);

int max_degree(const Graph& g);
int diameter(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_star(const Graph& g);
bool is_two_edge_connected(const Graph& g);
bool has_cut_vertex(const Graph& g);

/// Label-invariant encoding: equal strings iff the graphs are isomorphic.
/// Trees use AHU center-rooted encoding (any n); other graphs use pruned
/// brute force over degree-respecting vertex orderings (n <= brute_limit).
std::string canonical_form(const Graph& g, int brute_limit = 10);

}  // namespace cfclab
