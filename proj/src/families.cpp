#include "cfclab/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cfclab/error.hpp"

namespace cfclab {

std::optional<Family> parse_family(const std::string& name) {
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "path") return Family::path;
  if (name == "H" || name == "h") return Family::H;
  if (name == "Q" || name == "q") return Family::Q;
  if (name == "G_lk" || name == "g_lk" || name == "glk") return Family::G_lk;
  if (name == "remark1") return Family::remark1;
  if (name == "remark2") return Family::remark2;
  if (name == "random_tree") return Family::random_tree;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::H: return "H";
    case Family::Q: return "Q";
    case Family::G_lk: return "G_lk";
    case Family::remark1: return "remark1";
    case Family::remark2: return "remark2";
    case Family::random_tree: return "random_tree";
  }
  return "?";
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrKind::BadParameters, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  return Graph::from_edge_list(n, pairs);
}

Graph star_graph(int n) {
  if (n < 1) fail(ErrKind::BadParameters, "star graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.push_back({0, i});
  return Graph::from_edge_list(n, pairs);
}

Graph path_graph(int edges) {
  if (edges < 1) fail(ErrKind::BadParameters, "path needs at least one edge");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < edges; ++i) pairs.push_back({i, i + 1});
  return Graph::from_edge_list(edges + 1, pairs);
}

Graph H_graph(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "H_k needs k >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) {
    pairs.push_back({0, i});
    pairs.push_back({i, k + i});
  }
  return Graph::from_edge_list(2 * k + 1, pairs);
}

Graph Q_graph(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "Q_k needs k >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) {
    pairs.push_back({0, i});
    pairs.push_back({i, k + i});
  }
  // pendants on the leaves of legs 3..k
  for (int i = 3; i <= k; ++i) pairs.push_back({k + i, 2 * k + i - 2});
  return Graph::from_edge_list(3 * k - 1, pairs);
}

Graph G_lk_graph(int n, int l, int k) {
  if (!(3 <= l && l <= n - 2)) fail(ErrKind::BadParameters, "G_lk needs 3 <= l <= n-2");
  if (!(2 <= k && k <= l)) fail(ErrKind::BadParameters, "G_lk needs 2 <= k <= l");
  std::vector<std::pair<int, int>> pairs;
  if (k == l) {
    // star K_{1,l} with leaf l identified with a vertex of K_{n-l}
    for (int i = 1; i <= l; ++i) pairs.push_back({0, i});
    for (int i = l; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return Graph::from_edge_list(n, pairs);
  }
  // w = 0, v = 1, u_i = 1 + i for 1 <= i <= n-2
  auto u = [](int i) { return 1 + i; };
  for (int i = 1; i <= n - 2; ++i) pairs.push_back({0, u(i)});
  for (int i = k + 1; i <= n - 2; ++i) pairs.push_back({1, u(i)});
  pairs.push_back({0, 1});
  for (int i = l; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) pairs.push_back({u(i), u(j)});
  return Graph::from_edge_list(n, pairs);
}

Graph remark1_tree(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "remark1 tree needs k >= 3");
  // two stars K_{1,k-1} sharing one leaf:
  // center a = 0, own leaves 1..k-2, shared leaf w = k-1, center b = k,
  // b's own leaves k+1..2k-2
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k - 1; ++i) pairs.push_back({0, i});
  pairs.push_back({k, k - 1});
  for (int i = k + 1; i <= 2 * k - 2; ++i) pairs.push_back({k, i});
  return Graph::from_edge_list(2 * k - 1, pairs);
}

Graph remark2_tree(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "remark2 tree needs k >= 3");
  // two stars K_{1,k} with an edge joining leaf k to leaf k+2
  // centers 0 and k+1, leaves 1..k and k+2..2k+1
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) pairs.push_back({0, i});
  for (int i = k + 2; i <= 2 * k + 1; ++i) pairs.push_back({k + 1, i});
  pairs.push_back({k, k + 2});
  return Graph::from_edge_list(2 * k + 2, pairs);
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 1) fail(ErrKind::BadParameters, "tree needs n >= 1");
  if (static_cast<int>(seq.size()) != std::max(0, n - 2))
    fail(ErrKind::BadParameters, "Pruefer string must have n-2 entries");
  if (n == 1) return Graph::from_edge_list(1, {});
  std::vector<int> deg(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) fail(ErrKind::VertexOutOfRange, "Pruefer entry " + std::to_string(v));
    ++deg[v];
  }
  std::vector<std::pair<int, int>> pairs;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int v : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    pairs.push_back({leaf, v});
    if (--deg[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  pairs.push_back({a, b});
  return Graph::from_edge_list(n, pairs);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrKind::BadParameters, "tree needs n >= 1");
  if (n == 1) return Graph::from_edge_list(1, {});
  if (n == 2) return path_graph(1);
  std::mt19937_64 rng(seed);
  std::vector<int> seq(n - 2);
  // modulo reduction keeps the stream identical across standard libraries
  for (int& v : seq) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  return tree_from_pruefer(seq, n);
}

Graph gen(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::star: return star_graph(spec.n);
    case Family::path: return path_graph(spec.n);
    case Family::H: return H_graph(spec.k);
    case Family::Q: return Q_graph(spec.k);
    case Family::G_lk: return G_lk_graph(spec.n, spec.l, spec.k);
    case Family::remark1: return remark1_tree(spec.k);
    case Family::remark2: return remark2_tree(spec.k);
    case Family::random_tree: return random_tree(spec.n, spec.seed);
  }
  fail(ErrKind::BadParameters, "unknown family");
}

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.m());
  for (const Edge& e : g.edges()) pairs.push_back({perm[e.u], perm[e.v]});
  return Graph::from_edge_list(g.n(), pairs);
}

std::vector<Graph> sorted_by_canonical(std::map<std::string, Graph>&& by_form) {
  std::vector<Graph> out;
  out.reserve(by_form.size());
  for (auto& [form, graph] : by_form) out.push_back(std::move(graph));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n, EnumOrder order) {
  if (n < 1 || n > 12) fail(ErrKind::TooLarge, "tree enumeration supports 1 <= n <= 12");
  std::vector<Graph> level{Graph::from_edge_list(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      for (int step = 0; step < size - 1; ++step) {
        int attach = order == EnumOrder::forward ? step : size - 2 - step;
        std::vector<std::pair<int, int>> pairs;
        for (const Edge& e : t.edges()) pairs.push_back({e.u, e.v});
        pairs.push_back({attach, size - 1});
        Graph grown = Graph::from_edge_list(size, pairs);
        if (order == EnumOrder::reverse) {
          // stress label invariance: store a reversed labeling
          std::vector<int> perm(size);
          for (int v = 0; v < size; ++v) perm[v] = size - 1 - v;
          grown = relabel(grown, perm);
        }
        next.insert({canonical_form(grown), grown});
      }
    }
    level = sorted_by_canonical(std::move(next));
  }
  return level;
}

std::vector<Graph> enumerate_trees_pruefer(int n) {
  if (n < 1 || n > 8) fail(ErrKind::TooLarge, "Pruefer sweep supports 1 <= n <= 8");
  if (n <= 2) return {n == 1 ? Graph::from_edge_list(1, {}) : path_graph(1)};
  std::map<std::string, Graph> by_form;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Graph t = tree_from_pruefer(seq, n);
    by_form.insert({canonical_form(t), t});
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return sorted_by_canonical(std::move(by_form));
}

std::vector<Graph> enumerate_connected_graphs(int n, EnumOrder order) {
  if (n < 1 || n > 7) fail(ErrKind::TooLarge, "graph enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  int bits = static_cast<int>(slots.size());
  std::map<std::string, Graph> by_form;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = order == EnumOrder::forward ? v : n - 1 - v;
  for (std::uint32_t step = 0; step < (1u << bits); ++step) {
    std::uint32_t mask = order == EnumOrder::forward ? step : ((1u << bits) - 1) - step;
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1) pairs.push_back({perm[slots[b].first], perm[slots[b].second]});
    Graph g = Graph::from_edge_list(n, pairs);
    if (!is_connected(g)) continue;
    std::string form = canonical_form(g);
    by_form.insert({std::move(form), std::move(g)});
  }
  return sorted_by_canonical(std::move(by_form));
}

}  // namespace cfclab
