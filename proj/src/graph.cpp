#include "cfclab/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "cfclab/error.hpp"

namespace cfclab {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) fail(ErrKind::BadParameters, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrKind::VertexOutOfRange,
           "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
    if (a == b) fail(ErrKind::LoopEdge, "loop at vertex " + std::to_string(a));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](Edge x, Edge y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  for (size_t i = 1; i < g.edges_.size(); ++i)
    if (g.edges_[i] == g.edges_[i - 1])
      fail(ErrKind::DuplicateEdge,
           "edge (" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ")");
  g.adj_.assign(n, {});
  g.inc_.assign(n, {});
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges_[e];
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.inc_[u].push_back({v, e});
    g.inc_[v].push_back({u, e});
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_[v].begin(), g.adj_[v].end());
    std::sort(g.inc_[v].begin(), g.inc_[v].end());
  }
  return g;
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  const auto& inc = inc_[u];
  auto it = std::lower_bound(inc.begin(), inc.end(), std::make_pair(v, -1));
  if (it != inc.end() && it->first == v) return it->second;
  return -1;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) fail(ErrKind::EmptyGraph, "connectivity of empty graph");
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

namespace {

int component_count(const Graph& g, const std::vector<char>& edge_alive, int skip_vertex = -1) {
  int n = g.n();
  std::vector<char> seen(n, 0);
  if (skip_vertex >= 0) seen[skip_vertex] = 1;
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, e] : g.incidence(v)) {
        if (!edge_alive[e] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<int> cut_edges(const Graph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  // Enter-edge index is skipped instead of the parent vertex; simple graphs
  // have no parallel edges, so this is equivalent and avoids bookkeeping.
  std::function<void(int, int)> dfs = [&](int v, int enter_edge) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : g.incidence(v)) {
      if (e == enter_edge) continue;
      if (disc[w] == -1) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<int> cut_edges_by_deletion(const Graph& g) {
  std::vector<char> alive(g.m(), 1);
  int base = g.n() == 0 ? 0 : component_count(g, alive);
  std::vector<int> bridges;
  for (int e = 0; e < g.m(); ++e) {
    alive[e] = 0;
    if (component_count(g, alive) == base + 1) bridges.push_back(e);
    alive[e] = 1;
  }
  return bridges;
}

Subgraph cut_edge_subgraph(const Graph& g) {
  std::vector<int> bridges = cut_edges(g);
  std::set<int> verts;
  for (int e : bridges) {
    verts.insert(g.edge(e).u);
    verts.insert(g.edge(e).v);
  }
  Subgraph out;
  out.vertex_map.assign(verts.begin(), verts.end());
  std::vector<int> back(g.n(), -1);
  for (size_t i = 0; i < out.vertex_map.size(); ++i) back[out.vertex_map[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(bridges.size());
  for (int e : bridges) pairs.push_back({back[g.edge(e).u], back[g.edge(e).v]});
  out.graph = Graph::from_edge_list(static_cast<int>(out.vertex_map.size()), pairs);
  return out;
}

std::vector<Subgraph> components(const Graph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = comps;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comps;
          stack.push_back(w);
        }
    }
    ++comps;
  }
  std::vector<Subgraph> out(comps);
  std::vector<int> back(n, -1);
  for (int v = 0; v < n; ++v) {
    back[v] = static_cast<int>(out[comp[v]].vertex_map.size());
    out[comp[v]].vertex_map.push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> pairs(comps);
  for (const Edge& e : g.edges()) pairs[comp[e.u]].push_back({back[e.u], back[e.v]});
  for (int c = 0; c < comps; ++c)
    out[c].graph = Graph::from_edge_list(static_cast<int>(out[c].vertex_map.size()), pairs[c]);
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) fail(ErrKind::Disconnected, "diameter of disconnected graph");
  int n = g.n();
  int best = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      best = std::max(best, dist[v]);
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
  }
  return best;
}

bool is_tree(const Graph& g) {
  if (g.n() == 0) return false;
  return g.m() == g.n() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

bool is_star(const Graph& g) { return g.n() >= 2 && is_tree(g) && max_degree(g) == g.n() - 1; }

bool is_two_edge_connected(const Graph& g) {
  return g.n() >= 2 && is_connected(g) && cut_edges(g).empty();
}

bool has_cut_vertex(const Graph& g) {
  if (g.n() < 3) return false;
  std::vector<char> alive(g.m(), 1);
  int base = component_count(g, alive);
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) continue;
    std::vector<char> rest(g.m(), 1);
    for (auto [w, e] : g.incidence(v)) rest[e] = 0;
    // component count without v: skip v entirely
    if (component_count(g, rest, v) > base) return true;
  }
  return false;
}

namespace {

// --- AHU encoding for trees --------------------------------------------------

std::string ahu_rooted(const Graph& g, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int w : g.neighbors(root))
    if (w != parent) child_codes.push_back(ahu_rooted(g, w, root));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

std::vector<int> tree_centers(const Graph& g) {
  int n = g.n();
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : g.neighbors(v)) {
        if (removed[w]) continue;
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

std::string ahu_tree(const Graph& g) {
  std::vector<int> centers = tree_centers(g);
  if (centers.size() == 1) return "1" + ahu_rooted(g, centers[0], -1);
  std::string a = ahu_rooted(g, centers[0], centers[1]);
  std::string b = ahu_rooted(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "2" + a + b;
}

// --- lexicographic minimum over degree-respecting orderings ------------------

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> target_deg;   // required degree at each position
  std::vector<int> order;        // position -> vertex
  std::vector<char> used;
  std::vector<char> bits;        // candidate bitstring, grown row by row
  std::vector<char> best;
  bool have_best = false;

  explicit CanonSearch(const Graph& gr) : g(gr), n(gr.n()), used(gr.n(), 0) {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::sort(degs.rbegin(), degs.rend());
    target_deg = degs;
    order.resize(n);
  }

  // Compares the current prefix against best afresh each time; best can have
  // changed below a sibling, so no comparison state is carried downward.
  // Returns <0, 0, >0 like memcmp over the shared length.
  int prefix_cmp() const {
    if (!have_best) return -1;
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != best[i]) return bits[i] < best[i] ? -1 : 1;
    }
    return 0;
  }

  void rec(int pos) {
    if (pos == n) {
      if (prefix_cmp() < 0) {
        best = bits;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || g.degree(v) != target_deg[pos]) continue;
      size_t base = bits.size();
      for (int q = 0; q < pos; ++q) bits.push_back(g.adjacent(order[q], v) ? 1 : 0);
      if (prefix_cmp() <= 0) {
        used[v] = 1;
        order[pos] = v;
        rec(pos + 1);
        used[v] = 0;
      }
      bits.resize(base);
    }
  }
};

std::string general_canonical(const Graph& g) {
  CanonSearch search(g);
  search.rec(0);
  std::string out;
  out.reserve(search.best.size() / 8 + 1);
  unsigned char acc = 0;
  int fill = 0;
  for (char b : search.best) {
    acc = static_cast<unsigned char>((acc << 1) | b);
    if (++fill == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      fill = 0;
    }
  }
  if (fill) out.push_back(static_cast<char>(acc << (8 - fill)));
  static const char* hex = "0123456789abcdef";
  std::string hexed;
  hexed.reserve(out.size() * 2);
  for (unsigned char c : out) {
    hexed.push_back(hex[c >> 4]);
    hexed.push_back(hex[c & 0xf]);
  }
  return hexed;
}

}  // namespace

std::string canonical_form(const Graph& g, int brute_limit) {
  if (g.n() == 0) return "G0:";
  if (is_tree(g)) return "T" + std::to_string(g.n()) + ":" + ahu_tree(g);
  if (g.n() > brute_limit)
    fail(ErrKind::TooLarge, "canonical_form on non-tree with n=" + std::to_string(g.n()) +
                                " > limit " + std::to_string(brute_limit));
  return "G" + std::to_string(g.n()) + ":" + general_canonical(g);
}

}  // namespace cfclab
