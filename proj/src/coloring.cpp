#include "cfclab/coloring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "cfclab/error.hpp"
#include "json.hpp"

namespace cfclab {

EdgeColoring make_coloring(const Graph& g, std::vector<int> colors) {
  if (static_cast<int>(colors.size()) != g.m())
    fail(ErrKind::BadParameters, "coloring size " + std::to_string(colors.size()) +
                                     " != edge count " + std::to_string(g.m()));
  for (int c : colors)
    if (c < 1) fail(ErrKind::BadParameters, "color " + std::to_string(c) + " < 1");
  EdgeColoring out{std::move(colors), 0};
  out.palette_size = count_distinct_colors(out.colors);
  return out;
}

int count_distinct_colors(const std::vector<int>& colors) {
  std::vector<int> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void normalize_colors(EdgeColoring& c) {
  std::map<int, int> remap;
  for (int& col : c.colors) {
    auto [it, fresh] = remap.insert({col, static_cast<int>(remap.size()) + 1});
    (void)fresh;
    col = it->second;
  }
  c.palette_size = static_cast<int>(remap.size());
}

bool is_conflict_free_path(const Graph& g, const EdgeColoring& c, const std::vector<int>& path) {
  if (path.size() < 2) fail(ErrKind::NotAPath, "path needs at least two vertices");
  std::vector<char> seen(g.n(), 0);
  for (int v : path) {
    if (v < 0 || v >= g.n()) fail(ErrKind::VertexOutOfRange, "path vertex " + std::to_string(v));
    if (seen[v]) fail(ErrKind::NotSimple, "vertex " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
  std::map<int, int> mult;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int e = g.edge_index(path[i], path[i + 1]);
    if (e < 0)
      fail(ErrKind::NotAPath,
           "no edge (" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + ")");
    ++mult[c.colors[e]];
  }
  for (auto [color, count] : mult)
    if (count == 1) return true;
  return false;
}

namespace {

// Unit-capacity max-flow on a vertex-split digraph. The pivot reduction
// needs at most two augmentations per query.
struct SplitFlow {
  int nodes;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit SplitFlow(int node_count) : nodes(node_count), out(node_count) {}

  void add(int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  }

  bool augment(int s, int t) {
    std::vector<int> via(nodes, -1);
    std::queue<int> q;
    q.push(s);
    via[s] = -2;
    while (!q.empty() && via[t] == -1) {
      int v = q.front();
      q.pop();
      for (int id : out[v]) {
        if (arcs[id].cap <= 0 || via[arcs[id].to] != -1) continue;
        via[arcs[id].to] = id;
        q.push(arcs[id].to);
      }
    }
    if (via[t] == -1) return false;
    for (int v = t; v != s;) {
      int id = via[v];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      v = arcs[id ^ 1].to;
    }
    return true;
  }
};

// One pivot-edge query: which edges are usable and the path primitives on
// them. mask == nullptr means every edge is usable.
struct PivotQuery {
  const Graph& g;
  const std::vector<int>& colors;
  const std::uint64_t* mask;

  bool edge_usable(int e, int pivot, int pivot_color) const {
    if (mask && !((*mask >> e) & 1)) return false;
    if (e == pivot) return false;
    return colors[e] != pivot_color;
  }

  // Shortest a..b path over usable edges that avoids vertex `forbidden`.
  std::optional<std::vector<int>> simple_path_avoiding(int a, int b, int forbidden, int pivot,
                                                       int pivot_color) const {
    std::vector<int> prev(g.n(), -1);
    std::queue<int> q;
    q.push(a);
    prev[a] = a;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == b) break;
      for (auto [w, e] : g.incidence(v)) {
        if (w == forbidden || prev[w] != -1 || !edge_usable(e, pivot, pivot_color)) continue;
        prev[w] = v;
        q.push(w);
      }
    }
    if (prev[b] == -1) return std::nullopt;
    std::vector<int> path;
    for (int v = b; v != a; v = prev[v]) path.push_back(v);
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Two vertex-disjoint paths from {u, v} onto {x, y}, either pairing.
  // Returns the combined simple u..v path through the pivot edge.
  std::optional<std::vector<int>> disjoint_link(int u, int v, int x, int y, int pivot,
                                                int pivot_color) const {
    int n = g.n();
    // in(w) = 2w, out(w) = 2w+1, source = 2n, sink = 2n+1
    SplitFlow net(2 * n + 2);
    for (int w = 0; w < n; ++w) net.add(2 * w, 2 * w + 1, 1);
    for (int e = 0; e < g.m(); ++e) {
      if (!edge_usable(e, pivot, pivot_color)) continue;
      auto [a, b] = g.edge(e);
      net.add(2 * a + 1, 2 * b, 1);
      net.add(2 * b + 1, 2 * a, 1);
    }
    int s = 2 * n, t = 2 * n + 1;
    net.add(s, 2 * u, 1);
    net.add(s, 2 * v, 1);
    net.add(2 * x + 1, t, 1);
    net.add(2 * y + 1, t, 1);
    if (!net.augment(s, t)) return std::nullopt;
    if (!net.augment(s, t)) return std::nullopt;
    // Unit vertex capacities make the flow through each vertex unique, so
    // following saturated forward arcs from a source vertex walks exactly
    // its own unit until it exits at x or y.
    auto walk = [&](int start) {
      std::vector<int> path{start};
      int cur = start;
      while (cur != x && cur != y) {
        int next = -1;
        for (int id : net.out[2 * cur + 1]) {
          if (id % 2 != 0) continue;            // skip reverse arcs
          if (net.arcs[id].cap != 0) continue;  // need a saturated arc
          int to = net.arcs[id].to;
          if (to == t || to % 2 != 0) continue;
          next = to / 2;
          break;
        }
        if (next < 0) return std::vector<int>{};
        path.push_back(next);
        cur = next;
      }
      return path;
    };
    std::vector<int> from_u = walk(u);
    std::vector<int> from_v = walk(v);
    if (from_u.empty() || from_v.empty() || from_u.back() == from_v.back()) return std::nullopt;
    std::vector<int> full = from_u;  // u .. x (or y)
    full.insert(full.end(), from_v.rbegin(), from_v.rend());  // crosses the pivot edge
    return full;
  }
};

std::optional<PairWitness> pivot_search(const Graph& g, const std::vector<int>& colors,
                                        const std::uint64_t* mask, int u, int v,
                                        bool build_witness) {
  PivotQuery query{g, colors, mask};
  for (int e = 0; e < g.m(); ++e) {
    if (mask && !((*mask >> e) & 1)) continue;
    auto [x, y] = g.edge(e);
    int chi = colors[e];
    if ((u == x && v == y) || (u == y && v == x)) return PairWitness{u, v, {u, v}, chi};
    std::optional<std::vector<int>> path;
    if (u == x || u == y) {
      int gate = (u == x) ? y : x;
      auto tail = query.simple_path_avoiding(gate, v, u, e, chi);
      if (tail) {
        path = std::vector<int>{u};
        path->insert(path->end(), tail->begin(), tail->end());
      }
    } else if (v == x || v == y) {
      int gate = (v == x) ? y : x;
      auto tail = query.simple_path_avoiding(gate, u, v, e, chi);
      if (tail) {
        path = std::vector<int>(tail->rbegin(), tail->rend());
        path->push_back(v);
      }
    } else {
      path = query.disjoint_link(u, v, x, y, e, chi);
    }
    if (path) {
      if (!build_witness) return PairWitness{u, v, {}, chi};
      return PairWitness{u, v, *path, chi};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PairWitness> exists_conflict_free_path(const Graph& g, const EdgeColoring& c,
                                                     int u, int v) {
  if (u == v) fail(ErrKind::SameVertex, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) fail(ErrKind::VertexOutOfRange, "pair endpoint");
  auto witness = pivot_search(g, c.colors, nullptr, u, v, true);
  if (witness && !is_conflict_free_path(g, c, witness->path))
    fail(ErrKind::InternalInvariant, "constructed witness is not conflict-free");
  return witness;
}

std::optional<PairWitness> exists_conflict_free_path_oracle(const Graph& g, const EdgeColoring& c,
                                                            int u, int v, long long path_cap) {
  if (u == v) fail(ErrKind::SameVertex, "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) fail(ErrKind::VertexOutOfRange, "pair endpoint");
  std::vector<char> on_path(g.n(), 0);
  std::vector<int> path{u};
  on_path[u] = 1;
  long long enumerated = 0;
  std::optional<PairWitness> found;

  std::function<bool(int)> dfs = [&](int at) {
    if (at == v) {
      if (++enumerated > path_cap)
        fail(ErrKind::PathExplosion, "more than " + std::to_string(path_cap) + " simple paths");
      if (is_conflict_free_path(g, c, path)) {
        PairWitness w{u, v, path, 0};
        std::map<int, int> mult;
        for (size_t i = 0; i + 1 < path.size(); ++i)
          ++mult[c.colors[g.edge_index(path[i], path[i + 1])]];
        for (auto [color, count] : mult)
          if (count == 1) {
            w.pivot_color = color;
            break;
          }
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (int w : g.neighbors(at)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      bool done = dfs(w);
      path.pop_back();
      on_path[w] = 0;
      if (done) return true;
    }
    return false;
  };
  dfs(u);
  return found;
}

Certificate is_conflict_free_connected(const Graph& g, const EdgeColoring& c) {
  if (!is_connected(g))
    fail(ErrKind::Disconnected, "conflict-free connectivity needs a connected graph");
  Certificate cert;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      auto w = exists_conflict_free_path(g, c, u, v);
      if (!w) {
        cert.passed = false;
        cert.pairs.clear();
        cert.failing_pair = {u, v};
        return cert;
      }
      cert.pairs.push_back(std::move(*w));
    }
  cert.passed = true;
  return cert;
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["status"] = c.passed ? "pass" : "fail";
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : c.pairs)
    j["pairs"].push_back({{"u", p.u}, {"v", p.v}, {"path", p.path}, {"pivot_color", p.pivot_color}});
  if (c.failing_pair) j["failing_pair"] = {c.failing_pair->first, c.failing_pair->second};
  return j.dump(2);
}

namespace detail {

bool cf_pair_decided(const Graph& g, const std::vector<int>& colors, std::uint64_t edge_mask,
                     int u, int v) {
  int direct = g.edge_index(u, v);
  if (direct >= 0 && ((edge_mask >> direct) & 1)) return true;
  return pivot_search(g, colors, &edge_mask, u, v, false).has_value();
}

}  // namespace detail

}  // namespace cfclab
