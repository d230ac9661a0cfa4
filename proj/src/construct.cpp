#include "cfclab/construct.hpp"

#include <algorithm>
#include <map>

#include "cfclab/alpha.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/solver.hpp"
#include "json.hpp"

namespace cfclab {

namespace {

void verify_or_die(const Graph& g, const EdgeColoring& c, const std::string& who) {
  if (!is_conflict_free_connected(g, c).passed)
    fail(ErrKind::InternalInvariant, who + " produced a coloring that fails verification");
}

int two_adic_valuation(int x) {
  int v = 0;
  while ((x & 1) == 0) {
    x >>= 1;
    ++v;
  }
  return v;
}

int ceil_log2(int x) {
  int t = 0;
  while ((1 << t) < x) ++t;
  return t;
}

}  // namespace

ColoredGraph color_star(int k) {
  if (k < 1) fail(ErrKind::BadParameters, "star coloring needs k >= 1");
  ColoredGraph out{star_graph(k + 1), {}};
  std::vector<int> colors(k);
  for (int e = 0; e < k; ++e) colors[e] = e + 1;
  out.coloring = make_coloring(out.graph, std::move(colors));
  verify_or_die(out.graph, out.coloring, "color_star");
  return out;
}

ColoredGraph color_path_ruler(int m) {
  if (m < 1) fail(ErrKind::BadParameters, "path coloring needs m >= 1");
  ColoredGraph out{path_graph(m), {}};
  std::vector<int> colors(m);
  for (int e = 0; e < m; ++e) colors[e] = 1 + two_adic_valuation(e + 1);
  out.coloring = make_coloring(out.graph, std::move(colors));
  if (out.coloring.palette_size != ceil_log2(m + 1))
    fail(ErrKind::InternalInvariant, "ruler palette size off");
  verify_or_die(out.graph, out.coloring, "color_path_ruler");
  return out;
}

ColoredGraph color_H(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "H_k coloring needs k >= 3");
  ColoredGraph out{H_graph(k), {}};
  std::vector<int> colors(out.graph.m());
  for (int i = 1; i <= k; ++i) {
    colors[out.graph.edge_index(0, i)] = i;
    colors[out.graph.edge_index(i, k + i)] = (i == 1) ? k : i - 1;
  }
  out.coloring = make_coloring(out.graph, std::move(colors));
  if (out.coloring.palette_size != k) fail(ErrKind::InternalInvariant, "H_k palette size off");
  verify_or_die(out.graph, out.coloring, "color_H");
  return out;
}

ColoredGraph color_Q(int k) {
  if (k < 3) fail(ErrKind::KTooSmall, "Q_k coloring needs k >= 3");
  ColoredGraph out{Q_graph(k), {}};
  std::vector<int> colors(out.graph.m());
  for (int i = 1; i <= k; ++i) {
    colors[out.graph.edge_index(0, i)] = i;
    colors[out.graph.edge_index(i, k + i)] = (i == 1) ? k : i - 1;
  }
  for (int i = 3; i <= k; ++i) colors[out.graph.edge_index(k + i, 2 * k + i - 2)] = 1;
  out.coloring = make_coloring(out.graph, std::move(colors));
  if (out.coloring.palette_size != k) fail(ErrKind::InternalInvariant, "Q_k palette size off");
  verify_or_die(out.graph, out.coloring, "color_Q");
  return out;
}

namespace {

std::string edge_label(const Graph& g, int e) {
  return "(" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ")";
}

Graph minus_edge(const Graph& g, int e) {
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < g.m(); ++f)
    if (f != e) pairs.push_back({g.edge(f).u, g.edge(f).v});
  return Graph::from_edge_list(g.n(), pairs);
}

std::vector<int> inverse_map(const std::vector<int>& vertex_map, int n) {
  std::vector<int> inv(n, -1);
  for (size_t i = 0; i < vertex_map.size(); ++i) inv[vertex_map[i]] = static_cast<int>(i);
  return inv;
}

Construction theorem1_rec(const Graph& g);

// Case 2 body: every cut-edge is pendant, g is not a star and not complete.
Construction theorem1_pendant_case(const Graph& g) {
  std::vector<int> bridges = cut_edges(g);
  // pendant edge -> (support, leaf)
  std::map<int, std::vector<int>> star_of;  // support -> pendant edge indices
  for (int e : bridges) {
    auto [a, b] = g.edge(e);
    int leaf = (g.degree(a) == 1) ? a : b;
    int support = (leaf == a) ? b : a;
    if (g.degree(leaf) != 1)
      fail(ErrKind::InternalInvariant, "non-pendant cut-edge reached the pendant case");
    star_of[support].push_back(e);
  }
  int t = 0;
  for (auto& [support, edges] : star_of) {
    std::sort(edges.begin(), edges.end());
    t = std::max(t, static_cast<int>(edges.size()));
  }

  // core = g minus its pendant vertices
  std::vector<int> core_verts;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 2) core_verts.push_back(v);
  std::vector<int> inv = inverse_map(core_verts, g.n());
  std::vector<std::pair<int, int>> core_pairs;
  std::vector<int> core_edge_of;  // core edge position -> parent edge index
  for (int e = 0; e < g.m(); ++e) {
    auto [a, b] = g.edge(e);
    if (inv[a] >= 0 && inv[b] >= 0) {
      core_pairs.push_back({inv[a], inv[b]});
      core_edge_of.push_back(e);
    }
  }
  // core_verts is ascending, so the relabeling is monotone and the sorted
  // core edge list keeps the order core_edge_of was built in
  Graph core = Graph::from_edge_list(static_cast<int>(core_verts.size()), core_pairs);
  if (core.n() < 3 || !is_connected(core) || !cut_edges(core).empty())
    fail(ErrKind::InternalInvariant, "pendant case expects a 2-edge-connected core");

  std::vector<int> colors(g.m(), 0);
  for (auto& [support, edges] : star_of)
    for (size_t i = 0; i < edges.size(); ++i) colors[edges[i]] = static_cast<int>(i) + 1;

  TraceNode node;
  node.label = "pendant fringe + core";
  node.children.push_back({"pendant stars", t, 0, {}});
  bool composed = true;
  if (is_complete(core)) {
    for (int ce = 0; ce < core.m(); ++ce) colors[core_edge_of[ce]] = t + 1;
    node.fresh_colors = 1;
    node.children.push_back({"complete core on a fresh color", 1, 0, {}});
  } else {
    CfcResult sub = cfc_exact(core, 2);
    for (int ce = 0; ce < core.m(); ++ce)
      colors[core_edge_of[ce]] = sub.witness.colors[ce] == 1 ? t + 1 : t;
    node.fresh_colors = 1;
    node.children.push_back({"two-edge-connected core (budget-2 search)", 2, 0, {}});
  }
  EdgeColoring attempt = make_coloring(g, colors);
  if (!is_conflict_free_connected(g, attempt).passed) composed = false;

  if (composed) {
    node.palette = attempt.palette_size;
    return {std::move(attempt), {std::move(node)}};
  }
  // The composition is not guaranteed by the sandwich bound, only the budget
  // is; fall back to bounded search on the whole piece.
  CfcResult res = cfc_exact(g, t + 1);
  TraceNode fb{"pendant case by bounded search (budget h+1)", res.value, 0, {}};
  return {std::move(res.witness), {std::move(fb)}};
}

Construction theorem1_rec(const Graph& g) {
  if (is_complete(g)) {
    EdgeColoring c = make_coloring(g, std::vector<int>(g.m(), 1));
    return {std::move(c), {TraceNode{"complete base", 1, 0, {}}}};
  }
  if (is_two_edge_connected(g)) {
    CfcResult res = cfc_exact(g, 2);
    return {std::move(res.witness),
            {TraceNode{"two-edge-connected block (budget-2 search)", res.value, 0, {}}}};
  }
  std::vector<int> bridges = cut_edges(g);
  for (int e : bridges) {
    Graph rest = minus_edge(g, e);
    std::vector<Subgraph> sides = components(rest);
    if (sides.size() != 2) fail(ErrKind::InternalInvariant, "bridge removal must split in two");
    if (sides[0].graph.n() < 2 || sides[1].graph.n() < 2) continue;
    // Case 1: both sides have order > 1
    if (inverse_map(sides[0].vertex_map, g.n())[g.edge(e).u] < 0) std::swap(sides[0], sides[1]);
    Construction left = theorem1_rec(sides[0].graph);
    Construction right = theorem1_rec(sides[1].graph);
    int shared = std::max(left.coloring.palette_size, right.coloring.palette_size);
    std::vector<int> inv0 = inverse_map(sides[0].vertex_map, g.n());
    std::vector<int> inv1 = inverse_map(sides[1].vertex_map, g.n());
    std::vector<int> colors(g.m(), 0);
    for (int f = 0; f < g.m(); ++f) {
      if (f == e) {
        colors[f] = shared + 1;
        continue;
      }
      auto [a, b] = g.edge(f);
      if (inv0[a] >= 0 && inv0[b] >= 0)
        colors[f] = left.coloring.colors[sides[0].graph.edge_index(inv0[a], inv0[b])];
      else
        colors[f] = right.coloring.colors[sides[1].graph.edge_index(inv1[a], inv1[b])];
    }
    TraceNode node{"Case 1 split at edge " + edge_label(g, e), shared + 1, 1, {}};
    node.children.push_back(std::move(left.trace.root));
    node.children.push_back(std::move(right.trace.root));
    return {make_coloring(g, std::move(colors)), {std::move(node)}};
  }
  // Case 2: every cut-edge is pendant
  if (is_star(g)) {
    std::vector<int> colors(g.m());
    for (int e = 0; e < g.m(); ++e) colors[e] = e + 1;
    return {make_coloring(g, std::move(colors)), {TraceNode{"star", g.m(), 0, {}}}};
  }
  return theorem1_pendant_case(g);
}

}  // namespace

Construction color_via_theorem1(const Graph& g) {
  if (g.n() < 2) fail(ErrKind::BadParameters, "coloring needs n >= 2");
  if (!is_connected(g)) fail(ErrKind::Disconnected, "coloring needs a connected graph");
  Construction out = theorem1_rec(g);
  normalize_colors(out.coloring);
  verify_or_die(g, out.coloring, "color_via_theorem1");
  return out;
}

namespace {

bool theorem2_hypothesis(const Graph& t, int* delta_out = nullptr) {
  int delta = max_degree(t);
  int a = independence_number(t).value;
  if (delta_out) *delta_out = delta;
  return 2 * delta >= a + 2;
}

// Ruler coloring along a path given by an arbitrary labeling.
std::vector<int> ruler_colors_on_path(const Graph& t) {
  int start = -1;
  for (int v = 0; v < t.n(); ++v)
    if (t.degree(v) == 1) {
      start = v;
      break;
    }
  std::vector<int> colors(t.m(), 0);
  int prev = -1, cur = start, step = 0;
  while (step < t.m()) {
    int next = -1;
    for (int w : t.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    colors[t.edge_index(cur, next)] = 1 + two_adic_valuation(step + 1);
    prev = cur;
    cur = next;
    ++step;
  }
  return colors;
}

struct Branch {
  int tip;        // neighbor u_i of the hub
  int edge;       // edge (u, u_i)
  int edge_count; // edges of the component of t - edge containing u_i
  std::vector<int> chain;  // the branch as a path from u_i, when it is one
};

Construction theorem2_rec(const Graph& t);

Construction theorem2_split(const Graph& t, int hub, int tip, const std::string& label) {
  int k = max_degree(t);
  int e = t.edge_index(hub, tip);
  Graph rest = minus_edge(t, e);
  std::vector<Subgraph> sides = components(rest);
  if (sides.size() != 2) fail(ErrKind::InternalInvariant, "tree edge removal must split in two");
  if (inverse_map(sides[0].vertex_map, t.n())[hub] < 0) std::swap(sides[0], sides[1]);
  const Subgraph& hub_side = sides[0];
  const Subgraph& tip_side = sides[1];

  if (!theorem2_hypothesis(hub_side.graph))
    fail(ErrKind::InternalInvariant, "split side lost the degree hypothesis");
  Construction hub_col = theorem2_rec(hub_side.graph);
  if (hub_col.coloring.palette_size != k - 1)
    fail(ErrKind::InternalInvariant, "hub side must use exactly one color less");
  Construction tip_col = color_via_theorem1(tip_side.graph);
  if (tip_col.coloring.palette_size > k - 1)
    fail(ErrKind::InternalInvariant, "tip side exceeded its color budget");

  std::vector<int> inv0 = inverse_map(hub_side.vertex_map, t.n());
  std::vector<int> inv1 = inverse_map(tip_side.vertex_map, t.n());
  std::vector<int> colors(t.m(), 0);
  for (int f = 0; f < t.m(); ++f) {
    if (f == e) {
      colors[f] = k;
      continue;
    }
    auto [a, b] = t.edge(f);
    if (inv0[a] >= 0 && inv0[b] >= 0)
      colors[f] = hub_col.coloring.colors[hub_side.graph.edge_index(inv0[a], inv0[b])];
    else
      colors[f] = tip_col.coloring.colors[tip_side.graph.edge_index(inv1[a], inv1[b])];
  }
  TraceNode node{label + " at edge " + edge_label(t, e), k, 1, {}};
  node.children.push_back(std::move(hub_col.trace.root));
  node.children.push_back(std::move(tip_col.trace.root));
  return {make_coloring(t, std::move(colors)), {std::move(node)}};
}

Construction theorem2_rec(const Graph& t) {
  int k = max_degree(t);
  if (k <= 2) {
    // qualifying trees with maxdeg 2 are the paths with 2 or 3 edges
    if (t.m() < 2 || t.m() > 3)
      fail(ErrKind::InternalInvariant, "qualifying maxdeg-2 tree must have 2 or 3 edges");
    return {make_coloring(t, ruler_colors_on_path(t)), {TraceNode{"path base (ruler)", 2, 0, {}}}};
  }

  int hub = 0;
  for (int v = 1; v < t.n(); ++v)
    if (t.degree(v) > t.degree(hub)) hub = v;
  int mate = -1;  // highest-degree neighbor of the hub
  for (int w : t.neighbors(hub))
    if (mate < 0 || t.degree(w) > t.degree(mate)) mate = w;
  for (int x = 0; x < t.n(); ++x)
    if (x != hub && x != mate && t.degree(x) > k - 1)
      fail(ErrKind::InternalInvariant, "a third vertex carries the maximum degree");

  if (t.degree(mate) == 1) {
    // star
    std::vector<int> colors(t.m());
    for (int e = 0; e < t.m(); ++e) colors[e] = e + 1;
    return {make_coloring(t, std::move(colors)), {TraceNode{"star", k, 0, {}}}};
  }

  // branch structure around the hub
  std::vector<Branch> branches;
  for (int w : t.neighbors(hub)) {
    Branch br{w, t.edge_index(hub, w), 0, {w}};
    // walk away from the hub collecting the branch as long as it is a chain
    int edges = 0;
    bool chain = true;
    int cur = w, prev = hub;
    while (true) {
      std::vector<int> nexts;
      for (int x : t.neighbors(cur))
        if (x != prev) nexts.push_back(x);
      if (nexts.empty()) break;
      edges += static_cast<int>(nexts.size());
      if (nexts.size() > 1) {
        chain = false;
        // count the rest of the subtree
        std::vector<int> todo = nexts;
        std::vector<char> vis(t.n(), 0);
        vis[cur] = 1;
        vis[prev] = 1;
        while (!todo.empty()) {
          int x = todo.back();
          todo.pop_back();
          if (vis[x]) continue;
          vis[x] = 1;
          for (int y : t.neighbors(x))
            if (!vis[y]) {
              todo.push_back(y);
              ++edges;
            }
        }
        break;
      }
      br.chain.push_back(nexts[0]);
      prev = cur;
      cur = nexts[0];
    }
    br.edge_count = edges;
    if (!chain) br.chain.clear();
    branches.push_back(br);
  }

  if (t.degree(mate) == 2) {
    int max_branch = 0;
    for (const Branch& br : branches) max_branch = std::max(max_branch, br.edge_count);
    if (max_branch <= 2) {
      // embed into H_k or Q_k; sort branches by size descending, slots by
      // capacity descending, and read colors off the fixed tables
      std::vector<Branch> sorted = branches;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const Branch& a, const Branch& b) { return a.edge_count > b.edge_count; });
      bool need_q = max_branch == 2;
      std::vector<int> slots;
      if (need_q) {
        int doubles = 0;
        for (const Branch& br : sorted) doubles += br.edge_count == 2;
        if (doubles > k - 2)
          fail(ErrKind::InternalInvariant, "more than k-2 two-edge branches in the Q_k case");
        for (int s = 3; s <= k; ++s) slots.push_back(s);
        slots.push_back(1);
        slots.push_back(2);
      } else {
        for (int s = 1; s <= k; ++s) slots.push_back(s);
      }
      std::vector<int> colors(t.m(), 0);
      for (size_t i = 0; i < sorted.size(); ++i) {
        const Branch& br = sorted[i];
        int slot = slots[i];
        if (br.edge_count == 2 && slot < 3)
          fail(ErrKind::InternalInvariant, "two-edge branch landed on a short slot");
        if (br.chain.empty() && br.edge_count > 0)
          fail(ErrKind::InternalInvariant, "branch of size <= 2 must be a chain");
        colors[br.edge] = slot;
        if (br.edge_count >= 1)
          colors[t.edge_index(br.chain[0], br.chain[1])] = (slot == 1) ? k : slot - 1;
        if (br.edge_count >= 2) colors[t.edge_index(br.chain[1], br.chain[2])] = 1;
      }
      std::string label = need_q ? "Subcase 2.2 embed Q_k" : "Subcase 2.1 embed H_k";
      return {make_coloring(t, std::move(colors)), {TraceNode{label, k, 0, {}}}};
    }
    // Subcase 2.3: split at the lowest-tip branch with >= 3 edges
    int pick = -1;
    for (const Branch& br : branches)
      if (br.edge_count >= 3 && (pick < 0 || br.tip < pick)) pick = br.tip;
    return theorem2_split(t, hub, pick, "Subcase 2.3 split");
  }
  // degree(mate) >= 3
  return theorem2_split(t, hub, mate, "Case 3 split");
}

}  // namespace

Construction color_tree_via_theorem2(const Graph& t) {
  if (!is_tree(t)) fail(ErrKind::NotATree, "theorem2 coloring needs a tree");
  if (t.n() < 2) fail(ErrKind::BadParameters, "coloring needs n >= 2");
  int delta = 0;
  if (!theorem2_hypothesis(t, &delta))
    fail(ErrKind::HypothesisViolated, "tree violates 2*maxdeg >= alpha + 2");
  Construction out = theorem2_rec(t);
  normalize_colors(out.coloring);
  if (out.coloring.palette_size != delta)
    fail(ErrKind::InternalInvariant, "theorem2 coloring must use exactly maxdeg colors");
  verify_or_die(t, out.coloring, "color_tree_via_theorem2");
  return out;
}

namespace {

nlohmann::json trace_node_json(const TraceNode& node) {
  nlohmann::json j;
  j["label"] = node.label;
  j["palette"] = node.palette;
  j["fresh_colors"] = node.fresh_colors;
  j["children"] = nlohmann::json::array();
  for (const TraceNode& child : node.children) j["children"].push_back(trace_node_json(child));
  return j;
}

}  // namespace

std::string trace_to_json(const ConstructionTrace& trace) {
  return trace_node_json(trace.root).dump(2);
}

}  // namespace cfclab
