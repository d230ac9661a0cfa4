#include "cfclab/alpha.hpp"

#include <algorithm>
#include <cstdint>

#include "cfclab/error.hpp"

namespace cfclab {

namespace {

// Working view: alive vertices of a fixed graph.
struct MisSearch {
  const Graph& g;
  std::vector<char> alive;

  explicit MisSearch(const Graph& gr) : g(gr), alive(gr.n(), 1) {}

  int alive_degree(int v) const {
    int d = 0;
    for (int w : g.neighbors(v)) d += alive[w];
    return d;
  }

  // Greedy min-degree independent set over `verts` (incumbent / lower bound).
  std::vector<int> greedy_set(const std::vector<int>& verts) const {
    std::vector<char> avail(g.n(), 0);
    for (int v : verts) avail[v] = 1;
    std::vector<int> pool = verts, picked;
    while (!pool.empty()) {
      int pick = -1, pick_deg = g.n() + 1;
      for (int v : pool) {
        int d = 0;
        for (int w : g.neighbors(v)) d += avail[w];
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      picked.push_back(pick);
      avail[pick] = 0;
      for (int w : g.neighbors(pick)) avail[w] = 0;
      std::vector<int> next;
      for (int v : pool)
        if (avail[v]) next.push_back(v);
      pool = std::move(next);
    }
    return picked;
  }

  // n - (greedy maximal matching) is a valid upper bound since the maximal
  // matching is no larger than the maximum one.
  int matching_bound(const std::vector<int>& verts) const {
    std::vector<char> free_v(g.n(), 0);
    for (int v : verts) free_v[v] = 1;
    int matched = 0;
    for (int v : verts) {
      if (!free_v[v]) continue;
      for (int w : g.neighbors(v)) {
        if (w > v && free_v[w]) {
          free_v[v] = free_v[w] = 0;
          ++matched;
          break;
        }
      }
    }
    return static_cast<int>(verts.size()) - matched;
  }

  // Solves the subproblem induced on `verts` (all alive). Applies degree-<=1
  // reductions, then splits into components and branches per component.
  std::vector<int> solve(std::vector<int> verts) {
    std::vector<int> picked;
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (int v : verts) {
        if (!alive[v]) continue;
        if (alive_degree(v) <= 1) {
          // a degree-<=1 vertex is in some maximum independent set
          picked.push_back(v);
          alive[v] = 0;
          for (int w : g.neighbors(v)) alive[w] = 0;
          reduced = true;
        }
      }
      if (reduced) {
        std::vector<int> next;
        for (int v : verts)
          if (alive[v]) next.push_back(v);
        verts = std::move(next);
      }
    }
    if (verts.empty()) return picked;

    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> groups;
    for (int s : verts) {
      if (comp[s] >= 0) continue;
      groups.emplace_back();
      std::vector<int> stack{s};
      comp[s] = static_cast<int>(groups.size()) - 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        groups.back().push_back(v);
        for (int w : g.neighbors(v))
          if (alive[w] && comp[w] < 0) {
            comp[w] = comp[s];
            stack.push_back(w);
          }
      }
    }
    for (auto& group : groups) {
      std::sort(group.begin(), group.end());
      auto part = solve_component(group);
      picked.insert(picked.end(), part.begin(), part.end());
    }
    return picked;
  }

  std::vector<int> solve_component(const std::vector<int>& verts) {
    std::vector<int> incumbent = greedy_set(verts);
    if (static_cast<int>(incumbent.size()) >= matching_bound(verts)) return incumbent;

    // branch on the lowest-index vertex of maximum alive degree
    int pivot = -1, pivot_deg = -1;
    for (int v : verts)
      if (int d = alive_degree(v); d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }

    std::vector<char> saved = alive;

    // include pivot: drop N[pivot]
    alive[pivot] = 0;
    for (int w : g.neighbors(pivot)) alive[w] = 0;
    std::vector<int> rest;
    for (int v : verts)
      if (alive[v]) rest.push_back(v);
    std::vector<int> with_pivot = solve(rest);
    with_pivot.push_back(pivot);
    alive = saved;
    if (with_pivot.size() > incumbent.size()) incumbent = std::move(with_pivot);

    // exclude pivot, only when the bound leaves room for improvement
    alive[pivot] = 0;
    rest.clear();
    for (int v : verts)
      if (alive[v]) rest.push_back(v);
    if (matching_bound(rest) > static_cast<int>(incumbent.size())) {
      std::vector<int> without_pivot = solve(rest);
      if (without_pivot.size() > incumbent.size()) incumbent = std::move(without_pivot);
    }
    alive = saved;
    return incumbent;
  }
};

}  // namespace

AlphaResult independence_number(const Graph& g) {
  if (g.n() == 0) fail(ErrKind::EmptyGraph, "independence number of empty graph");
  MisSearch search(g);
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  AlphaResult out;
  out.witness = search.solve(all);
  std::sort(out.witness.begin(), out.witness.end());
  out.value = static_cast<int>(out.witness.size());
  for (size_t i = 0; i < out.witness.size(); ++i)
    for (size_t j = i + 1; j < out.witness.size(); ++j)
      if (g.adjacent(out.witness[i], out.witness[j]))
        fail(ErrKind::InternalInvariant, "witness not independent");
  return out;
}

AlphaResult independence_number_subset_oracle(const Graph& g) {
  if (g.n() == 0) fail(ErrKind::EmptyGraph, "independence number of empty graph");
  if (g.n() > 20) fail(ErrKind::TooLarge, "subset oracle limited to n <= 20");
  int n = g.n();
  AlphaResult best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best.value) continue;
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    best.value = size;
    best.witness.clear();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) best.witness.push_back(v);
  }
  return best;
}

}  // namespace cfclab
