// Acceptance suite: runs every advertised guarantee end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfclab/alpha.hpp"
#include "cfclab/coloring.hpp"
#include "cfclab/construct.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/graph.hpp"
#include "cfclab/harness.hpp"
#include "cfclab/solver.hpp"

using namespace cfclab;

namespace {

int ceil_log2(int x) {
  int t = 0;
  while ((1 << t) < x) ++t;
  return t;
}

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " edges:";
  for (const Edge& e : g.edges()) out << " " << e.u << "-" << e.v;
  return out.str();
}

// ---- criterion bodies -------------------------------------------------------

void criterion1() {
  for (int m = 1; m <= 10; ++m) {
    int expected = ceil_log2(m + 1);
    int value = cfc_exact(path_graph(m)).value;
    expect(value == expected, "path m=" + std::to_string(m) + " cfc=" + std::to_string(value) +
                                  " expected " + std::to_string(expected));
    ColoredGraph ruler = color_path_ruler(m);
    expect(ruler.coloring.palette_size == expected,
           "ruler m=" + std::to_string(m) + " palette != " + std::to_string(expected));
  }
}

void criterion2() {
  for (int k = 3; k <= 5; ++k) {
    int hv = cfc_exact(H_graph(k)).value;
    expect(hv == k, "H_" + std::to_string(k) + " cfc=" + std::to_string(hv));
    int qv = cfc_exact(Q_graph(k)).value;
    expect(qv == k, "Q_" + std::to_string(k) + " cfc=" + std::to_string(qv));
  }
  for (int k = 3; k <= 8; ++k) {
    ColoredGraph h = color_H(k);  // verifies itself on construction
    expect(h.coloring.palette_size == k, "H coloring palette k=" + std::to_string(k));
    expect(is_conflict_free_connected(h.graph, h.coloring).passed, "H coloring verification");
    ColoredGraph q = color_Q(k);
    expect(q.coloring.palette_size == k, "Q coloring palette k=" + std::to_string(k));
    expect(is_conflict_free_connected(q.graph, q.coloring).passed, "Q coloring verification");
  }
}

void criterion3(Corpus& corpus) {
  for (const Graph& g : corpus.connected_graphs()) {
    int n = g.n();
    int a = corpus.alpha(g);
    int c = corpus.cfc(g);
    expect(1 <= c && c <= a && a <= n - 1, "chain broken on " + describe(g));
    expect((c == 1) == is_complete(g), "cfc=1 iff complete fails on " + describe(g));
    expect((c == n - 1) == is_star(g), "cfc=n-1 iff star fails on " + describe(g));
  }
}

void criterion4(Corpus& corpus, std::uint64_t seed) {
  long long qualifying = 0;
  for (const Graph& t : corpus.trees()) {
    int delta = max_degree(t);
    if (2 * delta < independence_number(t).value + 2) continue;
    ++qualifying;
    expect(corpus.cfc(t) == delta, "exhaustive tree cfc != maxdeg on " + describe(t));
    Construction con = color_tree_via_theorem2(t);
    expect(con.coloring.palette_size == delta, "construction palette on " + describe(t));
    expect(is_conflict_free_connected(t, con.coloring).passed,
           "construction verification on " + describe(t));
  }
  expect(qualifying > 0, "no qualifying tree in the corpus");

  // 100 seeded random qualifying trees with n <= 40
  std::mt19937_64 rng(seed);
  int produced = 0;
  long long attempts = 0;
  while (produced < 100) {
    expect(++attempts < 200000, "qualifying tree sampler stalled");
    int n = 3 + static_cast<int>(rng() % 38);
    Graph t;
    if (rng() % 2 == 0) {
      t = random_tree(n, rng());
    } else {
      int half = std::max(1, n / 2);
      int hub = std::min(n - 1, half + static_cast<int>(rng() % half));
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= hub; ++i) pairs.push_back({0, i});
      for (int v = hub + 1; v < n; ++v)
        pairs.push_back({1 + static_cast<int>(rng() % (v - 1)), v});
      t = Graph::from_edge_list(n, pairs);
    }
    int delta = max_degree(t);
    if (2 * delta < independence_number(t).value + 2) continue;
    ++produced;
    Construction con = color_tree_via_theorem2(t);
    expect(con.coloring.palette_size == delta, "random tree palette on " + describe(t));
    expect(is_conflict_free_connected(t, con.coloring).passed,
           "random tree verification on " + describe(t));
    if (t.m() <= 20)
      expect(cfc_exact(t).value == delta, "random tree optimality on " + describe(t));
  }
}

void criterion5(Corpus& corpus) {
  for (const Graph& g : corpus.connected_graphs()) {
    if (cut_edges(g).empty()) continue;
    int h = h_value(g);
    int c = corpus.cfc(g);
    expect(h <= c && c <= h + 1, "sandwich broken on " + describe(g));
    if (h >= 2 && satisfies_lemma5(g))
      expect(c == h, "unique tight component condition broken on " + describe(g));
  }
}

void criterion6(Corpus& corpus) {
  for (int l = 3; l <= 6; ++l)
    for (int k = 2; k <= l; ++k) {
      Graph g = G_lk_graph(8, l, k);
      int a = independence_number(g).value;
      int c = corpus.cfc(g);
      expect(a == l, "G_lk alpha != l at l=" + std::to_string(l) + " k=" + std::to_string(k));
      expect(c == k, "G_lk cfc != k at l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
}

void criterion7(Corpus& corpus) {
  for (int k = 3; k <= 4; ++k) {
    Graph t = remark1_tree(k);
    int a = independence_number(t).value;
    int delta = max_degree(t);
    int c = corpus.cfc(t);
    expect(c == k && delta == k - 1 && c > delta, "sharpness tree k=" + std::to_string(k));
    expect(2 * delta == a + 1, "sharpness degree identity k=" + std::to_string(k));
  }
  Graph g = remark2_tree(3);
  int a = independence_number(g).value;
  int delta = max_degree(g);
  int c = corpus.cfc(g);
  expect(c == delta && delta == 3, "non-necessity tree value");
  expect(2 * delta < a + 2, "non-necessity tree must fail the hypothesis");
}

void criterion8(Corpus& corpus, std::uint64_t seed) {
  // (a) every 2-coloring of every connected graph with <= 6 edges; a
  // connected graph on 7 vertices with <= 6 edges is a tree
  std::vector<Graph> small;
  for (const Graph& g : corpus.connected_graphs())
    if (g.m() <= 6) small.push_back(g);
  for (const Graph& t : enumerate_trees(7)) small.push_back(t);
  for (const Graph& g : small) {
    std::vector<int> colors(g.m(), 1);
    while (true) {
      EdgeColoring c = make_coloring(g, colors);
      for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
          bool fast = exists_conflict_free_path(g, c, u, v).has_value();
          bool slow = exists_conflict_free_path_oracle(g, c, u, v).has_value();
          expect(fast == slow, "checker/oracle disagree on " + describe(g));
        }
      int pos = g.m() - 1;
      while (pos >= 0 && colors[pos] == 2) colors[pos--] = 1;
      if (pos < 0) break;
      ++colors[pos];
    }
  }
  // (b) 500 seeded random colorings of random connected graphs with n <= 7
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 500; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph tree = random_tree(n, rng());
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : tree.edges()) pairs.push_back({e.u, e.v});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!tree.adjacent(i, j) && rng() % 3 == 0) pairs.push_back({i, j});
    Graph g = Graph::from_edge_list(n, pairs);
    int palette = 1 + static_cast<int>(rng() % g.m());
    std::vector<int> colors(g.m());
    for (int& c : colors) c = 1 + static_cast<int>(rng() % palette);
    EdgeColoring c = make_coloring(g, colors);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        expect(exists_conflict_free_path(g, c, u, v).has_value() ==
                   exists_conflict_free_path_oracle(g, c, u, v).has_value(),
               "checker/oracle disagree on sampled " + describe(g));
  }
}

void criterion9(Corpus& corpus) {
  for (const Graph& g : corpus.connected_graphs()) {
    Construction con = color_via_theorem1(g);
    expect(con.coloring.palette_size <= corpus.alpha(g),
           "constructive palette above alpha on " + describe(g));
    expect(is_conflict_free_connected(g, con.coloring).passed,
           "constructive verification on " + describe(g));
  }
}

void criterion10() {
  std::set<std::string> trees_fwd, trees_rev;
  for (const Graph& t : enumerate_trees(10, EnumOrder::forward))
    trees_fwd.insert(canonical_form(t));
  for (const Graph& t : enumerate_trees(10, EnumOrder::reverse))
    trees_rev.insert(canonical_form(t));
  expect(trees_fwd == trees_rev, "tree enumeration orders disagree");
  expect(trees_fwd.size() == 106, "tree count " + std::to_string(trees_fwd.size()) + " != 106");

  std::set<std::string> graphs_fwd, graphs_rev;
  for (const Graph& g : enumerate_connected_graphs(6, EnumOrder::forward))
    graphs_fwd.insert(canonical_form(g));
  for (const Graph& g : enumerate_connected_graphs(6, EnumOrder::reverse))
    graphs_rev.insert(canonical_form(g));
  expect(graphs_fwd == graphs_rev, "graph enumeration orders disagree");
  expect(graphs_fwd.size() == 112, "graph count " + std::to_string(graphs_fwd.size()) + " != 112");
}

}  // namespace

int main() {
  Corpus corpus(HarnessBounds{6, 10});
  const std::uint64_t seed = 1;

  struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0 = no runtime bound
    std::function<void()> body;
  };
  std::vector<Criterion> criteria{
      {1, "path table m=1..10 and ruler palettes", 10, [&] { criterion1(); }},
      {2, "H_k/Q_k exact values and fixed colorings", 120, [&] { criterion2(); }},
      {3, "1<=cfc<=alpha<=n-1 with characterizations, all n<=6", 600,
       [&] { criterion3(corpus); }},
      {4, "qualifying trees: cfc=maxdeg and constructive colorings", 600,
       [&] { criterion4(corpus, seed); }},
      {5, "h<=cfc<=h+1 and unique-tight-component implication", 0, [&] { criterion5(corpus); }},
      {6, "G_lk grid: alpha=l, cfc=k at n=8", 0, [&] { criterion6(corpus); }},
      {7, "sharpness and non-necessity trees", 0, [&] { criterion7(corpus); }},
      {8, "flow checker vs path oracle equivalence", 0, [&] { criterion8(corpus, seed); }},
      {9, "constructive palette <= alpha, all n<=6", 0, [&] { criterion9(corpus); }},
      {10, "enumeration counts via two orders: 106 trees, 112 graphs", 0, [&] { criterion10(); }},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      crit.body();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = crit.limit_s <= 0 || secs < crit.limit_s;
    bool pass = error.empty() && in_time;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", crit.id,
                crit.title.c_str(), secs,
                crit.limit_s > 0 ? (" / limit " + std::to_string(static_cast<int>(crit.limit_s)) + " s").c_str()
                                 : "");
    if (!error.empty()) std::printf("        %s\n", error.c_str());
    if (!in_time && error.empty()) std::printf("        exceeded runtime limit\n");
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all 10 criteria passed\n");
  return failures ? 1 : 0;
}
