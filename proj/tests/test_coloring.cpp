#include <map>
#include <set>

#include "cfclab/construct.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/graph.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace cfclab;
using test_util::make;

namespace {

// every coloring of g over {1..palette} by odometer
std::vector<std::vector<int>> all_colorings(int m, int palette) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 1);
  while (true) {
    out.push_back(cur);
    int pos = m - 1;
    while (pos >= 0 && cur[pos] == palette) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

bool witness_is_sound(const Graph& g, const EdgeColoring& c, const PairWitness& w) {
  if (w.path.front() != w.u || w.path.back() != w.v) return false;
  if (!is_conflict_free_path(g, c, w.path)) return false;
  std::map<int, int> mult;
  for (size_t i = 0; i + 1 < w.path.size(); ++i)
    ++mult[c.colors[g.edge_index(w.path[i], w.path[i + 1])]];
  return mult[w.pivot_color] == 1;
}

}  // namespace

TEST_CASE("make_coloring and normalize") {
  Graph p3 = path_graph(3);
  EdgeColoring c = make_coloring(p3, {5, 9, 5});
  CHECK(c.palette_size == 2);
  normalize_colors(c);
  CHECK(c.colors == std::vector<int>{1, 2, 1});
  CHECK(c.palette_size == 2);

  CHECK_THROWS_WITH_AS(make_coloring(p3, {1, 2}), doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(make_coloring(p3, {1, 0, 2}), doctest::Contains("BadParameters"), Error);
}

TEST_CASE("is_conflict_free_path basics") {
  Graph p2 = path_graph(2);
  EdgeColoring mono = make_coloring(p2, {1, 1});
  CHECK(is_conflict_free_path(p2, mono, {0, 1}));
  CHECK_FALSE(is_conflict_free_path(p2, mono, {0, 1, 2}));

  Graph p3 = path_graph(3);
  EdgeColoring c = make_coloring(p3, {1, 2, 1});
  CHECK(is_conflict_free_path(p3, c, {0, 1, 2, 3}));

  CHECK_THROWS_WITH_AS(is_conflict_free_path(p3, c, {0, 2}), doctest::Contains("NotAPath"), Error);
  CHECK_THROWS_WITH_AS(is_conflict_free_path(p3, c, {0, 1, 0}), doctest::Contains("NotSimple"),
                       Error);
}

TEST_CASE("exists_conflict_free_path named cases") {
  Graph k2 = path_graph(1);
  EdgeColoring any = make_coloring(k2, {1});
  auto w = exists_conflict_free_path(k2, any, 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->path == std::vector<int>{0, 1});

  Graph p3 = path_graph(2);
  EdgeColoring mono = make_coloring(p3, {1, 1});
  CHECK_FALSE(exists_conflict_free_path(p3, mono, 0, 2).has_value());

  Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EdgeColoring mono4 = make_coloring(c4, {1, 1, 1, 1});
  CHECK_FALSE(exists_conflict_free_path(c4, mono4, 0, 2).has_value());
  CHECK_FALSE(exists_conflict_free_path_oracle(c4, mono4, 0, 2).has_value());
  auto adj = exists_conflict_free_path(c4, mono4, 0, 1);
  REQUIRE(adj.has_value());
  CHECK(adj->path.size() == 2);

  CHECK_THROWS_WITH_AS(exists_conflict_free_path(c4, mono4, 1, 1), doctest::Contains("SameVertex"),
                       Error);
  CHECK_THROWS_WITH_AS(exists_conflict_free_path_oracle(c4, mono4, 1, 1),
                       doctest::Contains("SameVertex"), Error);
}

TEST_CASE("checker agrees with the path-enumeration oracle") {
  // exhaustive: every 2-coloring of every connected graph with <= 5 edges
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (g.m() > 5) continue;
      for (const auto& colors : all_colorings(g.m(), 2)) {
        EdgeColoring c = make_coloring(g, colors);
        for (int u = 0; u < g.n(); ++u)
          for (int v = u + 1; v < g.n(); ++v) {
            auto fast = exists_conflict_free_path(g, c, u, v);
            auto slow = exists_conflict_free_path_oracle(g, c, u, v);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(witness_is_sound(g, c, *fast));
            if (slow) CHECK(witness_is_sound(g, c, *slow));
          }
      }
    }
  }
  // sampled: random colorings over random connected graphs
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 150; ++round) {
    Graph g = test_util::random_connected_graph(2 + test_util::rand_below(rng, 6), rng);
    EdgeColoring c = test_util::random_coloring(g, rng);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        CHECK(exists_conflict_free_path(g, c, u, v).has_value() ==
              exists_conflict_free_path_oracle(g, c, u, v).has_value());
  }
}

TEST_CASE("all-pairs decision and certificates") {
  // a rainbow coloring of any connected graph passes
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    Graph g = test_util::random_connected_graph(2 + test_util::rand_below(rng, 6), rng);
    std::vector<int> colors(g.m());
    for (int e = 0; e < g.m(); ++e) colors[e] = e + 1;
    EdgeColoring rainbow = make_coloring(g, colors);
    Certificate cert = is_conflict_free_connected(g, rainbow);
    CHECK(cert.passed);
    CHECK(cert.pairs.size() == static_cast<size_t>(g.n() * (g.n() - 1) / 2));
    for (const PairWitness& w : cert.pairs) CHECK(witness_is_sound(g, rainbow, w));
  }

  Graph p3 = path_graph(2);
  Certificate bad = is_conflict_free_connected(p3, make_coloring(p3, {1, 1}));
  CHECK_FALSE(bad.passed);
  CHECK(bad.failing_pair == std::pair<int, int>{0, 2});

  ColoredGraph h3 = color_H(3);
  Certificate good = is_conflict_free_connected(h3.graph, h3.coloring);
  CHECK(good.passed);
  CHECK(good.pairs.size() == 21);

  CHECK_THROWS_WITH_AS(is_conflict_free_connected(make(2, {}), make_coloring(make(2, {}), {})),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("splitting a color class never breaks a passing coloring") {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 40) {
    Graph g = test_util::random_connected_graph(3 + test_util::rand_below(rng, 4), rng);
    EdgeColoring c = test_util::random_coloring(g, rng);
    Certificate cert = is_conflict_free_connected(g, c);
    if (!cert.passed) continue;
    // split a class with at least two edges into an old and a fresh color
    std::map<int, std::vector<int>> classes;
    for (int e = 0; e < g.m(); ++e) classes[c.colors[e]].push_back(e);
    std::vector<int> big;
    for (auto& [color, edges] : classes)
      if (edges.size() >= 2) big = edges;
    if (big.empty()) continue;
    ++tested;
    EdgeColoring refined = c;
    int fresh = c.palette_size + 100;
    for (size_t i = 0; i < big.size() / 2; ++i) refined.colors[big[i]] = fresh;
    refined.palette_size = count_distinct_colors(refined.colors);
    // the old witness paths stay conflict-free, so the refinement passes
    for (const PairWitness& w : cert.pairs) CHECK(is_conflict_free_path(g, refined, w.path));
    CHECK(is_conflict_free_connected(g, refined).passed);
  }
}

TEST_CASE("certificate json") {
  ColoredGraph h3 = color_H(3);
  Certificate cert = is_conflict_free_connected(h3.graph, h3.coloring);
  auto j = nlohmann::json::parse(certificate_to_json(cert));
  CHECK(j["status"] == "pass");
  CHECK(j["pairs"].size() == 21);
  CHECK(j["pairs"][0].contains("path"));
  CHECK(j["pairs"][0].contains("pivot_color"));

  Graph p3 = path_graph(2);
  auto bad = nlohmann::json::parse(
      certificate_to_json(is_conflict_free_connected(p3, make_coloring(p3, {1, 1}))));
  CHECK(bad["status"] == "fail");
  CHECK(bad["failing_pair"][0] == 0);
  CHECK(bad["failing_pair"][1] == 2);
}
