#include <set>

#include "cfclab/alpha.hpp"
#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cfclab;
using test_util::make;

namespace {

bool independent(const Graph& g, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("independence number: named families") {
  for (int n = 2; n <= 7; ++n) CHECK(independence_number(complete_graph(n)).value == 1);
  for (int n = 3; n <= 8; ++n) CHECK(independence_number(star_graph(n)).value == n - 1);

  AlphaResult g53 = independence_number(G_lk_graph(8, 5, 3));
  CHECK(g53.value == 5);
  CHECK(independent(G_lk_graph(8, 5, 3), g53.witness));

  // spider value k+1 (leaves plus hub), pinned against the subset oracle
  for (int k = 3; k <= 5; ++k) {
    Graph h = H_graph(k);
    CHECK(independence_number_subset_oracle(h).value == k + 1);
    CHECK(independence_number(h).value == k + 1);
  }
}

TEST_CASE("independence number matches the subset oracle") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      CHECK(independence_number(g).value == independence_number_subset_oracle(g).value);
  for (int n = 2; n <= 10; ++n)
    for (const Graph& t : enumerate_trees(n))
      CHECK(independence_number(t).value == independence_number_subset_oracle(t).value);
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    Graph g = test_util::random_connected_graph(7 + test_util::rand_below(rng, 6), rng);
    CHECK(independence_number(g).value == independence_number_subset_oracle(g).value);
  }
}

TEST_CASE("witness independence and range") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 80; ++round) {
    Graph g = test_util::random_connected_graph(2 + test_util::rand_below(rng, 10), rng);
    AlphaResult res = independence_number(g);
    CHECK(independent(g, res.witness));
    CHECK(static_cast<int>(res.witness.size()) == res.value);
    CHECK(res.value >= 1);
    CHECK(res.value <= g.n() - 1);
  }
  // large trees stay exact and fast through the leaf reduction
  Graph big = random_tree(40, 77);
  AlphaResult res = independence_number(big);
  CHECK(independent(big, res.witness));
  CHECK(res.value >= big.n() / 2 - 5);
}

TEST_CASE("alpha errors") {
  CHECK_THROWS_WITH_AS(independence_number(make(0, {})), doctest::Contains("EmptyGraph"), Error);
  CHECK_THROWS_WITH_AS(independence_number_subset_oracle(random_tree(21, 1)),
                       doctest::Contains("TooLarge"), Error);
}
