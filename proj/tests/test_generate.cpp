#include <doctest.h>

#include <set>

#include "cobox/blocks.hpp"
#include "cobox/generate.hpp"
#include "cobox/graph_io.hpp"

using namespace cobox;

TEST_CASE("free tree counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    const auto trees = free_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    std::set<std::string> seen;
    for (const Graph& t : trees) {
      CHECK(t.vertex_count() == n);
      CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
      CHECK(connected_components(t).size() == 1);
      seen.insert(write_edgelist(t));
    }
    CHECK(seen.size() == trees.size());
  }
  CHECK_THROWS_AS(free_trees(0), InputError);
}

TEST_CASE("generators are deterministic") {
  for (std::uint64_t seed : {0ull, 7ull, 12345ull}) {
    CHECK(random_block_graph(60, seed) == random_block_graph(60, seed));
    CHECK(random_block_forest(60, seed) == random_block_forest(60, seed));
    CHECK(random_graph(20, 0.3, seed) == random_graph(20, 0.3, seed));
  }
  CHECK_FALSE(random_block_graph(60, 1) == random_block_graph(60, 2));
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform(-3, 17) == b.uniform(-3, 17));
}

TEST_CASE("rng ranges") {
  Rng rng(3);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 6000; ++i) {
    const auto x = rng.uniform(0, 5);
    REQUIRE(x >= 0);
    REQUIRE(x <= 5);
    ++hits[x];
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int h : hits) CHECK(h > 800);
  CHECK(rng.uniform(4, 4) == 4);
}

TEST_CASE("generated graphs are block graphs of the requested size") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 200));
    const Graph g = random_block_graph(n, rng.next());
    CHECK(g.vertex_count() == n);
    CHECK(is_block_graph(g));
    CHECK(connected_components(g).size() == 1);
    const Graph f = random_block_forest(n, rng.next());
    CHECK(f.vertex_count() == n);
    CHECK(is_block_graph(f));
  }
  BlockSizeDistribution trees;
  trees.p_edge = 1.0;
  const Graph t = random_block_graph(50, 4, trees);
  CHECK(t.edge_count() == 49);
  BlockSizeDistribution big;
  big.p_edge = 0.0;
  big.min_clique = big.max_clique = 4;
  for (const VertexSet& b : block_decomposition(random_block_graph(40, 5, big)).blocks) CHECK(b.size() <= 4);
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(random_block_graph(0, 1), InputError);
  BlockSizeDistribution bad;
  bad.p_edge = 1.5;
  CHECK_THROWS_AS(random_block_graph(5, 1, bad), InputError);
  bad = {};
  bad.min_clique = 1;
  CHECK_THROWS_AS(random_block_graph(5, 1, bad), InputError);
  bad = {};
  bad.min_clique = 6;
  bad.max_clique = 4;
  CHECK_THROWS_AS(random_block_graph(5, 1, bad), InputError);
  CHECK_THROWS_AS(random_graph(5, -0.1, 1), InputError);
  CHECK_THROWS_AS(path_graph(-1), InputError);
}

TEST_CASE("named graphs and orderings") {
  CHECK(path_graph(4).edges() == EdgeList{{0, 1}, {1, 2}, {2, 3}});
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(star_graph(3).degree(0) == 3);
  CHECK(path_graph(0).vertex_count() == 0);
  Rng rng(1);
  const Graph g = random_block_graph(30, 8);
  auto order = random_ordering(g, rng);
  std::sort(order.begin(), order.end());
  CHECK(order == g.vertices());
}
