#include <doctest.h>

#include <algorithm>

#include "cobox/cointerval.hpp"
#include "cobox/cover.hpp"
#include "cobox/generate.hpp"
#include "cobox/oracle.hpp"

using namespace cobox;

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges) { return build_graph(n, edges); }

const OracleOptions general{9, 16, false};

}  // namespace

TEST_CASE("maximal edge set examples") {
  const Graph k3 = complete_graph(3);
  CHECK(enumerate_maximal_cointerval_edge_sets(k3, general) == std::vector<EdgeList>{k3.edges()});
  CHECK(enumerate_maximal_cointerval_edge_sets(path_graph(3), general) == std::vector<EdgeList>{{{0, 1}, {1, 2}}});
  CHECK(enumerate_maximal_cointerval_edge_sets(make(4, {{0, 1}, {2, 3}}), general) ==
        std::vector<EdgeList>{{{0, 1}}, {{2, 3}}});
  CHECK(enumerate_maximal_threshold_edge_sets(path_graph(4), general) ==
        std::vector<EdgeList>{{{0, 1}, {1, 2}}, {{1, 2}, {2, 3}}});
  CHECK(enumerate_maximal_cointerval_edge_sets(Graph(3), general).empty());
}

TEST_CASE("both enumeration routes agree on block graphs") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_block_forest(static_cast<int>(rng.uniform(1, 9)), rng.next());
    CHECK(enumerate_maximal_cointerval_edge_sets(g) == enumerate_maximal_cointerval_edge_sets(g, general));
    CHECK(enumerate_maximal_threshold_edge_sets(g) == enumerate_maximal_threshold_edge_sets(g, general));
  }
}

TEST_CASE("threshold enumeration against subset search") {
  // every threshold edge subset of a small graph lies inside some listed set
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(static_cast<int>(rng.uniform(2, 6)), 0.3 + 0.5 * rng.unit(), rng.next());
    const EdgeList edges = g.edges();
    if (edges.size() > 12) continue;
    const auto listed = enumerate_maximal_threshold_edge_sets(g, general);
    for (const EdgeList& s : listed) CHECK(is_threshold(subgraph_from_edges(s).as_graph()));
    for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
      EdgeList sub;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask >> i & 1u) sub.push_back(edges[i]);
      }
      const bool threshold = is_threshold(subgraph_from_edges(sub).as_graph());
      const bool inside = std::any_of(listed.begin(), listed.end(), [&](const EdgeList& s) {
        return std::includes(s.begin(), s.end(), sub.begin(), sub.end());
      });
      if (threshold) CHECK(inside);
    }
  }
}

TEST_CASE("exact set cover") {
  SetCoverInstance inst;
  inst.universe_size = 4;
  inst.candidates = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  SetCoverSolution s = min_set_cover_exact(inst);
  CHECK(s.size == 2);
  CHECK(s.witness.size() == 2);

  inst.candidates = {{0, 1, 2, 3}, {0}};
  CHECK(min_set_cover_exact(inst).size == 1);

  inst.candidates = {{0, 1}, {2}};
  CHECK_THROWS_AS(min_set_cover_exact(inst), InfeasibleError);

  SetCoverInstance empty;
  CHECK(min_set_cover_exact(empty).size == 0);

  // five elements in a cycle, pairs only: three sets
  SetCoverInstance cyc;
  cyc.universe_size = 5;
  cyc.candidates = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  s = min_set_cover_exact(cyc);
  CHECK(s.size == 3);
  std::vector<bool> hit(5, false);
  for (std::size_t c : s.witness) {
    for (std::size_t e : cyc.candidates[c]) hit[e] = true;
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("brute values") {
  CHECK(brute_coboxicity(path_graph(5)) == 2);
  CHECK(brute_coboxicity(path_graph(4), general) == 1);
  CHECK(brute_coboxicity(make(4, {{0, 1}, {2, 3}}), general) == 2);
  CHECK(brute_coboxicity(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), general) == 1);
  CHECK(brute_cothdim(star_graph(4), general) == 1);
  CHECK(brute_cothdim(path_graph(4), general) == 2);
  CHECK(brute_cothdim(complete_graph(5), general) == 1);
  CHECK(brute_coboxicity(Graph(3)) == 0);
  CHECK(brute_coboxicity(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), general) == 2);

  CHECK_THROWS_AS(brute_coboxicity(random_graph(10, 0.5, 1), general), SizeError);
  CHECK_THROWS_AS(brute_coboxicity(path_graph(17)), SizeError);
  CHECK(brute_coboxicity(path_graph(16)) == 5);
  CHECK_THROWS_AS(brute_cothdim(random_graph(12, 0.5, 2)), SizeError);
}

TEST_CASE("brute covers verify and bound each other") {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 8));
    const Graph g = trial % 2 ? random_graph(n, rng.unit(), rng.next()) : random_block_forest(n, rng.next());
    const Cover co = brute_cointerval_cover(g, general);
    const Cover th = brute_threshold_cover(g, general);
    CHECK(verify_cover(g, co).valid());
    CHECK(verify_cover(g, th).valid());
    CHECK(co.kind == CoverKind::cointerval);
    CHECK(th.kind == CoverKind::threshold);
    CHECK(co.size() <= th.size());
    for (const CoverElement& el : co.elements) CHECK_FALSE(el.ant.has_value());
  }
}

TEST_CASE("oracle agrees with the covering loop on all small trees") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : free_trees(n)) {
      CHECK(coboxicity(t) == brute_coboxicity(t, general));
      CHECK(cothdim(t) == brute_cothdim(t, general));
    }
  }
}
