#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cobox/graph.hpp"

namespace cobox {

/// Block sizes: 2 with probability p_edge, otherwise uniform in
/// [min_clique, max_clique].
struct BlockSizeDistribution {
  double p_edge = 0.6;
  int min_clique = 3;
  int max_clique = 5;
};

/// Seeded generator whose output does not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1).
  double unit();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Connected block graph on exactly n vertices (n >= 1), grown as a random
/// tree of cliques: each new block is glued at a uniformly random existing
/// vertex, its size clamped to the remaining budget.
Graph random_block_graph(int n, std::uint64_t seed, const BlockSizeDistribution& dist = {});

/// Disjoint union of random block graphs with the given total vertex count;
/// component sizes drawn from the same seed.
Graph random_block_forest(int n, std::uint64_t seed, const BlockSizeDistribution& dist = {});

/// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

Graph path_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}, centre 0.
Graph star_graph(int leaves);

/// One tree per isomorphism class on n vertices (n >= 1).
std::vector<Graph> free_trees(int n);

/// Vertex permutation of g's ids, uniform.
std::vector<Vertex> random_ordering(const Graph& g, Rng& rng);

}  // namespace cobox
