#pragma once

#include <cstddef>
#include <vector>

#include "cobox/cover.hpp"
#include "cobox/graph.hpp"

namespace cobox {

struct InfeasibleError : InputError {
  using InputError::InputError;
};

struct OracleOptions {
  /// Bound for exhaustive enumeration on arbitrary graphs.
  int max_vertices = 9;
  /// Bound when block graphs are served from big-ant candidates.
  int max_block_vertices = 16;
  /// When false, block graphs go through exhaustive enumeration too.
  bool use_big_ants = true;
};

/// Containment-maximal edge sets of co-interval subgraphs, lexicographically
/// sorted. Arbitrary graphs: every ordering's sigma-subgraph, explored as a
/// prefix tree that stops once the running set V_i is empty. Block graphs
/// (with use_big_ants): the maximal big ants. SizeError past the bound.
std::vector<EdgeList> enumerate_maximal_cointerval_edge_sets(const Graph& g, const OracleOptions& options = {});

/// Same for threshold subgraphs. Arbitrary graphs: a threshold graph with
/// edges has a vertex x adjacent to every other non-isolated vertex, so the
/// maximal sets are among δ(x) ∪ T for T maximal threshold in G[N(x)],
/// found recursively. Block graphs: the maximal Q_u.
std::vector<EdgeList> enumerate_maximal_threshold_edge_sets(const Graph& g, const OracleOptions& options = {});

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> candidates;
};

struct SetCoverSolution {
  std::size_t size = 0;
  /// Candidate indices.
  std::vector<std::size_t> witness;
};

/// Iterative deepening on k. Subsumed candidates are dropped, and each
/// level branches on the uncovered element with the fewest candidates.
/// InfeasibleError when the candidates miss an element.
SetCoverSolution min_set_cover_exact(const SetCoverInstance& instance);

/// Optimal covers assembled from the witness; elements carry no big ant.
Cover brute_cointerval_cover(const Graph& g, const OracleOptions& options = {});
Cover brute_threshold_cover(const Graph& g, const OracleOptions& options = {});

int brute_coboxicity(const Graph& g, const OracleOptions& options = {});
int brute_cothdim(const Graph& g, const OracleOptions& options = {});

}  // namespace cobox
