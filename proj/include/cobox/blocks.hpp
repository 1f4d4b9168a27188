#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobox/graph.hpp"

namespace cobox {

/// Blocks (maximal 2-connected pieces, bridges and isolated vertices
/// included) and the block-cut tree of a graph.
struct BlockDecomposition {
  Graph host;
  /// Ordered by minimum vertex, ties broken lexicographically.
  std::vector<VertexSet> blocks;
  std::vector<std::size_t> block_edge_counts;
  VertexSet cut_vertices;
  /// Block-cut tree, both directions.
  std::vector<VertexSet> block_cuts;
  std::map<Vertex, std::vector<std::size_t>> cut_blocks;
};

enum class BlockKind { isolated, leaf, internal };

struct BlockClass {
  BlockKind kind = BlockKind::isolated;
  bool is_edge_block = false;
  VertexSet cut_vertices;
};

struct NearLeafResult {
  std::size_t block_index = 0;
  VertexSet block;
  std::optional<Vertex> anchor;
  VertexSet non_anchor_cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

std::vector<BlockClass> classify_blocks(const BlockDecomposition& bd);

bool is_block_graph(const Graph& g);

/// Every leaf block is an edge block.
bool is_pointed(const Graph& g);

/// Drops isolated blocks entirely and every leaf block except its cut-vertex.
Graph core(const Graph& g);

/// Near-leaf test for one block; nullopt when block `index` is not near-leaf.
std::optional<NearLeafResult> near_leaf_at(const BlockDecomposition& bd, const std::vector<BlockClass>& classes,
                                           std::size_t index);

/// Every near-leaf block, in block order. No preconditions.
std::vector<NearLeafResult> near_leaf_blocks(const BlockDecomposition& bd);

/// The near-leaf block with minimum vertex id. Requires h connected,
/// pointed, not a single block and not a star; throws PreconditionError
/// otherwise.
NearLeafResult find_near_leaf_block(const Graph& h);

std::string to_string(BlockKind k);

}  // namespace cobox
