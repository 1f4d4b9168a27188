#include "cobox/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cobox {

namespace {

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition bd;
  bd.host = g;

  const auto bound = static_cast<std::size_t>(g.id_bound());
  std::vector<int> disc(bound, -1);
  std::vector<int> low(bound, 0);
  std::vector<Frame> frames;
  std::vector<Edge> edge_stack;
  std::vector<char> mark(bound, 0);
  int timer = 0;

  struct RawBlock {
    VertexSet verts;
    std::size_t edges;
  };
  std::vector<RawBlock> raw;

  for (Vertex root : g.vertices()) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      disc[static_cast<std::size_t>(root)] = timer++;
      raw.push_back({{root}, 0});
      continue;
    }
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Vertex v = f.v;
      const auto nbrs = g.neighbors(v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[static_cast<std::size_t>(w)] == -1) {
          edge_stack.push_back({v, w});
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          frames.push_back({w, v, 0});
        } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
          edge_stack.push_back({v, w});
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex p = frames.back().v;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
        RawBlock blk{{}, 0};
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          ++blk.edges;
          for (Vertex x : {e.a, e.b}) {
            if (!mark[static_cast<std::size_t>(x)]) {
              mark[static_cast<std::size_t>(x)] = 1;
              blk.verts.push_back(x);
            }
          }
          if (e.a == p && e.b == v) break;
        }
        for (Vertex x : blk.verts) mark[static_cast<std::size_t>(x)] = 0;
        std::sort(blk.verts.begin(), blk.verts.end());
        raw.push_back(std::move(blk));
      }
    }
  }

  std::sort(raw.begin(), raw.end(), [](const RawBlock& a, const RawBlock& b) { return a.verts < b.verts; });

  std::vector<int> membership(bound, 0);
  for (auto& blk : raw) {
    if (blk.verts.size() >= 2) {
      for (Vertex x : blk.verts) ++membership[static_cast<std::size_t>(x)];
    }
    bd.blocks.push_back(std::move(blk.verts));
    bd.block_edge_counts.push_back(blk.edges);
  }
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (membership[static_cast<std::size_t>(v)] >= 2) bd.cut_vertices.push_back(v);
  }
  bd.block_cuts.resize(bd.blocks.size());
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    for (Vertex x : bd.blocks[i]) {
      if (membership[static_cast<std::size_t>(x)] >= 2) {
        bd.block_cuts[i].push_back(x);
        bd.cut_blocks[x].push_back(i);
      }
    }
  }
  return bd;
}

std::vector<BlockClass> classify_blocks(const BlockDecomposition& bd) {
  std::vector<BlockClass> out;
  out.reserve(bd.blocks.size());
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    BlockClass c;
    c.cut_vertices = bd.block_cuts[i];
    c.is_edge_block = bd.blocks[i].size() == 2;
    switch (c.cut_vertices.size()) {
      case 0: c.kind = BlockKind::isolated; break;
      case 1: c.kind = BlockKind::leaf; break;
      default: c.kind = BlockKind::internal; break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_block_graph(const Graph& g) {
  const BlockDecomposition bd = block_decomposition(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const std::size_t k = bd.blocks[i].size();
    if (bd.block_edge_counts[i] != k * (k - 1) / 2) return false;
  }
  return true;
}

bool is_pointed(const Graph& g) {
  const BlockDecomposition bd = block_decomposition(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (bd.block_cuts[i].size() == 1 && bd.blocks[i].size() != 2) return false;
  }
  return true;
}

Graph core(const Graph& g) {
  const BlockDecomposition bd = block_decomposition(g);
  VertexSet drop;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const auto& cuts = bd.block_cuts[i];
    if (cuts.empty()) {
      drop.insert(drop.end(), bd.blocks[i].begin(), bd.blocks[i].end());
    } else if (cuts.size() == 1) {
      for (Vertex x : bd.blocks[i]) {
        if (x != cuts.front()) drop.push_back(x);
      }
    }
  }
  normalize(drop);
  return g.without(drop);
}

std::optional<NearLeafResult> near_leaf_at(const BlockDecomposition& bd, const std::vector<BlockClass>& classes,
                                           std::size_t index) {
  if (classes[index].kind != BlockKind::internal) return std::nullopt;
  // Cut-vertices of the block through which some internal neighbour hangs.
  VertexSet via;
  for (Vertex x : classes[index].cut_vertices) {
    for (std::size_t other : bd.cut_blocks.at(x)) {
      if (other != index && classes[other].kind == BlockKind::internal) {
        via.push_back(x);
        break;
      }
    }
  }
  if (via.size() > 1) return std::nullopt;
  NearLeafResult r;
  r.block_index = index;
  r.block = bd.blocks[index];
  if (!via.empty()) r.anchor = via.front();
  for (Vertex x : classes[index].cut_vertices) {
    if (!r.anchor || x != *r.anchor) r.non_anchor_cut_vertices.push_back(x);
  }
  return r;
}

std::vector<NearLeafResult> near_leaf_blocks(const BlockDecomposition& bd) {
  const auto classes = classify_blocks(bd);
  std::vector<NearLeafResult> out;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (auto r = near_leaf_at(bd, classes, i)) out.push_back(std::move(*r));
  }
  return out;
}

NearLeafResult find_near_leaf_block(const Graph& h) {
  if (h.edge_count() == 0 || connected_components(h).size() != 1) {
    throw PreconditionError("find_near_leaf_block: graph must be connected with an edge");
  }
  const BlockDecomposition bd = block_decomposition(h);
  if (bd.blocks.size() == 1) throw PreconditionError("find_near_leaf_block: graph is an isolated block");
  if (shape_check(h) == Shape::star) throw PreconditionError("find_near_leaf_block: graph is a star");
  const auto classes = classify_blocks(bd);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (classes[i].kind == BlockKind::leaf && !classes[i].is_edge_block) {
      throw PreconditionError("find_near_leaf_block: graph is not pointed");
    }
  }
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    if (auto r = near_leaf_at(bd, classes, i)) return *r;
  }
  throw InvariantError("find_near_leaf_block: no near-leaf block found");
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::isolated: return "isolated";
    case BlockKind::leaf: return "leaf";
    case BlockKind::internal: return "internal";
  }
  return "isolated";
}

}  // namespace cobox
