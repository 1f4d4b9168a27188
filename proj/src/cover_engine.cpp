// Covering loop over a residual block graph.
//
// Removing vertices from a block graph leaves a block graph whose blocks are
// the surviving parts (two or more vertices) of the original blocks, so the
// block-cut structure is maintained with counters instead of being
// recomputed each iteration:
//
//   alive count per block, active blocks per vertex (>= 2 means cut-vertex),
//   cut-vertex count per block (0 isolated, 1 leaf, >= 2 internal),
//   internal blocks per vertex (for the near-leaf test).
//
// Candidates for every case are kept in ordered sets keyed by minimum vertex.
// All case-1 candidates are served before case 2, and all case-2 candidates
// before case 3. Whatever component the chosen candidate lives in has no
// candidate of an earlier case, so each step is exactly what the loop would
// do on that component with minimum-id choices. Components evolve
// independently, so the resulting cover as a set matches a run that always
// picks the component with the smallest vertex; only the element order
// differs.

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "cobox/blocks.hpp"
#include "cobox/cover.hpp"

namespace cobox {

namespace {

class CoverEngine {
 public:
  CoverEngine(const Graph& g, CoverKind kind, const CoverOptions& options)
      : g_(g), kind_(kind), options_(options) {}

  CoverResult run();

 private:
  enum class Cls : char { inactive, isolated, leaf, internal };
  enum class Slot : char { none, clique, big_leaf, near_leaf };

  struct Step {
    CaseTaken case_taken;
    BigAnt ant;
    std::optional<Vertex> protected_vertex;
    bool record_block;
    VertexSet removed;
  };

  void setup();
  Step choose();
  void remove_set(const VertexSet& removed);

  bool active(int b) const { return cnt_[static_cast<std::size_t>(b)] >= 2; }
  bool alive(Vertex x) const { return alive_[static_cast<std::size_t>(x)] != 0; }
  bool is_cut(Vertex x) const { return ab_[static_cast<std::size_t>(x)] >= 2; }

  VertexSet members(int b) const;
  std::pair<Vertex, Vertex> min_members(int b);
  VertexSet neighbours(Vertex x);
  int degree(Vertex x);
  VertexSet leaves_at(Vertex x);
  std::vector<int>& active_blocks(Vertex x);

  Cls classify(int b) const;
  void place_block(int b);
  void place_star(Vertex c);

  EdgeSubgraph realize(const BigAnt& ant);
  VertexSet component_of(Vertex start);

  const Graph& g_;
  CoverKind kind_;
  CoverOptions options_;

  std::vector<VertexSet> blocks_;
  std::vector<std::vector<int>> vblocks_;
  std::vector<char> alive_;
  std::vector<int> cnt_;
  std::vector<std::size_t> first_;
  std::vector<int> ab_;
  std::vector<int> internal_at_;
  std::vector<Cls> cls_;
  std::vector<Slot> slot_;
  std::vector<std::pair<int, int>> slot_key_;
  std::vector<int> star_key_;
  // (min vertex, second vertex, block); blocks share at most one vertex
  std::set<std::tuple<int, int, int>> cliques_, big_leaves_, near_leaves_;
  std::set<std::pair<int, int>> stars_;
  std::size_t live_edges_ = 0;

  std::vector<unsigned> block_stamp_, vertex_stamp_;
  unsigned stamp_ = 0;
};

VertexSet CoverEngine::members(int b) const {
  VertexSet out;
  const auto& blk = blocks_[static_cast<std::size_t>(b)];
  for (std::size_t i = first_[static_cast<std::size_t>(b)]; i < blk.size(); ++i) {
    if (alive(blk[i])) out.push_back(blk[i]);
  }
  return out;
}

std::pair<Vertex, Vertex> CoverEngine::min_members(int b) {
  const auto& blk = blocks_[static_cast<std::size_t>(b)];
  auto& f = first_[static_cast<std::size_t>(b)];
  while (f < blk.size() && !alive(blk[f])) ++f;
  std::size_t s = f + 1;
  while (s < blk.size() && !alive(blk[s])) ++s;
  return {f < blk.size() ? blk[f] : -1, s < blk.size() ? blk[s] : -1};
}

std::vector<int>& CoverEngine::active_blocks(Vertex x) {
  auto& list = vblocks_[static_cast<std::size_t>(x)];
  // inactive blocks never come back
  list.erase(std::remove_if(list.begin(), list.end(), [&](int b) { return !active(b); }), list.end());
  return list;
}

VertexSet CoverEngine::neighbours(Vertex x) {
  VertexSet out;
  for (int b : active_blocks(x)) {
    for (Vertex y : members(b)) {
      if (y != x) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int CoverEngine::degree(Vertex x) {
  int d = 0;
  for (int b : active_blocks(x)) d += cnt_[static_cast<std::size_t>(b)] - 1;
  return d;
}

VertexSet CoverEngine::leaves_at(Vertex x) {
  VertexSet out;
  for (Vertex y : neighbours(x)) {
    if (degree(y) == 1) out.push_back(y);
  }
  return out;
}

CoverEngine::Cls CoverEngine::classify(int b) const {
  if (!active(b)) return Cls::inactive;
  int cuts = 0;
  for (Vertex x : members(b)) cuts += is_cut(x) ? 1 : 0;
  return cuts == 0 ? Cls::isolated : cuts == 1 ? Cls::leaf : Cls::internal;
}

void CoverEngine::place_block(int b) {
  const auto ub = static_cast<std::size_t>(b);
  Slot next = Slot::none;
  switch (cls_[ub]) {
    case Cls::inactive: break;
    case Cls::isolated: next = Slot::clique; break;
    case Cls::leaf:
      if (cnt_[ub] >= 3) next = Slot::big_leaf;
      break;
    case Cls::internal: {
      int via = 0;
      for (Vertex x : members(b)) {
        if (is_cut(x) && internal_at_[static_cast<std::size_t>(x)] >= 2) ++via;
      }
      if (via <= 1) next = Slot::near_leaf;
      break;
    }
  }
  auto set_for = [&](Slot s) -> std::set<std::tuple<int, int, int>>* {
    switch (s) {
      case Slot::clique: return &cliques_;
      case Slot::big_leaf: return &big_leaves_;
      case Slot::near_leaf: return &near_leaves_;
      case Slot::none: break;
    }
    return nullptr;
  };
  if (auto* old = set_for(slot_[ub])) old->erase({slot_key_[ub].first, slot_key_[ub].second, b});
  slot_[ub] = next;
  if (auto* fresh = set_for(next)) {
    slot_key_[ub] = min_members(b);
    fresh->insert({slot_key_[ub].first, slot_key_[ub].second, b});
  }
}

void CoverEngine::place_star(Vertex c) {
  const auto uc = static_cast<std::size_t>(c);
  if (star_key_[uc] >= 0) {
    stars_.erase({star_key_[uc], c});
    star_key_[uc] = -1;
  }
  if (!alive(c) || !is_cut(c)) return;
  int key = c;
  for (int b : active_blocks(c)) {
    if (cnt_[static_cast<std::size_t>(b)] != 2) return;
    for (Vertex y : members(b)) {
      if (y == c) continue;
      if (ab_[static_cast<std::size_t>(y)] != 1) return;
      key = std::min(key, y);
    }
  }
  star_key_[uc] = key;
  stars_.insert({key, c});
}

EdgeSubgraph CoverEngine::realize(const BigAnt& ant) {
  EdgeSubgraph s;
  s.vertices = ant.block;
  for (std::size_t i = 0; i < ant.block.size(); ++i) {
    for (std::size_t j = i + 1; j < ant.block.size(); ++j) s.edges.push_back({ant.block[i], ant.block[j]});
  }
  for (Vertex apex : {ant.u, ant.v}) {
    for (Vertex y : neighbours(apex)) {
      s.vertices.push_back(y);
      s.edges.push_back(make_edge(apex, y));
    }
    if (ant.u == ant.v) break;
  }
  normalize(s.vertices);
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

VertexSet CoverEngine::component_of(Vertex start) {
  VertexSet out{start};
  ++stamp_;
  vertex_stamp_[static_cast<std::size_t>(start)] = stamp_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex y : neighbours(out[i])) {
      if (vertex_stamp_[static_cast<std::size_t>(y)] != stamp_) {
        vertex_stamp_[static_cast<std::size_t>(y)] = stamp_;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CoverEngine::setup() {
  const BlockDecomposition bd = block_decomposition(g_);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const std::size_t k = bd.blocks[i].size();
    if (bd.block_edge_counts[i] != k * (k - 1) / 2) throw NotBlockGraphError("input is not a block graph");
    if (k >= 2) blocks_.push_back(bd.blocks[i]);
  }
  const auto n = static_cast<std::size_t>(g_.id_bound());
  const auto nb = blocks_.size();
  vblocks_.assign(n, {});
  alive_.assign(n, 0);
  for (Vertex v : g_.vertices()) alive_[static_cast<std::size_t>(v)] = 1;
  cnt_.assign(nb, 0);
  first_.assign(nb, 0);
  ab_.assign(n, 0);
  internal_at_.assign(n, 0);
  cls_.assign(nb, Cls::inactive);
  slot_.assign(nb, Slot::none);
  slot_key_.assign(nb, {-1, -1});
  star_key_.assign(n, -1);
  block_stamp_.assign(nb, 0);
  vertex_stamp_.assign(n, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    cnt_[b] = static_cast<int>(blocks_[b].size());
    for (Vertex x : blocks_[b]) {
      vblocks_[static_cast<std::size_t>(x)].push_back(static_cast<int>(b));
      ++ab_[static_cast<std::size_t>(x)];
    }
  }
  live_edges_ = g_.edge_count();
  for (std::size_t b = 0; b < nb; ++b) {
    cls_[b] = classify(static_cast<int>(b));
    if (cls_[b] == Cls::internal) {
      for (Vertex x : blocks_[b]) ++internal_at_[static_cast<std::size_t>(x)];
    }
  }
  for (std::size_t b = 0; b < nb; ++b) place_block(static_cast<int>(b));
  for (Vertex v : g_.vertices()) place_star(v);
}

CoverEngine::Step CoverEngine::choose() {
  const bool have_clique = !cliques_.empty();
  const bool have_star = !stars_.empty();
  if (have_clique || have_star) {
    if (have_clique && (!have_star || std::get<0>(*cliques_.begin()) <= stars_.begin()->first)) {
      const VertexSet comp = members(std::get<2>(*cliques_.begin()));
      return {CaseTaken::clique_or_star, BigAnt{comp, comp.front(), comp.front()}, std::nullopt, false, comp};
    }
    const Vertex c = stars_.begin()->second;
    VertexSet comp = neighbours(c);
    const Vertex first_leaf = comp.front();
    comp.push_back(c);
    normalize(comp);
    return {CaseTaken::clique_or_star, BigAnt{VertexSet{std::min(c, first_leaf), std::max(c, first_leaf)}, c, c}, std::nullopt, false, comp};
  }

  if (!big_leaves_.empty()) {
    const VertexSet q = members(std::get<2>(*big_leaves_.begin()));
    Vertex v = -1;
    for (Vertex x : q) {
      if (is_cut(x)) v = x;
    }
    return {CaseTaken::big_leaf, BigAnt{q, v, v}, v, true, q};
  }

  if (near_leaves_.empty()) throw InvariantError("covering loop: no case applies to a component with edges");

  const VertexSet q = members(std::get<2>(*near_leaves_.begin()));
  VertexSet cuts;
  std::optional<Vertex> anchor;
  for (Vertex x : q) {
    if (!is_cut(x)) continue;
    cuts.push_back(x);
    if (internal_at_[static_cast<std::size_t>(x)] >= 2) anchor = x;
  }
  const Vertex v = anchor ? *anchor : cuts.front();
  VertexSet others;
  for (Vertex x : cuts) {
    if (x != v) others.push_back(x);
  }

  auto join = [](VertexSet a, const VertexSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    normalize(a);
    return a;
  };
  auto drop = [](VertexSet a, Vertex x) {
    a.erase(std::remove(a.begin(), a.end(), x), a.end());
    return a;
  };

  if (kind_ == CoverKind::threshold) {
    const Vertex u = others.front();
    if (cuts.size() == 2) {
      return {CaseTaken::threshold_two_cuts, BigAnt{q, u, u}, v, true, drop(join(q, neighbours(u)), v)};
    }
    return {CaseTaken::threshold_many_cuts, BigAnt{q, u, u}, v, true, join(leaves_at(u), {u})};
  }

  if (cuts.size() == 2) {
    const Vertex u = others.front();
    return {CaseTaken::two_cuts, BigAnt{q, u, v}, v, true, join(q, neighbours(u))};
  }
  const Vertex u = others[0];
  const Vertex w = others[1];
  if (cuts.size() == 3) {
    return {CaseTaken::many_cuts, BigAnt{q, u, w}, v, true, drop(join(join(q, neighbours(u)), neighbours(w)), v)};
  }
  return {CaseTaken::many_cuts, BigAnt{q, u, w}, v, true, join(join(leaves_at(u), leaves_at(w)), {u, w})};
}

void CoverEngine::remove_set(const VertexSet& removed) {
  ++stamp_;
  const unsigned mark = stamp_;
  std::vector<int> dirty;
  VertexSet changed;
  auto touch_block = [&](int b) {
    if (block_stamp_[static_cast<std::size_t>(b)] != mark) {
      block_stamp_[static_cast<std::size_t>(b)] = mark;
      dirty.push_back(b);
    }
  };
  auto touch_vertex = [&](Vertex x, VertexSet& into) {
    if (vertex_stamp_[static_cast<std::size_t>(x)] != mark) {
      vertex_stamp_[static_cast<std::size_t>(x)] = mark;
      into.push_back(x);
    }
  };

  for (Vertex x : removed) alive_[static_cast<std::size_t>(x)] = 0;
  for (Vertex x : removed) {
    for (int b : vblocks_[static_cast<std::size_t>(x)]) {
      auto& c = cnt_[static_cast<std::size_t>(b)];
      if (c < 2) continue;
      live_edges_ -= static_cast<std::size_t>(c - 1);
      --c;
      touch_block(b);
      if (c == 1) {
        for (Vertex y : members(b)) {
          --ab_[static_cast<std::size_t>(y)];
          touch_vertex(y, changed);
        }
      }
    }
  }
  for (Vertex y : changed) {
    for (int b : vblocks_[static_cast<std::size_t>(y)]) touch_block(b);
  }

  // Reclassify, tracking vertices whose internal-block count moved.
  ++stamp_;
  const unsigned mark2 = stamp_;
  VertexSet internal_moved;
  for (int b : dirty) {
    const auto ub = static_cast<std::size_t>(b);
    const Cls next = classify(b);
    const bool was_internal = cls_[ub] == Cls::internal;
    const bool is_internal = next == Cls::internal;
    cls_[ub] = next;
    if (was_internal == is_internal) continue;
    for (Vertex x : members(b)) {
      internal_at_[static_cast<std::size_t>(x)] += is_internal ? 1 : -1;
      if (vertex_stamp_[static_cast<std::size_t>(x)] != mark2) {
        vertex_stamp_[static_cast<std::size_t>(x)] = mark2;
        internal_moved.push_back(x);
      }
    }
  }
  for (Vertex x : internal_moved) {
    for (int b : vblocks_[static_cast<std::size_t>(x)]) {
      if (block_stamp_[static_cast<std::size_t>(b)] != mark) {
        block_stamp_[static_cast<std::size_t>(b)] = mark;
        dirty.push_back(b);
      }
    }
  }
  for (int b : dirty) place_block(b);

  ++stamp_;
  const unsigned mark3 = stamp_;
  auto star_check = [&](Vertex x) {
    if (vertex_stamp_[static_cast<std::size_t>(x)] != mark3) {
      vertex_stamp_[static_cast<std::size_t>(x)] = mark3;
      place_star(x);
    }
  };
  for (Vertex x : removed) star_check(x);
  for (Vertex x : changed) star_check(x);
  for (int b : dirty) {
    for (Vertex x : members(b)) star_check(x);
  }
}

CoverResult CoverEngine::run() {
  setup();
  CoverResult result;
  result.cover.kind = kind_;
  while (live_edges_ > 0) {
    Step step = choose();
    CoverElement element;
    element.subgraph = realize(step.ant);
    element.ant = step.ant;

    if (step.removed.empty()) throw InvariantError("covering loop: empty removal set");
    bool drops_edge = false;
    for (Vertex r : step.removed) {
      if (degree(r) > 0) drops_edge = true;
    }
    if (!drops_edge) throw InvariantError("covering loop: iteration removes no edge");
    if (options_.check_invariants) {
      const auto& edges = element.subgraph.edges;
      for (Vertex r : step.removed) {
        for (Vertex y : neighbours(r)) {
          if (!std::binary_search(edges.begin(), edges.end(), make_edge(r, y))) {
            throw InvariantError("covering loop: edge " + std::to_string(std::min(r, y)) + "-" +
                                 std::to_string(std::max(r, y)) + " at a removed vertex is left uncovered");
          }
        }
      }
    }

    IterationTrace trace;
    trace.case_taken = step.case_taken;
    if (step.case_taken == CaseTaken::clique_or_star) {
      trace.component = step.removed;
    } else if (options_.record_components) {
      trace.component = component_of(step.removed.front());
    }
    if (step.record_block) trace.chosen_block = step.ant.block;
    trace.protected_vertex = step.protected_vertex;
    if (step.record_block) trace.apexes = std::make_pair(step.ant.u, step.ant.v);
    trace.removed = step.removed;
    trace.element_index = result.cover.elements.size();

    remove_set(step.removed);
    result.cover.elements.push_back(std::move(element));
    result.traces.push_back(std::move(trace));
  }
  return result;
}

}  // namespace

CoverResult min_cointerval_cover(const Graph& g, const CoverOptions& options) {
  return CoverEngine(g, CoverKind::cointerval, options).run();
}

CoverResult min_threshold_cover(const Graph& g, const CoverOptions& options) {
  return CoverEngine(g, CoverKind::threshold, options).run();
}

int coboxicity(const Graph& g) {
  return static_cast<int>(min_cointerval_cover(g, {false, false}).cover.size());
}

int cothdim(const Graph& g) {
  return static_cast<int>(min_threshold_cover(g, {false, false}).cover.size());
}

}  // namespace cobox
