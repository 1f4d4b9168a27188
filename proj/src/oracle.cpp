#include "cobox/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>

#include "cobox/blocks.hpp"
#include "cobox/cointerval.hpp"

namespace cobox {

namespace {

using Mask = std::uint64_t;

// g relabelled onto 0..n-1 with edges numbered in sorted order.
struct Compact {
  VertexSet ids;
  EdgeList edges;
  std::vector<Mask> adj;
  std::vector<std::vector<int>> edge_index;

  explicit Compact(const Graph& g) : ids(g.vertices()), edges(g.edges()) {
    const std::size_t n = ids.size();
    adj.assign(n, 0);
    edge_index.assign(n, std::vector<int>(n, -1));
    auto local = [&](Vertex v) {
      return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::size_t a = local(edges[k].a);
      const std::size_t b = local(edges[k].b);
      adj[a] |= Mask{1} << b;
      adj[b] |= Mask{1} << a;
      edge_index[a][b] = edge_index[b][a] = static_cast<int>(k);
    }
  }

  Mask star(std::size_t x, Mask targets) const {
    Mask out = 0;
    for (Mask t = targets; t; t &= t - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(t));
      out |= Mask{1} << edge_index[x][y];
    }
    return out;
  }

  EdgeList to_edges(Mask m) const {
    EdgeList out;
    for (; m; m &= m - 1) out.push_back(edges[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
  }
};

std::vector<Mask> keep_maximal(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return (s & k) == s; });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::vector<EdgeList> finish(const Compact& c, const std::vector<Mask>& sets) {
  std::vector<EdgeList> out;
  for (Mask m : sets) out.push_back(c.to_edges(m));
  std::sort(out.begin(), out.end());
  return out;
}

void require_small(const Graph& g, const OracleOptions& options) {
  if (g.vertex_count() > options.max_vertices) {
    throw SizeError("oracle: " + std::to_string(g.vertex_count()) + " vertices exceed the bound of " +
                    std::to_string(options.max_vertices));
  }
  if (g.vertex_count() > 64 || g.edge_count() > 64) throw SizeError("oracle: more than 64 vertices or edges");
}

bool served_by_big_ants(const Graph& g, const OracleOptions& options) {
  if (!options.use_big_ants || !is_block_graph(g)) return false;
  if (g.vertex_count() > options.max_block_vertices) {
    throw SizeError("oracle: " + std::to_string(g.vertex_count()) + " vertices exceed the block-graph bound of " +
                    std::to_string(options.max_block_vertices));
  }
  return true;
}

std::vector<EdgeList> ant_edge_sets(const Graph& g, const std::vector<BigAnt>& ants) {
  std::vector<EdgeList> out;
  for (const BigAnt& ant : ants) out.push_back(big_ant(g, ant).edges);
  std::sort(out.begin(), out.end());
  return out;
}

class OrderingSearch {
 public:
  explicit OrderingSearch(const Compact& c) : c_(c), n_(c.ids.size()) {}

  std::vector<Mask> run() {
    if (!c_.edges.empty()) descend(0, 0, 0, true);
    return std::vector<Mask>(found_.begin(), found_.end());
  }

 private:
  void descend(Mask chosen, Mask running, Mask edges, bool first) {
    if ((!first && running == 0) || std::popcount(chosen) == static_cast<int>(n_)) {
      found_.insert(edges);
      return;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      const Mask bit = Mask{1} << x;
      if (chosen & bit) continue;
      const Mask next = first ? c_.adj[x] : (running & c_.adj[x]);
      descend(chosen | bit, next, edges | c_.star(x, next), false);
    }
  }

  const Compact& c_;
  std::size_t n_;
  std::unordered_set<Mask> found_;
};

class ThresholdSearch {
 public:
  explicit ThresholdSearch(const Compact& c) : c_(c) {}

  // Maximal threshold edge sets of the subgraph induced by `within`; empty
  // when that subgraph has no edges.
  const std::vector<Mask>& maximal(Mask within) {
    auto it = memo_.find(within);
    if (it != memo_.end()) return it->second;
    std::vector<Mask> cands;
    for (Mask t = within; t; t &= t - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(t));
      const Mask nbrs = c_.adj[x] & within;
      if (!nbrs) continue;
      const Mask star = c_.star(x, nbrs);
      const std::vector<Mask> inner = maximal(nbrs);
      if (inner.empty()) cands.push_back(star);
      for (Mask s : inner) cands.push_back(star | s);
    }
    return memo_[within] = keep_maximal(std::move(cands));
  }

 private:
  const Compact& c_;
  std::map<Mask, std::vector<Mask>> memo_;
};

using Bits = std::vector<Mask>;

class CoverSearch {
 public:
  CoverSearch(std::size_t universe, std::vector<Bits> sets, std::vector<std::size_t> origin)
      : words_((universe + 63) / 64), universe_(universe), sets_(std::move(sets)), origin_(std::move(origin)) {
    holders_.assign(universe, {});
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      largest_ = std::max(largest_, count(sets_[i]));
      for (std::size_t e = 0; e < universe; ++e) {
        if (test(sets_[i], e)) holders_[e].push_back(i);
      }
    }
  }

  SetCoverSolution solve() {
    Bits open(words_, 0);
    for (std::size_t e = 0; e < universe_; ++e) open[e / 64] |= Mask{1} << (e % 64);
    for (std::size_t k = 0;; ++k) {
      picked_.clear();
      if (descend(open, k)) {
        SetCoverSolution out;
        out.size = picked_.size();
        for (std::size_t i : picked_) out.witness.push_back(origin_[i]);
        std::sort(out.witness.begin(), out.witness.end());
        return out;
      }
    }
  }

 private:
  static bool test(const Bits& b, std::size_t e) { return (b[e / 64] >> (e % 64)) & 1U; }
  static std::size_t count(const Bits& b) {
    std::size_t c = 0;
    for (Mask w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool descend(const Bits& open, std::size_t budget) {
    const std::size_t left = count(open);
    if (left == 0) return true;
    if (budget == 0 || left > budget * largest_) return false;
    std::size_t pivot = universe_;
    for (std::size_t e = 0; e < universe_; ++e) {
      if (test(open, e) && (pivot == universe_ || holders_[e].size() < holders_[pivot].size())) pivot = e;
    }
    for (std::size_t i : holders_[pivot]) {
      Bits next = open;
      for (std::size_t w = 0; w < words_; ++w) next[w] &= ~sets_[i][w];
      picked_.push_back(i);
      if (descend(next, budget - 1)) return true;
      picked_.pop_back();
    }
    return false;
  }

  std::size_t words_;
  std::size_t universe_;
  std::vector<Bits> sets_;
  std::vector<std::size_t> origin_;
  std::vector<std::vector<std::size_t>> holders_;
  std::size_t largest_ = 0;
  std::vector<std::size_t> picked_;
};

SetCoverInstance instance_over_edges(const Graph& g, const std::vector<EdgeList>& sets) {
  const EdgeList all = g.edges();
  SetCoverInstance inst;
  inst.universe_size = all.size();
  for (const EdgeList& s : sets) {
    std::vector<std::size_t> ids;
    for (const Edge& e : s) ids.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), e) - all.begin()));
    inst.candidates.push_back(std::move(ids));
  }
  return inst;
}

Cover brute_cover(const Graph& g, CoverKind kind, const std::vector<EdgeList>& sets) {
  Cover cover;
  cover.kind = kind;
  if (g.edge_count() == 0) return cover;
  const SetCoverSolution sol = min_set_cover_exact(instance_over_edges(g, sets));
  for (std::size_t i : sol.witness) cover.elements.push_back(CoverElement{subgraph_from_edges(sets[i]), std::nullopt});
  return cover;
}

}  // namespace

std::vector<EdgeList> enumerate_maximal_cointerval_edge_sets(const Graph& g, const OracleOptions& options) {
  if (served_by_big_ants(g, options)) return ant_edge_sets(g, maximal_cointerval_subgraphs(g));
  require_small(g, options);
  const Compact c(g);
  return finish(c, keep_maximal(OrderingSearch(c).run()));
}

std::vector<EdgeList> enumerate_maximal_threshold_edge_sets(const Graph& g, const OracleOptions& options) {
  if (served_by_big_ants(g, options)) return ant_edge_sets(g, maximal_threshold_subgraphs(g));
  require_small(g, options);
  const Compact c(g);
  ThresholdSearch search(c);
  const Mask everything = c.ids.size() == 64 ? ~Mask{0} : (Mask{1} << c.ids.size()) - 1;
  return finish(c, search.maximal(everything));
}

SetCoverSolution min_set_cover_exact(const SetCoverInstance& instance) {
  const std::size_t words = (instance.universe_size + 63) / 64;
  std::vector<Bits> sets;
  for (const auto& cand : instance.candidates) {
    Bits b(words, 0);
    for (std::size_t e : cand) {
      if (e >= instance.universe_size) throw InputError("set cover: candidate element outside the universe");
      b[e / 64] |= Mask{1} << (e % 64);
    }
    sets.push_back(std::move(b));
  }
  auto subset = [&](const Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < words; ++w) {
      if (a[w] & ~b[w]) return false;
    }
    return true;
  };
  // Larger candidates first; drop anything inside an earlier survivor.
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  auto size_of = [&](std::size_t i) {
    std::size_t c = 0;
    for (Mask w : sets[i]) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return size_of(a) > size_of(b); });
  std::vector<Bits> kept;
  std::vector<std::size_t> origin;
  Bits seen(words, 0);
  for (std::size_t i : order) {
    if (std::any_of(kept.begin(), kept.end(), [&](const Bits& k) { return subset(sets[i], k); })) continue;
    kept.push_back(sets[i]);
    origin.push_back(i);
    for (std::size_t w = 0; w < words; ++w) seen[w] |= sets[i][w];
  }
  for (std::size_t e = 0; e < instance.universe_size; ++e) {
    if (!((seen[e / 64] >> (e % 64)) & 1U)) {
      throw InfeasibleError("set cover: element " + std::to_string(e) + " lies in no candidate");
    }
  }
  return CoverSearch(instance.universe_size, std::move(kept), std::move(origin)).solve();
}

Cover brute_cointerval_cover(const Graph& g, const OracleOptions& options) {
  return brute_cover(g, CoverKind::cointerval, enumerate_maximal_cointerval_edge_sets(g, options));
}

Cover brute_threshold_cover(const Graph& g, const OracleOptions& options) {
  return brute_cover(g, CoverKind::threshold, enumerate_maximal_threshold_edge_sets(g, options));
}

int brute_coboxicity(const Graph& g, const OracleOptions& options) {
  return static_cast<int>(brute_cointerval_cover(g, options).size());
}

int brute_cothdim(const Graph& g, const OracleOptions& options) {
  return static_cast<int>(brute_threshold_cover(g, options).size());
}

}  // namespace cobox
