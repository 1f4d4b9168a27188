#include "cobox/generate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace cobox {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph random_block_graph(int n, std::uint64_t seed, const BlockSizeDistribution& dist) {
  if (n < 1) throw InputError("random_block_graph: n must be at least 1");
  if (dist.p_edge < 0.0 || dist.p_edge > 1.0 || dist.min_clique < 2 || dist.max_clique < dist.min_clique) {
    throw InputError("random_block_graph: bad block-size distribution");
  }
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  int count = 1;
  while (count < n) {
    int size = rng.unit() < dist.p_edge ? 2 : static_cast<int>(rng.uniform(dist.min_clique, dist.max_clique));
    size = std::min(size, n - count + 1);
    const int attach = static_cast<int>(rng.uniform(0, count - 1));
    std::vector<int> members{attach};
    for (int i = 0; i < size - 1; ++i) members.push_back(count + i);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
    count += size - 1;
  }
  return build_graph(n, edges);
}

Graph random_block_forest(int n, std::uint64_t seed, const BlockSizeDistribution& dist) {
  if (n < 1) throw InputError("random_block_forest: n must be at least 1");
  Rng rng(seed);
  Graph out(0);
  int remaining = n;
  while (remaining > 0) {
    const int size = static_cast<int>(rng.uniform(1, remaining));
    out = disjoint_union(out, random_block_graph(size, rng.next(), dist));
    remaining -= size;
  }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("random_graph: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.unit() < p) edges.emplace_back(a, b);
    }
  }
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 0) throw InputError("path_graph: n must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 0) throw InputError("complete_graph: n must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star_graph: leaves must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return build_graph(leaves + 1, edges);
}

namespace {

using Tree = std::vector<std::vector<int>>;

std::string rooted_form(const Tree& t, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : t[static_cast<std::size_t>(root)]) {
    if (c != parent) kids.push_back(rooted_form(t, c, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::vector<int> centres(const Tree& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(t[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : t[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::string canonical(const Tree& t) {
  std::string best;
  for (int c : centres(t)) {
    std::string form = rooted_form(t, c, -1);
    if (best.empty() || form < best) best = std::move(form);
  }
  return best;
}

}  // namespace

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw InputError("free_trees: n must be at least 1");
  std::map<std::string, Tree> level{{"()", Tree(1)}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Tree> next;
    for (const auto& [form, t] : level) {
      for (int v = 0; v < size - 1; ++v) {
        Tree grown = t;
        grown.emplace_back();
        grown[static_cast<std::size_t>(v)].push_back(size - 1);
        grown.back().push_back(v);
        next.try_emplace(canonical(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& [form, t] : level) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
      for (int w : t[static_cast<std::size_t>(v)]) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
    out.push_back(build_graph(n, edges));
  }
  return out;
}

std::vector<Vertex> random_ordering(const Graph& g, Rng& rng) {
  std::vector<Vertex> order = g.vertices();
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace cobox
