#include "cobox/cointerval.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cobox/blocks.hpp"

namespace cobox {

EdgeSubgraph subgraph_from_edges(EdgeList edges) {
  EdgeSubgraph s;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    s.vertices.push_back(e.a);
    s.vertices.push_back(e.b);
  }
  normalize(s.vertices);
  s.edges = std::move(edges);
  return s;
}

bool is_subgraph_of(const Graph& host, const EdgeSubgraph& s) {
  if (!std::is_sorted(s.vertices.begin(), s.vertices.end())) return false;
  for (Vertex v : s.vertices) {
    if (!host.has_vertex(v)) return false;
  }
  std::vector<char> touched;
  if (!s.isolated_allowed) touched.assign(s.vertices.size(), 0);
  auto index_of = [&](Vertex x) -> std::ptrdiff_t {
    auto it = std::lower_bound(s.vertices.begin(), s.vertices.end(), x);
    if (it == s.vertices.end() || *it != x) return -1;
    return it - s.vertices.begin();
  };
  for (const Edge& e : s.edges) {
    if (!host.adjacent(e.a, e.b)) return false;
    const auto ia = index_of(e.a);
    const auto ib = index_of(e.b);
    if (ia < 0 || ib < 0) return false;
    if (!touched.empty()) touched[static_cast<std::size_t>(ia)] = touched[static_cast<std::size_t>(ib)] = 1;
  }
  return std::all_of(touched.begin(), touched.end(), [](char c) { return c != 0; });
}

namespace {

void require_permutation(const Graph& g, std::span<const Vertex> sigma, const char* what) {
  VertexSet sorted(sigma.begin(), sigma.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.vertices()) throw InputError(std::string(what) + ": ordering is not a permutation of the vertices");
}

}  // namespace

EdgeSubgraph sigma_subgraph(const Graph& g, std::span<const Vertex> sigma) {
  require_permutation(g, sigma, "sigma_subgraph");
  EdgeSubgraph out;
  if (sigma.empty()) return out;
  VertexSet current(g.neighbors(sigma[0]).begin(), g.neighbors(sigma[0]).end());
  for (std::size_t i = 0; i < sigma.size() && !current.empty(); ++i) {
    if (i > 0) {
      VertexSet next;
      const auto nbrs = g.neighbors(sigma[i]);
      std::set_intersection(current.begin(), current.end(), nbrs.begin(), nbrs.end(), std::back_inserter(next));
      current = std::move(next);
      if (current.empty()) break;
    }
    out.vertices.push_back(sigma[i]);
    for (Vertex x : current) {
      out.vertices.push_back(x);
      out.edges.push_back(make_edge(sigma[i], x));
    }
  }
  normalize(out.vertices);
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

EdgeSubgraph big_ant(const Graph& g, std::span<const Vertex> q, Vertex u, Vertex v) {
  VertexSet block(q.begin(), q.end());
  normalize(block);
  if (block.empty()) throw InputError("big_ant: empty block");
  for (Vertex x : block) {
    if (!g.has_vertex(x)) throw InputError("big_ant: block vertex " + std::to_string(x) + " not in graph");
  }
  if (!std::binary_search(block.begin(), block.end(), u) || !std::binary_search(block.begin(), block.end(), v)) {
    throw InputError("big_ant: apex outside the block");
  }
  EdgeList edges;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (!g.adjacent(block[i], block[j])) throw InputError("big_ant: block is not a clique");
      edges.push_back({block[i], block[j]});
    }
  }
  VertexSet verts = block;
  for (Vertex apex : {u, v}) {
    for (Vertex x : g.neighbors(apex)) {
      verts.push_back(x);
      edges.push_back(make_edge(apex, x));
    }
    if (u == v) break;
  }
  normalize(verts);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EdgeSubgraph out{std::move(verts), std::move(edges), false};
  // a single-vertex block with an isolated apex has no edges at all
  out.isolated_allowed = out.edges.empty();
  return out;
}

bool satisfies_cointerval_ordering(const Graph& h, std::span<const Vertex> order) {
  require_permutation(h, order, "satisfies_cointerval_ordering");
  std::vector<int> pos(static_cast<std::size_t>(h.id_bound()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  // Earlier neighbours of every vertex must occupy an initial segment.
  for (Vertex z : order) {
    const int k = pos[static_cast<std::size_t>(z)];
    int count = 0;
    int furthest = -1;
    for (Vertex y : h.neighbors(z)) {
      const int p = pos[static_cast<std::size_t>(y)];
      if (p < k) {
        ++count;
        furthest = std::max(furthest, p);
      }
    }
    if (furthest != count - 1) return false;
  }
  return true;
}

namespace {

// Local, contiguous view of a graph for the recognition routines.
struct LocalGraph {
  VertexSet ids;
  std::vector<std::vector<int>> adj;       // sorted local neighbours
  std::vector<std::vector<int>> edge_ids;  // parallel to adj
  std::vector<std::pair<int, int>> edges;  // a < b

  explicit LocalGraph(const Graph& h) : ids(h.vertices()) {
    std::vector<int> local(static_cast<std::size_t>(h.id_bound()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    adj.resize(ids.size());
    edge_ids.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (Vertex w : h.neighbors(ids[i])) adj[i].push_back(local[static_cast<std::size_t>(w)]);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      edge_ids[i].assign(adj[i].size(), -1);
      for (std::size_t k = 0; k < adj[i].size(); ++k) {
        const int j = adj[i][k];
        if (static_cast<int>(i) < j) {
          edge_ids[i][k] = static_cast<int>(edges.size());
          edges.emplace_back(static_cast<int>(i), j);
        }
      }
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t k = 0; k < adj[i].size(); ++k) {
        const int j = adj[i][k];
        if (j < static_cast<int>(i)) edge_ids[i][k] = edge_id(j, static_cast<int>(i));
      }
    }
  }

  int size() const { return static_cast<int>(ids.size()); }

  /// -1 when x and y are not adjacent.
  int edge_id(int x, int y) const {
    const auto& row = adj[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.end() || *it != y) return -1;
    return edge_ids[static_cast<std::size_t>(x)][static_cast<std::size_t>(it - row.begin())];
  }
  bool adjacent(int x, int y) const { return edge_id(x, y) >= 0; }
};

bool has_induced_2k2(const LocalGraph& lg) {
  const auto& e = lg.edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto [a, b] = e[i];
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!lg.adjacent(a, c) && !lg.adjacent(a, d) && !lg.adjacent(b, c) && !lg.adjacent(b, d)) return true;
    }
  }
  return false;
}

// Transitive orientation by implication classes of the shrinking edge sets
// E_1 ⊇ E_2 ⊇ ...; returns nullopt when some class contains an arc and its
// reverse. out[e] is true when edge e = (a, b), a < b, is oriented a -> b.
std::optional<std::vector<char>> transitive_orientation(const LocalGraph& lg) {
  const std::size_t m = lg.edges.size();
  std::vector<int> cls(m, -1);
  std::vector<char> forward(m, 0);
  std::deque<std::pair<int, int>> queue;
  int current = -1;

  // Edges from earlier classes no longer belong to the working graph.
  auto in_working = [&](int x, int y) {
    const int id = lg.edge_id(x, y);
    return id >= 0 && (cls[static_cast<std::size_t>(id)] == -1 || cls[static_cast<std::size_t>(id)] == current);
  };
  // Returns false on a contradiction inside the current class.
  auto force = [&](int from, int to) {
    const int id = lg.edge_id(from, to);
    const bool fwd = from < to;
    auto& c = cls[static_cast<std::size_t>(id)];
    if (c == current) return static_cast<bool>(forward[static_cast<std::size_t>(id)]) == fwd;
    if (c != -1) return true;
    c = current;
    forward[static_cast<std::size_t>(id)] = fwd ? 1 : 0;
    queue.emplace_back(from, to);
    return true;
  };

  for (std::size_t start = 0; start < m; ++start) {
    if (cls[start] != -1) continue;
    ++current;
    queue.clear();
    force(lg.edges[start].first, lg.edges[start].second);
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      for (int z : lg.adj[static_cast<std::size_t>(x)]) {
        if (z == y || !in_working(x, z) || in_working(y, z)) continue;
        if (!force(x, z)) return std::nullopt;
      }
      for (int z : lg.adj[static_cast<std::size_t>(y)]) {
        if (z == x || !in_working(z, y) || in_working(x, z)) continue;
        if (!force(z, y)) return std::nullopt;
      }
    }
  }
  return forward;
}

std::optional<std::vector<int>> local_cointerval_order(const LocalGraph& lg) {
  const int n = lg.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (lg.edges.empty()) return order;
  if (has_induced_2k2(lg)) return std::nullopt;
  const auto forward = transitive_orientation(lg);
  if (!forward) return std::nullopt;
  std::vector<int> successors(static_cast<std::size_t>(n), 0);
  for (std::size_t id = 0; id < lg.edges.size(); ++id) {
    const auto [a, b] = lg.edges[id];
    ++successors[static_cast<std::size_t>((*forward)[id] ? a : b)];
  }
  // Up-sets of an interval order form a chain; larger up-sets come first.
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return successors[static_cast<std::size_t>(x)] > successors[static_cast<std::size_t>(y)];
  });
  return order;
}

}  // namespace

std::optional<Ordering> is_cointerval(const Graph& h) {
  const LocalGraph lg(h);
  const auto local = local_cointerval_order(lg);
  if (!local) return std::nullopt;
  Ordering order;
  order.reserve(local->size());
  for (int i : *local) order.push_back(lg.ids[static_cast<std::size_t>(i)]);
  if (!satisfies_cointerval_ordering(h, order)) {
    throw InvariantError("is_cointerval: orientation did not yield a valid ordering");
  }
  return order;
}

IntervalRepresentation cointerval_representation(const Graph& h) {
  const auto order = is_cointerval(h);
  if (!order) throw InputError("cointerval_representation: graph is not co-interval");
  std::vector<int> pos(static_cast<std::size_t>(h.id_bound()), -1);
  for (std::size_t i = 0; i < order->size(); ++i) pos[static_cast<std::size_t>((*order)[i])] = static_cast<int>(i);
  // Right endpoint from the position; the left endpoint sits just past the
  // right endpoints of the earlier neighbours, which form a prefix.
  IntervalRepresentation rep;
  for (std::size_t k = 0; k < order->size(); ++k) {
    const Vertex z = (*order)[k];
    int earlier = 0;
    for (Vertex y : h.neighbors(z)) {
      if (pos[static_cast<std::size_t>(y)] < static_cast<int>(k)) ++earlier;
    }
    rep[z] = Interval{2 * earlier, 2 * static_cast<int>(k) + 1};
  }
  return rep;
}

IntervalRepresentation cointerval_representation(const Graph& g, const BigAnt& ant) {
  const EdgeSubgraph s = big_ant(g, ant);
  VertexSet block = ant.block;
  normalize(block);
  VertexSet row;
  row.push_back(ant.u);
  for (Vertex x : block) {
    if (x != ant.u && x != ant.v) row.push_back(x);
  }
  if (ant.v != ant.u) row.push_back(ant.v);

  const int k = static_cast<int>(row.size());
  IntervalRepresentation rep;
  for (int i = 0; i < k; ++i) rep[row[static_cast<std::size_t>(i)]] = Interval{4 * i + 1, 4 * i + 2};
  const Interval after_u{3, 4 * k};
  const Interval before_v{0, 4 * k - 4};
  const Interval between{3, 4 * k - 4};
  for (Vertex x : s.vertices) {
    if (rep.count(x)) continue;
    const bool near_u = g.adjacent(x, ant.u);
    const bool near_v = ant.v != ant.u && g.adjacent(x, ant.v);
    rep[x] = near_u && near_v ? between : near_u ? after_u : before_v;
  }
  return rep;
}

bool represents_cointerval(const Graph& h, const IntervalRepresentation& rep) {
  const VertexSet verts = h.vertices();
  if (rep.size() != verts.size()) return false;
  for (Vertex v : verts) {
    auto it = rep.find(v);
    if (it == rep.end() || it->second.lo > it->second.hi) return false;
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const bool disjoint = !intersects(rep.at(verts[i]), rep.at(verts[j]));
      if (disjoint != h.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

std::string write_interval_representation(const IntervalRepresentation& rep) {
  std::ostringstream out;
  for (const auto& [v, iv] : rep) out << v << ' ' << iv.lo << ' ' << iv.hi << '\n';
  return out.str();
}

bool is_threshold(const Graph& h) {
  VertexSet verts = h.vertices();
  std::sort(verts.begin(), verts.end(), [&](Vertex x, Vertex y) { return h.degree(x) < h.degree(y); });
  // Removing a universal vertex lowers every remaining degree by one;
  // removing an isolated vertex changes nothing else.
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(verts.size()) - 1;
  int universals = 0;
  while (lo <= hi) {
    const int remaining = static_cast<int>(hi - lo + 1);
    if (h.degree(verts[static_cast<std::size_t>(lo)]) - universals == 0) {
      ++lo;
    } else if (h.degree(verts[static_cast<std::size_t>(hi)]) - universals == remaining - 1) {
      --hi;
      ++universals;
    } else {
      return false;
    }
  }
  return true;
}

namespace {

using AntKey = std::tuple<Vertex, Vertex, Vertex>;

std::vector<BigAnt> maximal_big_ants(const Graph& g, bool single_apex, const char* what) {
  if (!is_block_graph(g)) throw NotBlockGraphError(std::string(what) + ": input is not a block graph");
  const BlockDecomposition bd = block_decomposition(g);

  std::map<EdgeList, std::pair<AntKey, BigAnt>> by_edges;
  for (const VertexSet& block : bd.blocks) {
    if (block.size() < 2) continue;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::size_t j_end = single_apex ? i + 1 : block.size();
      for (std::size_t j = i; j < j_end; ++j) {
        BigAnt ant{block, block[i], block[j]};
        EdgeSubgraph s = big_ant(g, ant);
        const AntKey key{block.front(), ant.u, ant.v};
        auto [it, inserted] = by_edges.try_emplace(std::move(s.edges), key, ant);
        if (!inserted && key < it->second.first) it->second = {key, ant};
      }
    }
  }

  std::vector<const EdgeList*> sets;
  for (const auto& entry : by_edges) sets.push_back(&entry.first);
  std::vector<std::pair<AntKey, BigAnt>> kept;
  for (const auto& [edges, keyed] : by_edges) {
    bool dominated = false;
    for (const EdgeList* other : sets) {
      if (other->size() > edges.size() && std::includes(other->begin(), other->end(), edges.begin(), edges.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(keyed);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BigAnt> out;
  for (auto& [key, ant] : kept) out.push_back(std::move(ant));
  return out;
}

}  // namespace

std::vector<BigAnt> maximal_cointerval_subgraphs(const Graph& g) {
  return maximal_big_ants(g, false, "maximal_cointerval_subgraphs");
}

std::vector<BigAnt> maximal_threshold_subgraphs(const Graph& g) {
  return maximal_big_ants(g, true, "maximal_threshold_subgraphs");
}

}  // namespace cobox
