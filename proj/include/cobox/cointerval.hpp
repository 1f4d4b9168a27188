#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobox/graph.hpp"

namespace cobox {

/// A permutation of some vertex set; element 0 is the first vertex.
using Ordering = std::vector<Vertex>;

/// Subgraph (U, F) of a host graph, stored by value with host ids.
struct EdgeSubgraph {
  VertexSet vertices;
  EdgeList edges;  // sorted
  /// Permits vertices without incident edges in `vertices`.
  bool isolated_allowed = false;

  Graph as_graph() const { return Graph::from_parts(vertices, edges); }
  bool operator==(const EdgeSubgraph&) const = default;
};

/// Builds the subgraph spanned by `edges` (vertex set = endpoints).
EdgeSubgraph subgraph_from_edges(EdgeList edges);

/// True when s is a subgraph of host and has no stray isolated vertices
/// (unless s.isolated_allowed).
bool is_subgraph_of(const Graph& host, const EdgeSubgraph& s);

/// A clique `block` with apexes u, v in it. u == v denotes Q_u.
struct BigAnt {
  VertexSet block;
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const BigAnt&) const = default;
};

struct Interval {
  int lo = 0;
  int hi = 0;

  bool operator==(const Interval&) const = default;
};

inline bool intersects(const Interval& x, const Interval& y) { return x.lo <= y.hi && y.lo <= x.hi; }

using IntervalRepresentation = std::map<Vertex, Interval>;

/// The sigma-subgraph: V_1 = N(s1), V_i = V_{i-1} ∩ N(s_i), E_i = {s_i x : x ∈ V_i}.
/// sigma must be a permutation of g's vertices (InputError otherwise).
EdgeSubgraph sigma_subgraph(const Graph& g, std::span<const Vertex> sigma);

/// (V(Q) ∪ N(u) ∪ N(v), E(Q) ∪ δ(u) ∪ δ(v)). Throws InputError when q is
/// not a clique of g or an apex lies outside q.
EdgeSubgraph big_ant(const Graph& g, std::span<const Vertex> q, Vertex u, Vertex v);
inline EdgeSubgraph big_ant(const Graph& g, const BigAnt& ant) { return big_ant(g, ant.block, ant.u, ant.v); }

/// For i < j < k: s_j s_k ∈ E implies s_i s_k ∈ E. `order` must be a
/// permutation of h's vertices.
bool satisfies_cointerval_ordering(const Graph& h, std::span<const Vertex> order);

/// An ordering with the property above, or nullopt when h is not co-interval.
///
/// h is co-interval exactly when its complement is an interval graph, i.e.
/// h has no induced 2K2 and is a comparability graph. A transitive
/// orientation is found by implication-class decomposition; sorting by
/// successor count then yields the ordering, which is re-checked before it
/// is returned.
std::optional<Ordering> is_cointerval(const Graph& h);

/// Integer intervals, endpoints in [0, 2n), disjoint exactly on edges.
/// Throws InputError when h is not co-interval.
IntervalRepresentation cointerval_representation(const Graph& h);

/// Layout for big ants: Q gets pairwise disjoint intervals with u leftmost
/// and v rightmost; outside neighbours of u (resp. v) get an interval that
/// meets everything except I(u) (resp. I(v)). Endpoints in [0, 4|Q|].
IntervalRepresentation cointerval_representation(const Graph& g, const BigAnt& ant);

/// Checks intervals are disjoint iff the pair is an edge of h, over all pairs.
bool represents_cointerval(const Graph& h, const IntervalRepresentation& rep);

/// Lines `v lo hi`, sorted by v.
std::string write_interval_representation(const IntervalRepresentation& rep);

/// Peels isolated and universal vertices until nothing is left.
bool is_threshold(const Graph& h);

/// Maximal big ants of a block graph, deduplicated by edge set (keeping the
/// least (min block vertex, u, v) triple) and filtered by strict edge-set
/// containment. Ordered by that triple. NotBlockGraphError for other graphs.
std::vector<BigAnt> maximal_cointerval_subgraphs(const Graph& g);

/// Same for the Q_u family.
std::vector<BigAnt> maximal_threshold_subgraphs(const Graph& g);

}  // namespace cobox
