#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cobox {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }

using EdgeList = std::vector<Edge>;

// Error taxonomy. The CLI maps these onto exit codes.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : InputError {
  using InputError::InputError;
};
struct NotBlockGraphError : InputError {
  using InputError::InputError;
};
struct SizeError : InputError {
  using InputError::InputError;
};
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Simple undirected graph over stable integer ids.
///
/// Ids live in [0, id_bound()); an id may be absent, which is how vertex
/// deletion is represented. Deleting vertices never renumbers the rest.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices 0..n-1.
  explicit Graph(int n);

  /// Graph on `vertices` with the given edges. Ids must be non-negative,
  /// edges must join listed vertices; duplicates collapse, loops throw.
  static Graph from_parts(std::span<const Vertex> vertices, std::span<const Edge> edges);

  int id_bound() const { return static_cast<int>(adj_.size()); }
  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < id_bound() && present_[static_cast<std::size_t>(v)] != 0;
  }
  bool adjacent(Vertex x, Vertex y) const;

  /// Sorted neighbour list. Empty for absent ids.
  std::span<const Vertex> neighbors(Vertex v) const {
    if (v < 0 || v >= id_bound()) return {};
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  VertexSet vertices() const;
  /// Lexicographically sorted.
  EdgeList edges() const;

  Graph induced(std::span<const Vertex> keep) const;
  Graph without(std::span<const Vertex> drop) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs);

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> present_;
  int vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Canonical graph on {0..n-1}; out-of-range endpoints and loops throw InputError.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

/// Components ordered by their minimum vertex id; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

/// G \ S. Throws InputError when S names a vertex not in g.
Graph remove_vertices(const Graph& g, std::span<const Vertex> s);

enum class Shape { clique, star, neither };

/// Requires g connected with at least one edge. K2 reports clique (clique is
/// tested before star).
Shape shape_check(const Graph& g);

/// Relabels rhs by lhs.id_bound() and takes the union.
Graph disjoint_union(const Graph& lhs, const Graph& rhs);

Graph complement(const Graph& g);

/// Sorts and deduplicates in place.
void normalize(VertexSet& s);

std::string to_string(Shape s);

}  // namespace cobox
