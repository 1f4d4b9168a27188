#include "cobox/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cobox {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  present_.assign(static_cast<std::size_t>(n), 1);
  vertex_count_ = n;
}

Graph Graph::from_parts(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  Graph g;
  Vertex bound = 0;
  for (Vertex v : vertices) {
    if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
    bound = std::max(bound, v + 1);
  }
  g.adj_.resize(static_cast<std::size_t>(bound));
  g.present_.assign(static_cast<std::size_t>(bound), 0);
  for (Vertex v : vertices) {
    if (!g.present_[static_cast<std::size_t>(v)]) {
      g.present_[static_cast<std::size_t>(v)] = 1;
      ++g.vertex_count_;
    }
  }
  for (const Edge& e : edges) {
    if (e.a == e.b) throw InputError("loop at vertex " + std::to_string(e.a));
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b)) {
      throw InputError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " has an endpoint outside the vertex set");
    }
    g.adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
    g.adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::adjacent(Vertex x, Vertex y) const {
  if (!has_vertex(x) || !has_vertex(y)) return false;
  const auto& a = adj_[static_cast<std::size_t>(x)];
  const auto& b = adj_[static_cast<std::size_t>(y)];
  // search the shorter list
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), y)
                              : std::binary_search(b.begin(), b.end(), x);
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(vertex_count_));
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (present_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < id_bound(); ++v) {
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph g;
  g.adj_.resize(adj_.size());
  g.present_.assign(adj_.size(), 0);
  for (Vertex v : keep) {
    if (!has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
    if (!g.present_[static_cast<std::size_t>(v)]) {
      g.present_[static_cast<std::size_t>(v)] = 1;
      ++g.vertex_count_;
    }
  }
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (!g.present_[static_cast<std::size_t>(v)]) continue;
    auto& out = g.adj_[static_cast<std::size_t>(v)];
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (g.present_[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    g.edge_count_ += out.size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::without(std::span<const Vertex> drop) const {
  std::vector<char> gone(adj_.size(), 0);
  for (Vertex v : drop) {
    if (!has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (present_[static_cast<std::size_t>(v)] && !gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced(keep);
}

bool operator==(const Graph& lhs, const Graph& rhs) {
  return lhs.vertex_count_ == rhs.vertex_count_ && lhs.edge_count_ == rhs.edge_count_ &&
         lhs.vertices() == rhs.vertices() && lhs.edges() == rhs.edges();
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 0) throw InputError("negative vertex count");
  EdgeList edges;
  edges.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    edges.push_back(make_edge(u, v));
  }
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Graph::from_parts(all, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // scan order already yields increasing minimum ids
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> s) { return g.without(s); }

Shape shape_check(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("shape_check: graph has no edges");
  if (connected_components(g).size() != 1) throw PreconditionError("shape_check: graph is disconnected");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (g.edge_count() == n * (n - 1) / 2) return Shape::clique;
  if (g.edge_count() == n - 1) {
    for (Vertex v : g.vertices()) {
      if (static_cast<std::size_t>(g.degree(v)) == n - 1) return Shape::star;
    }
  }
  return Shape::neither;
}

Graph disjoint_union(const Graph& lhs, const Graph& rhs) {
  const Vertex shift = lhs.id_bound();
  VertexSet verts = lhs.vertices();
  for (Vertex v : rhs.vertices()) verts.push_back(v + shift);
  EdgeList edges = lhs.edges();
  for (const Edge& e : rhs.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph::from_parts(verts, edges);
}

Graph complement(const Graph& g) {
  const VertexSet verts = g.vertices();
  EdgeList edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.adjacent(verts[i], verts[j])) edges.push_back({verts[i], verts[j]});
    }
  }
  return Graph::from_parts(verts, edges);
}

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::clique: return "clique";
    case Shape::star: return "star";
    case Shape::neither: return "neither";
  }
  return "neither";
}

}  // namespace cobox
