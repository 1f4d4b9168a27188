#include "cobox/dot.hpp"

#include <array>
#include <map>
#include <sstream>

namespace cobox {

namespace {

constexpr std::array<const char*, 10> kPalette{"red",    "blue",  "darkgreen", "orange", "purple",
                                               "brown",  "cyan3", "magenta",   "gold3",  "gray40"};

}  // namespace

std::string export_dot(const Graph& g, const BlockDecomposition& bd, const std::optional<Cover>& cover) {
  if (!(bd.host == g)) throw InputError("export_dot: block decomposition belongs to a different graph");
  std::map<Edge, std::vector<std::size_t>> groups;
  if (cover) {
    for (std::size_t i = 0; i < cover->elements.size(); ++i) {
      for (const Edge& e : cover->elements[i].subgraph.edges) {
        if (!g.has_vertex(e.a) || !g.adjacent(e.a, e.b)) throw InputError("export_dot: cover edge not in graph");
        groups[e].push_back(i);
      }
    }
  }

  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : g.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.a << " -- " << e.b;
    auto it = groups.find(e);
    if (it != groups.end()) {
      out << " [color=\"";
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        out << (k ? ":" : "") << kPalette[it->second[k] % kPalette.size()];
      }
      out << "\", label=\"";
      for (std::size_t k = 0; k < it->second.size(); ++k) out << (k ? "," : "") << it->second[k];
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";

  out << "graph BlockCutTree {\n";
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    out << "  B" << i << " [shape=box, label=\"";
    for (std::size_t k = 0; k < bd.blocks[i].size(); ++k) out << (k ? " " : "") << bd.blocks[i][k];
    out << "\"];\n";
  }
  for (Vertex c : bd.cut_vertices) out << "  c" << c << " [shape=circle, label=\"" << c << "\"];\n";
  for (std::size_t i = 0; i < bd.block_cuts.size(); ++i) {
    for (Vertex c : bd.block_cuts[i]) out << "  B" << i << " -- c" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cobox
