#include "cobox/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cobox {

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  const EdgeList edges = g.edges();
  out << g.id_bound() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

Graph read_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw ParseError("edgelist: missing `n m` header");
  if (n < 0 || m < 0 || n > (1LL << 30)) throw ParseError("edgelist: invalid header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edgelist: expected " + std::to_string(m) + " edges, read " +
                                          std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edgelist: edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("edgelist: unexpected trailing token '" + trailing + "'");
  return build_graph(static_cast<int>(n), edges);
}

std::string write_structured(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.id_bound();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph read_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("structured graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("structured graph: missing integer field \"n\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > (1LL << 30)) throw ParseError("structured graph: invalid \"n\"");
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("structured graph: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError("structured graph: every edge must be a pair of integers");
      }
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("structured graph: edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " out of range");
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edgelist ? write_edgelist(g) : write_structured(g);
}

Graph read_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edgelist ? read_edgelist(text) : read_structured(text);
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "structured" || name == "json") return GraphFormat::structured;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cobox
