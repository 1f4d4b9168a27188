#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cobox/graph.hpp"

namespace cobox {

enum class GraphFormat { edgelist, structured };

/// `n m` header followed by m lines `u v` (u < v, lexicographic order).
/// The vertex set written is {0..id_bound()-1}.
std::string write_edgelist(const Graph& g);

/// Accepts the canonical layout plus any edge order, orientation or
/// duplicates. Malformed text throws ParseError; bad edges throw InputError.
Graph read_edgelist(std::string_view text);

/// {"n": int, "edges": [[u,v],...]}
std::string write_structured(const Graph& g);
Graph read_structured(std::string_view text);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

GraphFormat parse_graph_format(std::string_view name);

std::string read_text_file(const std::string& path);

}  // namespace cobox
