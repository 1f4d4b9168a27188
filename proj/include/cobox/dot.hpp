#pragma once

#include <optional>
#include <string>

#include "cobox/blocks.hpp"
#include "cobox/cover.hpp"

namespace cobox {

/// Two DOT graphs: `G` with cover elements as coloured edge groups (an edge
/// in several elements gets a colour list), then `BlockCutTree` with nodes
/// B<i> for blocks and c<v> for cut-vertices. InputError when bd was not
/// computed from g.
std::string export_dot(const Graph& g, const BlockDecomposition& bd, const std::optional<Cover>& cover = std::nullopt);

}  // namespace cobox
