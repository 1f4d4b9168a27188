#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cobox/generate.hpp"
#include "cobox/graph_io.hpp"

namespace cobox::cli {

enum class Command { coboxicity, cothdim, cover, verify, boxrep, gen, harness, dot };

struct RunConfig {
  Command command = Command::coboxicity;
  /// Graph input; standard input when absent.
  std::optional<std::string> input_path;
  /// Cover JSON for verify, boxrep and dot.
  std::optional<std::string> cover_path;
  GraphFormat format = GraphFormat::edgelist;
  std::optional<std::uint64_t> seed;
  /// Brute-force value instead of the covering loop (bounded size).
  bool oracle = false;
  std::optional<std::string> output_path;
  /// Print the cover after the number.
  bool show_cover = false;
  /// For `cover` and `dot`.
  std::string kind = "cointerval";
  int n = 0;
  BlockSizeDistribution distribution;
  /// For `harness`.
  int large_n = 100000;
};

std::optional<Command> parse_command(const std::string& name);

/// Exit status: 0 success, 1 verify found the cover invalid or the harness
/// failed, 2 unreadable input or size bound exceeded, 3 input is not a
/// block graph, 4 internal invariant violated.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cobox::cli
