#include <CLI11.hpp>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using cobox::cli::Command;
  cobox::cli::RunConfig config;
  std::string format = "edgelist";
  std::string input;
  std::string cover;
  std::string output;
  std::uint64_t seed = 0;

  CLI::App app{"co-boxicity and threshold co-dimension of block graphs"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", input, "graph file (standard input when omitted)");
    sub->add_option("--format", format, "edgelist or structured")->check(CLI::IsMember({"edgelist", "structured", "json"}));
    sub->add_option("-o,--output", output, "write output here");
  };

  auto* cobox = app.add_subcommand("coboxicity", "minimum co-interval cover size");
  auto* cothdim = app.add_subcommand("cothdim", "minimum threshold cover size");
  for (auto* sub : {cobox, cothdim}) {
    add_common(sub, true);
    sub->add_flag("--oracle", config.oracle, "brute-force value (small graphs only)");
    sub->add_flag("--show-cover", config.show_cover, "also print the cover");
  }
  auto* cover_cmd = app.add_subcommand("cover", "cover with per-iteration traces as JSON");
  add_common(cover_cmd, true);
  cover_cmd->add_option("--kind", config.kind, "cointerval or threshold")->check(CLI::IsMember({"cointerval", "threshold"}));
  cover_cmd->add_flag("--oracle", config.oracle, "brute-force cover (small graphs only)");

  auto* verify = app.add_subcommand("verify", "check a cover against a graph");
  add_common(verify, true);
  verify->add_option("--cover", cover, "cover JSON")->required();

  auto* boxrep = app.add_subcommand("boxrep", "box representation of the complement");
  add_common(boxrep, true);
  boxrep->add_option("--cover", cover, "cover JSON (computed when omitted)");

  auto* dot = app.add_subcommand("dot", "Graphviz export with block-cut tree");
  add_common(dot, true);
  dot->add_option("--cover", cover, "cover JSON to colour");
  dot->add_flag("--with-cover", config.show_cover, "compute and colour a cover");
  dot->add_option("--kind", config.kind, "cointerval or threshold")->check(CLI::IsMember({"cointerval", "threshold"}));

  auto* gen = app.add_subcommand("gen", "seeded random block graph");
  add_common(gen, false);
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--n", config.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--p-edge", config.distribution.p_edge, "probability of an edge block")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--min-clique", config.distribution.min_clique, "smallest larger block");
  gen->add_option("--max-clique", config.distribution.max_clique, "largest block");

  auto* harness = app.add_subcommand("harness", "acceptance criteria, one line each");
  add_common(harness, false);
  harness->add_option("--seed", seed, "corpus seed");
  harness->add_option("--large-n", config.large_n, "vertices in the timing instance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  config.command = *cobox::cli::parse_command(chosen->get_name());
  config.format = cobox::parse_graph_format(format);
  if (!input.empty()) config.input_path = input;
  if (!cover.empty()) config.cover_path = cover;
  if (!output.empty()) config.output_path = output;
  if (const auto* opt = chosen->get_option_no_throw("--seed"); opt != nullptr && opt->count() > 0) config.seed = seed;
  return cobox::cli::run(config, std::cin, std::cout, std::cerr);
}
