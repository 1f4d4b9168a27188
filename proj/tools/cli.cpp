#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "cobox/acceptance.hpp"
#include "cobox/blocks.hpp"
#include "cobox/cover.hpp"
#include "cobox/cover_io.hpp"
#include "cobox/dot.hpp"
#include "cobox/oracle.hpp"

namespace cobox::cli {

namespace {

std::string slurp(const RunConfig& config, std::istream& in) {
  if (config.input_path) return read_text_file(*config.input_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CoverResult compute(const Graph& g, CoverKind kind) {
  return kind == CoverKind::cointerval ? min_cointerval_cover(g) : min_threshold_cover(g);
}

CoverResult cover_for(const RunConfig& config, const Graph& g, CoverKind kind) {
  if (config.cover_path) return read_cover_json(read_text_file(*config.cover_path));
  return compute(g, kind);
}

int dispatch(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::gen: {
      if (!config.seed) throw InputError("gen requires --seed");
      if (config.n < 1) throw InputError("gen requires --n of at least 1");
      out << write_graph(random_block_graph(config.n, *config.seed, config.distribution), config.format);
      return 0;
    }
    case Command::harness: {
      AcceptanceOptions options;
      if (config.seed) options.seed = *config.seed;
      options.large_n = config.large_n;
      return print_acceptance(run_acceptance(options), out) ? 0 : 1;
    }
    default: break;
  }

  const Graph g = read_graph(slurp(config, in), config.format);
  const CoverKind kind = config.command == Command::cothdim ? CoverKind::threshold : parse_cover_kind(config.kind);

  switch (config.command) {
    case Command::coboxicity:
    case Command::cothdim: {
      if (config.oracle) {
        const Cover c = kind == CoverKind::cointerval ? brute_cointerval_cover(g) : brute_threshold_cover(g);
        out << c.size() << '\n';
        if (config.show_cover) out << write_cover_json(c);
        return 0;
      }
      const CoverResult res = compute(g, kind);
      out << res.cover.size() << '\n';
      if (config.show_cover) out << write_cover_json(res);
      return 0;
    }
    case Command::cover: {
      if (config.oracle) {
        out << write_cover_json(kind == CoverKind::cointerval ? brute_cointerval_cover(g) : brute_threshold_cover(g));
        return 0;
      }
      out << write_cover_json(compute(g, kind));
      return 0;
    }
    case Command::verify: {
      if (!config.cover_path) throw InputError("verify requires --cover");
      const CoverResult res = read_cover_json(read_text_file(*config.cover_path));
      const VerificationReport report = verify_cover(g, res.cover);
      out << write_verification_report(report);
      return report.valid() ? 0 : 1;
    }
    case Command::boxrep: {
      const CoverResult res = cover_for(config, g, CoverKind::cointerval);
      out << write_box_json(cover_to_box_representation(g, res.cover));
      return 0;
    }
    case Command::dot: {
      const BlockDecomposition bd = block_decomposition(g);
      std::optional<Cover> cover;
      if (config.cover_path || config.show_cover) cover = cover_for(config, g, kind).cover;
      out << export_dot(g, bd, cover);
      return 0;
    }
    default: break;
  }
  err << "unhandled command\n";
  return 2;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "coboxicity") return Command::coboxicity;
  if (name == "cothdim") return Command::cothdim;
  if (name == "cover") return Command::cover;
  if (name == "verify") return Command::verify;
  if (name == "boxrep") return Command::boxrep;
  if (name == "gen") return Command::gen;
  if (name == "harness") return Command::harness;
  if (name == "dot") return Command::dot;
  return std::nullopt;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = 0;
  try {
    status = dispatch(config, in, buffer, err);
  } catch (const NotBlockGraphError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const PreconditionError& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *config.output_path << '\n';
      return 2;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace cobox::cli
