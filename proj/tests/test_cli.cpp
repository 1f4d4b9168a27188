#include <doctest.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "cobox/cover_io.hpp"
#include "cobox/graph_io.hpp"

using namespace cobox;
using cobox::cli::Command;
using cobox::cli::RunConfig;

namespace {

std::string data(const std::string& name) { return std::string(COBOX_TEST_DATA) + "/" + name; }

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& config, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(config, in, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config(Command c, std::optional<std::string> input = std::nullopt) {
  RunConfig r;
  r.command = c;
  r.input_path = std::move(input);
  return r;
}

}  // namespace

TEST_CASE("numbers") {
  CHECK(run(config(Command::coboxicity, data("p7.txt"))).out == "2\n");
  CHECK(run(config(Command::cothdim, data("p4.txt"))).out == "2\n");
  CHECK(run(config(Command::coboxicity), "4 3\n0 1\n1 2\n2 3\n").out == "1\n");
  RunConfig oracle = config(Command::coboxicity, data("p7.txt"));
  oracle.oracle = true;
  CHECK(run(oracle).out == "2\n");
  RunConfig shown = config(Command::coboxicity, data("p4.txt"));
  shown.show_cover = true;
  const Outcome o = run(shown);
  CHECK(o.out.rfind("1\n", 0) == 0);
  CHECK(o.out.size() > 2);
}

TEST_CASE("verify") {
  RunConfig ok = config(Command::verify, data("p4.txt"));
  ok.cover_path = data("p4_cover.json");
  const Outcome good = run(ok);
  CHECK(good.status == 0);
  CHECK(good.out == "valid\n");

  ok.cover_path = data("p4_partial.json");
  const Outcome bad = run(ok);
  CHECK(bad.status == 1);
  CHECK(bad.out == "invalid\nuncovered: 2 3\n");
}

TEST_CASE("exit codes") {
  CHECK(run(config(Command::coboxicity, data("c4.txt"))).status == 3);
  CHECK(run(config(Command::coboxicity, data("missing.txt"))).status == 2);
  CHECK(run(config(Command::coboxicity), "3 1\n0 9\n").status == 2);
  CHECK(run(config(Command::coboxicity), "garbage").status == 2);
  RunConfig big = config(Command::coboxicity);
  big.oracle = true;
  const Outcome o = run(big, write_edgelist(random_block_graph(40, 3)));
  CHECK(o.status == 2);
  CHECK_FALSE(o.err.empty());
  RunConfig general = config(Command::coboxicity, data("c4.txt"));
  general.oracle = true;
  CHECK(run(general).out == "1\n");
}

TEST_CASE("gen is reproducible") {
  RunConfig g = config(Command::gen);
  g.seed = 7;
  g.n = 50;
  const Outcome a = run(g);
  const Outcome b = run(g);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(read_edgelist(a.out).vertex_count() == 50);
  g.format = GraphFormat::structured;
  CHECK(read_structured(run(g).out) == read_edgelist(a.out));
}

TEST_CASE("cover and boxrep output") {
  RunConfig c = config(Command::cover, data("p7.txt"));
  const CoverResult r = read_cover_json(run(c).out);
  CHECK(r.cover.size() == 2);
  CHECK(r.traces.size() == 2);
  c.kind = "threshold";
  CHECK(read_cover_json(run(c).out).cover.kind == CoverKind::threshold);

  RunConfig b = config(Command::boxrep, data("p4.txt"));
  b.cover_path = data("p4_cover.json");
  const Outcome box = run(b);
  CHECK(box.status == 0);
  CHECK(box.out.find("\"d\":1") != std::string::npos);
  b.cover_path = data("p4_partial.json");
  CHECK(run(b).status == 2);
}

TEST_CASE("dot export") {
  const Outcome k3 = run(config(Command::dot), "3 3\n0 1\n0 2\n1 2\n");
  CHECK(k3.status == 0);
  CHECK(k3.out.find("graph G {") != std::string::npos);
  CHECK(k3.out.find("graph BlockCutTree {") != std::string::npos);
  CHECK(k3.out.find("B0") != std::string::npos);

  RunConfig coloured = config(Command::dot, data("p4.txt"));
  coloured.cover_path = data("p4_cover.json");
  const Outcome p4 = run(coloured);
  CHECK(p4.status == 0);
  CHECK(p4.out.find("color") != std::string::npos);

  CHECK(run(config(Command::dot), "0 0\n").status == 0);

  RunConfig mismatch = config(Command::dot, data("p4.txt"));
  mismatch.cover_path = data("p4_cover.json");
  mismatch.input_path = data("p7.txt");
  CHECK(run(mismatch).status == 0);
  RunConfig wrong = config(Command::dot);
  wrong.cover_path = data("p4_cover.json");
  CHECK(run(wrong, "3 1\n0 1\n").status == 2);
}

TEST_CASE("command names") {
  CHECK(cli::parse_command("cothdim") == Command::cothdim);
  CHECK_FALSE(cli::parse_command("boxicity").has_value());
}
