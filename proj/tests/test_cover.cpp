#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cobox/blocks.hpp"
#include "cobox/cover.hpp"
#include "cobox/cover_io.hpp"
#include "cobox/generate.hpp"
#include "cobox/oracle.hpp"

using namespace cobox;

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges) { return build_graph(n, edges); }

Graph spider() { return make(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

VertexSet unite(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(a);
  return a;
}

VertexSet nbrs(const Graph& g, Vertex x) { return VertexSet(g.neighbors(x).begin(), g.neighbors(x).end()); }

VertexSet leaves_at(const Graph& g, Vertex x) {
  VertexSet out;
  for (Vertex y : g.neighbors(x)) {
    if (g.degree(y) == 1) out.push_back(y);
  }
  return out;
}

// Straightforward loop: recompute everything each iteration and always
// work on the component with the smallest vertex.
CoverResult reference_cover(const Graph& g, CoverKind kind) {
  CoverResult out;
  out.cover.kind = kind;
  Graph gamma = g;
  while (gamma.edge_count() > 0) {
    VertexSet comp;
    for (const VertexSet& c : connected_components(gamma)) {
      if (c.size() >= 2) {
        comp = c;
        break;
      }
    }
    const Graph h = gamma.induced(comp);
    IterationTrace tr;
    tr.component = comp;
    BigAnt ant;
    const Shape shape = shape_check(h);
    if (shape == Shape::clique) {
      tr.case_taken = CaseTaken::clique_or_star;
      ant = BigAnt{comp, comp.front(), comp.front()};
      tr.removed = comp;
    } else if (shape == Shape::star) {
      Vertex c = comp.front();
      for (Vertex x : comp) {
        if (h.degree(x) > 1) c = x;
      }
      const Vertex leaf = h.neighbors(c).front();
      tr.case_taken = CaseTaken::clique_or_star;
      ant = BigAnt{VertexSet{std::min(c, leaf), std::max(c, leaf)}, c, c};
      tr.removed = comp;
    } else {
      const BlockDecomposition bd = block_decomposition(h);
      const auto classes = classify_blocks(bd);
      std::optional<std::size_t> big;
      for (std::size_t i = 0; i < bd.blocks.size() && !big; ++i) {
        if (classes[i].kind == BlockKind::leaf && bd.blocks[i].size() >= 3) big = i;
      }
      if (big) {
        const Vertex v = classes[*big].cut_vertices.front();
        tr.case_taken = CaseTaken::big_leaf;
        ant = BigAnt{bd.blocks[*big], v, v};
        tr.protected_vertex = v;
        tr.removed = bd.blocks[*big];
      } else {
        const NearLeafResult nl = find_near_leaf_block(h);
        const VertexSet& q = nl.block;
        const VertexSet& cuts = classes[nl.block_index].cut_vertices;
        const Vertex v = nl.anchor ? *nl.anchor : cuts.front();
        VertexSet others;
        for (Vertex x : cuts) {
          if (x != v) others.push_back(x);
        }
        tr.protected_vertex = v;
        auto without_v = [&](VertexSet s) {
          s.erase(std::remove(s.begin(), s.end(), v), s.end());
          return s;
        };
        const Vertex u = others[0];
        if (kind == CoverKind::threshold) {
          ant = BigAnt{q, u, u};
          if (cuts.size() == 2) {
            tr.case_taken = CaseTaken::threshold_two_cuts;
            tr.removed = without_v(unite(q, nbrs(h, u)));
          } else {
            tr.case_taken = CaseTaken::threshold_many_cuts;
            tr.removed = unite(leaves_at(h, u), {u});
          }
        } else if (cuts.size() == 2) {
          tr.case_taken = CaseTaken::two_cuts;
          ant = BigAnt{q, u, v};
          tr.removed = unite(q, nbrs(h, u));
        } else {
          const Vertex w = others[1];
          tr.case_taken = CaseTaken::many_cuts;
          ant = BigAnt{q, u, w};
          tr.removed = cuts.size() == 3 ? without_v(unite(unite(q, nbrs(h, u)), nbrs(h, w)))
                                        : unite(unite(leaves_at(h, u), leaves_at(h, w)), {u, w});
        }
      }
    }
    out.cover.elements.push_back(CoverElement{big_ant(gamma, ant), ant});
    tr.element_index = out.traces.size();
    out.traces.push_back(tr);
    gamma = gamma.without(tr.removed);
  }
  return out;
}

using StepKey = std::tuple<std::string, VertexSet, Vertex, Vertex, EdgeList, VertexSet>;

std::multiset<StepKey> steps(const CoverResult& r) {
  std::multiset<StepKey> out;
  for (const IterationTrace& tr : r.traces) {
    const CoverElement& el = r.cover.elements[tr.element_index];
    out.insert({to_string(tr.case_taken), el.ant->block, el.ant->u, el.ant->v, el.subgraph.edges, tr.removed});
  }
  return out;
}

Graph sample(Rng& rng, int max_n) {
  const int n = static_cast<int>(rng.uniform(1, max_n));
  const std::uint64_t seed = rng.next();
  return rng.uniform(0, 2) == 0 ? random_block_forest(n, seed) : random_block_graph(n, seed);
}

}  // namespace

TEST_CASE("path covers") {
  for (int n = 2; n <= 30; ++n) {
    const Graph p = path_graph(n);
    const CoverResult r = min_cointerval_cover(p);
    CHECK(r.cover.size() == static_cast<std::size_t>((n - 1 + 2) / 3));
    CHECK(verify_cover(p, r.cover).valid());
    CHECK(audit_cover(p, r).empty());
  }
  CHECK(coboxicity(path_graph(7)) == 2);
  CHECK(coboxicity(path_graph(4)) == 1);
  CHECK(coboxicity(path_graph(1)) == 0);
}

TEST_CASE("small covers") {
  const Graph k5 = complete_graph(5);
  const CoverResult r = min_cointerval_cover(k5);
  REQUIRE(r.cover.size() == 1);
  CHECK(r.cover.elements[0].subgraph.edges == k5.edges());
  CHECK(r.traces[0].case_taken == CaseTaken::clique_or_star);

  CHECK(coboxicity(make(4, {{0, 1}, {2, 3}})) == 2);
  CHECK(coboxicity(Graph(5)) == 0);
  CHECK(coboxicity(Graph(0)) == 0);
  CHECK(coboxicity(spider()) == brute_coboxicity(spider(), OracleOptions{9, 16, false}));
  CHECK(cothdim(spider()) == brute_cothdim(spider(), OracleOptions{9, 16, false}));

  CHECK(cothdim(star_graph(4)) == 1);
  CHECK(cothdim(path_graph(4)) == 2);
  CHECK(cothdim(Graph(4)) == 0);
  for (int n = 2; n <= 7; ++n) CHECK(cothdim(complete_graph(n)) == 1);
  for (int n = 2; n <= 12; ++n) CHECK(cothdim(path_graph(n)) == brute_cothdim(path_graph(n)));
  for (int n = 2; n <= 9; ++n) CHECK(cothdim(path_graph(n)) == brute_cothdim(path_graph(n), OracleOptions{9, 16, false}));
}

TEST_CASE("non block graphs are rejected") {
  const Graph c4 = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(min_cointerval_cover(c4), NotBlockGraphError);
  CHECK_THROWS_AS(min_threshold_cover(c4), NotBlockGraphError);
  CHECK_THROWS_AS(coboxicity(c4), NotBlockGraphError);
  CHECK_THROWS_AS(cothdim(c4), NotBlockGraphError);
}

TEST_CASE("case formulas on hand-built graphs") {
  // 3b with exactly three cut-vertices: spider
  const CoverResult sp = min_cointerval_cover(spider());
  REQUIRE(sp.traces.size() == 2);
  CHECK(sp.traces[0].case_taken == CaseTaken::many_cuts);
  CHECK(sp.traces[0].protected_vertex == 0);
  CHECK(sp.traces[0].apexes == std::pair<Vertex, Vertex>{1, 2});
  CHECK(sp.traces[0].removed == VertexSet{1, 2, 4, 5});
  CHECK(sp.traces[1].case_taken == CaseTaken::clique_or_star);
  CHECK(audit_cover(spider(), sp).empty());

  // case 2: triangle with a tail
  const Graph tail = make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  const CoverResult tr = min_cointerval_cover(tail);
  REQUIRE(!tr.traces.empty());
  CHECK(tr.traces[0].case_taken == CaseTaken::big_leaf);
  CHECK(tr.traces[0].removed == VertexSet{0, 1, 2});
  CHECK(tr.cover.elements[0].ant == BigAnt{VertexSet{0, 1, 2}, 2, 2});

  // 3a on P5: near-leaf {1,2}, anchor 2
  const CoverResult p5 = min_cointerval_cover(path_graph(5));
  CHECK(p5.traces[0].case_taken == CaseTaken::two_cuts);
  CHECK(p5.traces[0].protected_vertex == 2);
  CHECK(p5.traces[0].removed == VertexSet{0, 1, 2});
  CHECK(p5.cover.elements[0].ant == BigAnt{VertexSet{1, 2}, 1, 2});

  // 3* on P5
  const CoverResult t5 = min_threshold_cover(path_graph(5));
  CHECK(t5.traces[0].case_taken == CaseTaken::threshold_two_cuts);
  CHECK(t5.traces[0].removed == VertexSet{0, 1});
  CHECK(t5.cover.elements[0].ant == BigAnt{VertexSet{1, 2}, 1, 1});

  // 3b with four cut-vertices: K4 with a pendant at each vertex
  const Graph k4p = make(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const CoverResult kr = min_cointerval_cover(k4p);
  CHECK(kr.traces[0].case_taken == CaseTaken::many_cuts);
  CHECK(kr.traces[0].removed == VertexSet{1, 2, 5, 6});
  CHECK(kr.cover.size() == static_cast<std::size_t>(brute_coboxicity(k4p, OracleOptions{9, 16, false})));
  const CoverResult kt = min_threshold_cover(k4p);
  CHECK(kt.traces[0].case_taken == CaseTaken::threshold_many_cuts);
  CHECK(kt.traces[0].removed == VertexSet{1, 5});
  CHECK(audit_cover(k4p, kr).empty());
  CHECK(audit_cover(k4p, kt).empty());
}

TEST_CASE("engine matches the straightforward loop") {
  Rng rng(41);
  std::set<std::string> seen;
  for (int trial = 0; trial < 600; ++trial) {
    const Graph g = sample(rng, trial < 300 ? 15 : 120);
    for (CoverKind kind : {CoverKind::cointerval, CoverKind::threshold}) {
      const CoverResult fast = kind == CoverKind::cointerval ? min_cointerval_cover(g) : min_threshold_cover(g);
      const CoverResult slow = reference_cover(g, kind);
      CHECK(steps(fast) == steps(slow));
      CHECK(audit_cover(g, fast).empty());
      for (const IterationTrace& t : fast.traces) {
        seen.insert(to_string(t.case_taken));
        CHECK(std::includes(t.component.begin(), t.component.end(), t.removed.begin(), t.removed.end()));
      }
      CoverOptions lean;
      lean.record_components = false;
      const CoverResult quiet = kind == CoverKind::cointerval ? min_cointerval_cover(g, lean) : min_threshold_cover(g, lean);
      CHECK(steps(quiet) == steps(fast));
    }
  }
  CHECK(seen == std::set<std::string>{"1", "2", "3a", "3b", "3*-2cuts", "3*-many"});
}

TEST_CASE("covers are optimal, valid and within the threshold bounds") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = sample(rng, 12);
    const CoverResult co = min_cointerval_cover(g);
    const CoverResult th = min_threshold_cover(g);
    CHECK(static_cast<int>(co.cover.size()) == brute_coboxicity(g));
    CHECK(static_cast<int>(th.cover.size()) == brute_cothdim(g));
    CHECK(verify_cover(g, co.cover).valid());
    CHECK(verify_cover(g, th.cover).valid());
    CHECK(co.cover.size() <= th.cover.size());
    CHECK(th.cover.size() <= 2 * co.cover.size());
    for (const CoverElement& el : th.cover.elements) CHECK(is_threshold(el.subgraph.as_graph()));
  }
}

TEST_CASE("additivity over disjoint unions") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = sample(rng, 40);
    const Graph b = sample(rng, 40);
    const Graph u = disjoint_union(a, b);
    CHECK(coboxicity(u) == coboxicity(a) + coboxicity(b));
    CHECK(cothdim(u) == cothdim(a) + cothdim(b));
  }
}

TEST_CASE("verify_cover reports") {
  const Graph p4 = path_graph(4);
  CHECK(verify_cover(p4, min_cointerval_cover(p4).cover).valid());

  Cover missing;
  missing.elements.push_back(CoverElement{subgraph_from_edges(EdgeList{{0, 1}, {1, 2}}), std::nullopt});
  const VerificationReport r1 = verify_cover(p4, missing);
  CHECK_FALSE(r1.valid());
  CHECK(r1.uncovered == EdgeList{{2, 3}});
  CHECK(r1.not_subgraph.empty());
  CHECK(r1.recognition_failures.empty());

  const Graph two = make(4, {{0, 1}, {2, 3}});
  Cover whole;
  whole.elements.push_back(CoverElement{subgraph_from_edges(two.edges()), std::nullopt});
  const VerificationReport r2 = verify_cover(two, whole);
  CHECK(r2.recognition_failures == std::vector<std::size_t>{0});
  CHECK(r2.uncovered.empty());

  Cover foreign;
  foreign.elements.push_back(CoverElement{subgraph_from_edges(EdgeList{{0, 2}}), std::nullopt});
  CHECK(verify_cover(p4, foreign).not_subgraph == std::vector<std::size_t>{0});

  Cover p4_threshold;
  p4_threshold.kind = CoverKind::threshold;
  p4_threshold.elements.push_back(CoverElement{subgraph_from_edges(p4.edges()), std::nullopt});
  CHECK(verify_cover(p4, p4_threshold).recognition_failures == std::vector<std::size_t>{0});

  CHECK(write_verification_report(r1) == "invalid\nuncovered: 2 3\n");
  CHECK(write_verification_report(VerificationReport{}) == "valid\n");
}

TEST_CASE("audit_cover catches tampering") {
  const Graph g = path_graph(7);
  CoverResult r = min_cointerval_cover(g);
  REQUIRE(audit_cover(g, r).empty());

  CoverResult shrunk = r;
  shrunk.traces[0].removed.pop_back();
  CHECK_FALSE(audit_cover(g, shrunk).empty());

  CoverResult swapped = r;
  swapped.cover.elements[0].ant->u = swapped.cover.elements[0].ant->v;
  CHECK_FALSE(audit_cover(g, swapped).empty());

  CoverResult relabelled = r;
  relabelled.traces[0].case_taken = CaseTaken::many_cuts;
  CHECK_FALSE(audit_cover(g, relabelled).empty());

  CoverResult short_run = r;
  short_run.traces.pop_back();
  short_run.cover.elements.pop_back();
  CHECK_FALSE(audit_cover(g, short_run).empty());

  CoverResult wrong_kind = r;
  wrong_kind.cover.kind = CoverKind::threshold;
  CHECK_FALSE(audit_cover(g, wrong_kind).empty());
}

TEST_CASE("box representations") {
  const Graph k2 = complete_graph(2);
  const BoxRepresentation b2 = cover_to_box_representation(k2, min_cointerval_cover(k2).cover);
  CHECK(b2.dimension == 1);
  CHECK_FALSE(intersects(b2.boxes.at(0)[0], b2.boxes.at(1)[0]));

  const Graph p7 = path_graph(7);
  const BoxRepresentation b7 = cover_to_box_representation(p7, min_cointerval_cover(p7).cover);
  CHECK(b7.dimension == 2);
  CHECK(represents_complement(p7, b7));

  const Graph empty4(4);
  const BoxRepresentation e4 = cover_to_box_representation(empty4, Cover{});
  CHECK(e4.dimension == 1);
  CHECK(e4.boxes.size() == 4);
  for (const auto& [v, box] : e4.boxes) CHECK(box == e4.boxes.at(0));
  CHECK(represents_complement(empty4, e4));

  Cover missing;
  missing.elements.push_back(CoverElement{subgraph_from_edges(EdgeList{{0, 1}}), std::nullopt});
  CHECK_THROWS_AS(cover_to_box_representation(p7, missing), InputError);

  // oracle covers carry no big ants and fall back to recognition
  Rng rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = sample(rng, 10);
    CHECK(represents_complement(g, cover_to_box_representation(g, min_cointerval_cover(g).cover)));
    CHECK(represents_complement(g, cover_to_box_representation(g, min_threshold_cover(g).cover)));
    CHECK(represents_complement(g, cover_to_box_representation(g, brute_cointerval_cover(g))));
  }

  BoxRepresentation broken = b7;
  broken.boxes.at(0)[0] = Interval{0, 100};
  broken.boxes.at(0)[1] = Interval{0, 100};
  CHECK_FALSE(represents_complement(p7, broken));
  CHECK(write_box_json(b2) == R"({"boxes":{"0":[[1,2]],"1":[[5,6]]},"d":1})"
                              "\n");
}

TEST_CASE("path_coboxicity") {
  CHECK(path_coboxicity(1) == 0);
  CHECK(path_coboxicity(4) == 1);
  CHECK(path_coboxicity(10) == 3);
  CHECK(path_coboxicity(2) == 1);
  CHECK_THROWS_AS(path_coboxicity(0), InputError);
}

TEST_CASE("cover json round trip") {
  Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = sample(rng, 40);
    for (CoverKind kind : {CoverKind::cointerval, CoverKind::threshold}) {
      const CoverResult r = kind == CoverKind::cointerval ? min_cointerval_cover(g) : min_threshold_cover(g);
      const CoverResult back = read_cover_json(write_cover_json(r));
      CHECK(back.cover.kind == kind);
      CHECK(back.cover.size() == r.cover.size());
      CHECK(steps(back) == steps(r));
      CHECK(verify_cover(g, back.cover).valid());
      CHECK(audit_cover(g, back).empty());
      CHECK(write_cover_json(back) == write_cover_json(r));
    }
  }
  CHECK_THROWS_AS(read_cover_json("{"), ParseError);
  CHECK_THROWS_AS(read_cover_json(R"({"kind":"box","elements":[]})"), ParseError);
  CHECK_THROWS_AS(read_cover_json(R"({"kind":"threshold","size":2,"elements":[]})"), ParseError);
  CHECK_THROWS_AS(read_cover_json(R"({"kind":"threshold","elements":[{"edges":[[1,1]]}]})"), ParseError);
  const CoverResult bare = read_cover_json(R"({"kind":"cointerval","elements":[{"edges":[[0,1],[1,2]]}]})");
  CHECK(bare.cover.size() == 1);
  CHECK_FALSE(bare.cover.elements[0].ant.has_value());
  CHECK(verify_cover(path_graph(3), bare.cover).valid());
}

TEST_CASE("case names") {
  for (CaseTaken c : {CaseTaken::clique_or_star, CaseTaken::big_leaf, CaseTaken::two_cuts, CaseTaken::many_cuts,
                      CaseTaken::threshold_two_cuts, CaseTaken::threshold_many_cuts}) {
    CHECK(parse_case_taken(to_string(c)) == c);
  }
  CHECK(to_string(CaseTaken::threshold_two_cuts) == "3*-2cuts");
  CHECK(parse_cover_kind("threshold") == CoverKind::threshold);
  CHECK_THROWS_AS(parse_case_taken("4"), ParseError);
}
