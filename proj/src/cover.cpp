#include "cobox/cover.hpp"

#include <algorithm>
#include <set>

#include "cobox/blocks.hpp"

namespace cobox {

VerificationReport verify_cover(const Graph& g, const Cover& c) {
  VerificationReport report;
  std::set<Edge> covered;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const EdgeSubgraph& s = c.elements[i].subgraph;
    if (!is_subgraph_of(g, s)) {
      report.not_subgraph.push_back(i);
      continue;
    }
    const Graph h = s.as_graph();
    const bool ok = c.kind == CoverKind::cointerval ? is_cointerval(h).has_value() : is_threshold(h);
    if (!ok) report.recognition_failures.push_back(i);
    covered.insert(s.edges.begin(), s.edges.end());
  }
  for (const Edge& e : g.edges()) {
    if (!covered.count(e)) report.uncovered.push_back(e);
  }
  return report;
}

namespace {

std::string show(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

VertexSet join(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(a);
  return a;
}

VertexSet neighbourhood(const Graph& g, Vertex x) {
  auto span = g.neighbors(x);
  return VertexSet(span.begin(), span.end());
}

VertexSet leaves_adjacent(const Graph& g, Vertex x) {
  VertexSet out;
  for (Vertex y : g.neighbors(x)) {
    if (g.degree(y) == 1) out.push_back(y);
  }
  return out;
}

}  // namespace

std::vector<std::string> audit_cover(const Graph& g, const CoverResult& result) {
  std::vector<std::string> problems;
  const Cover& cover = result.cover;
  if (result.traces.size() != cover.size()) problems.push_back("trace count differs from cover size");

  Graph gamma = g;
  for (std::size_t t = 0; t < result.traces.size(); ++t) {
    const IterationTrace& tr = result.traces[t];
    const std::string at = "iteration " + std::to_string(t) + ": ";
    auto fail = [&](const std::string& msg) { problems.push_back(at + msg); };

    if (tr.element_index >= cover.size()) {
      fail("element index out of range");
      break;
    }
    const CoverElement& element = cover.elements[tr.element_index];
    if (!element.ant) {
      fail("element carries no big ant");
      break;
    }
    const BigAnt& ant = *element.ant;
    if (tr.removed.empty()) {
      fail("empty removal set");
      break;
    }
    for (Vertex r : tr.removed) {
      if (!gamma.has_vertex(r)) {
        fail("removes vertex " + std::to_string(r) + " twice");
        return problems;
      }
    }

    const bool threshold_case =
        tr.case_taken == CaseTaken::threshold_two_cuts || tr.case_taken == CaseTaken::threshold_many_cuts;
    const bool plain_three = tr.case_taken == CaseTaken::two_cuts || tr.case_taken == CaseTaken::many_cuts;
    if ((cover.kind == CoverKind::cointerval && threshold_case) ||
        (cover.kind == CoverKind::threshold && plain_three)) {
      fail("case " + to_string(tr.case_taken) + " does not belong to a " + to_string(cover.kind) + " cover");
    }

    try {
      if (!(big_ant(gamma, ant) == element.subgraph)) fail("element is not the big ant of its block in the residual graph");
    } catch (const InputError& e) {
      fail(std::string("element block is not a clique of the residual graph: ") + e.what());
    }

    VertexSet component;
    for (const VertexSet& comp : connected_components(gamma)) {
      if (std::binary_search(comp.begin(), comp.end(), tr.removed.front())) component = comp;
    }
    if (!std::includes(component.begin(), component.end(), tr.removed.begin(), tr.removed.end())) {
      fail("removed set leaves its component");
    }
    if (!tr.component.empty() && tr.component != component) fail("recorded component " + show(tr.component) + " is wrong");
    const Graph h = gamma.induced(component);
    if (h.edge_count() == 0) {
      fail("component has no edges");
      break;
    }
    const Shape shape = shape_check(h);

    const BlockDecomposition bd = block_decomposition(h);
    const auto classes = classify_blocks(bd);
    std::optional<std::size_t> block_index;
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
      if (bd.blocks[i] == ant.block) block_index = i;
    }

    VertexSet expected;
    switch (tr.case_taken) {
      case CaseTaken::clique_or_star: {
        if (shape == Shape::neither) fail("case 1 on a component that is neither clique nor star");
        if (shape == Shape::clique && (ant.block != component || ant.u != component.front() || ant.v != ant.u)) {
          fail("case 1 clique element is not Q_u for the whole component");
        }
        if (shape == Shape::star) {
          Vertex centre = component.front();
          for (Vertex x : component) {
            if (h.degree(x) > 1) centre = x;
          }
          const Vertex leaf = h.neighbors(centre).front();
          if (ant.u != centre || ant.v != centre || ant.block != VertexSet{std::min(centre, leaf), std::max(centre, leaf)}) {
            fail("case 1 star element is not anchored at the centre");
          }
        }
        expected = component;
        break;
      }
      case CaseTaken::big_leaf: {
        if (shape != Shape::neither) fail("case 2 on a clique or star");
        if (!block_index || classes[*block_index].kind != BlockKind::leaf || ant.block.size() < 3) {
          fail("case 2 block " + show(ant.block) + " is not a leaf block of size at least 3");
          break;
        }
        const Vertex v = classes[*block_index].cut_vertices.front();
        if (ant.u != v || ant.v != v || tr.protected_vertex != v) fail("case 2 apex is not the block's cut-vertex");
        expected = ant.block;
        break;
      }
      default: {
        if (shape != Shape::neither) fail("case 3 on a clique or star");
        for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
          if (classes[i].kind == BlockKind::leaf && bd.blocks[i].size() >= 3) {
            fail("case 3 while a leaf block of size at least 3 remains");
            break;
          }
        }
        const auto near = block_index ? near_leaf_at(bd, classes, *block_index) : std::nullopt;
        if (!near) {
          fail("case 3 block " + show(ant.block) + " is not near-leaf");
          break;
        }
        const VertexSet& cuts = classes[*block_index].cut_vertices;
        const Vertex v = near->anchor ? *near->anchor : cuts.front();
        if (tr.protected_vertex != v) fail("protected vertex is not the anchor or smallest cut-vertex");
        VertexSet others;
        for (Vertex x : cuts) {
          if (x != v) others.push_back(x);
        }
        auto member = [&](Vertex x) { return std::binary_search(others.begin(), others.end(), x); };
        auto minus_v = [&](VertexSet s) {
          s.erase(std::remove(s.begin(), s.end(), v), s.end());
          return s;
        };
        if (tr.case_taken == CaseTaken::two_cuts || tr.case_taken == CaseTaken::threshold_two_cuts) {
          if (cuts.size() != 2) fail("two-cut case on a block with " + std::to_string(cuts.size()) + " cut-vertices");
        } else if (cuts.size() < 3) {
          fail("many-cut case on a block with " + std::to_string(cuts.size()) + " cut-vertices");
        }
        const Vertex u = ant.u;
        switch (tr.case_taken) {
          case CaseTaken::two_cuts:
            if (!member(u) || ant.v != v) fail("3a apexes are not (other cut-vertex, protected)");
            expected = join(ant.block, neighbourhood(h, u));
            break;
          case CaseTaken::many_cuts: {
            const Vertex w = ant.v;
            if (!member(u) || !member(w) || u == w) fail("3b apexes are not two distinct non-protected cut-vertices");
            if (cuts.size() == 3) {
              expected = minus_v(join(join(ant.block, neighbourhood(h, u)), neighbourhood(h, w)));
            } else {
              expected = join(join(leaves_adjacent(h, u), leaves_adjacent(h, w)), {u, w});
            }
            break;
          }
          case CaseTaken::threshold_two_cuts:
            if (!member(u) || ant.v != u) fail("3* apex is not a non-protected cut-vertex");
            expected = minus_v(join(ant.block, neighbourhood(h, u)));
            break;
          default:
            if (!member(u) || ant.v != u) fail("3* apex is not a non-protected cut-vertex");
            expected = join(leaves_adjacent(h, u), {u});
            break;
        }
        break;
      }
    }
    if (!expected.empty() && expected != tr.removed) {
      fail("removed " + show(tr.removed) + " but the case formula gives " + show(expected));
    }

    bool drops_edge = false;
    for (Vertex r : tr.removed) {
      for (Vertex y : gamma.neighbors(r)) {
        drops_edge = true;
        const Edge e = make_edge(r, y);
        if (!std::binary_search(element.subgraph.edges.begin(), element.subgraph.edges.end(), e)) {
          fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " at a removed vertex is not covered");
        }
      }
    }
    if (!drops_edge) fail("no edge leaves the residual graph");
    gamma = gamma.without(tr.removed);
  }
  if (gamma.edge_count() != 0) problems.push_back("edges remain after the last iteration");
  return problems;
}

BoxRepresentation cover_to_box_representation(const Graph& g, const Cover& c) {
  if (!verify_cover(g, c).valid()) throw InputError("cover_to_box_representation: cover is not valid for the graph");
  BoxRepresentation out;
  const VertexSet verts = g.vertices();
  if (c.elements.empty()) {
    out.dimension = 1;
    for (Vertex v : verts) out.boxes[v] = {Interval{0, 0}};
    return out;
  }
  out.dimension = static_cast<int>(c.elements.size());
  for (Vertex v : verts) out.boxes[v].reserve(c.elements.size());
  for (const CoverElement& element : c.elements) {
    const Graph h = element.subgraph.as_graph();
    IntervalRepresentation rep;
    bool laid_out = false;
    if (element.ant) {
      try {
        laid_out = big_ant(h, *element.ant) == element.subgraph;
      } catch (const InputError&) {
        laid_out = false;
      }
    }
    rep = laid_out ? cointerval_representation(h, *element.ant) : cointerval_representation(h);
    int top = 0;
    for (const auto& [v, iv] : rep) top = std::max(top, iv.hi);
    for (Vertex v : verts) {
      auto it = rep.find(v);
      out.boxes[v].push_back(it == rep.end() ? Interval{0, top} : it->second);
    }
  }
  return out;
}

bool represents_complement(const Graph& g, const BoxRepresentation& boxes) {
  const VertexSet verts = g.vertices();
  if (boxes.dimension < 1 || boxes.boxes.size() != verts.size()) return false;
  for (Vertex v : verts) {
    auto it = boxes.boxes.find(v);
    if (it == boxes.boxes.end() || static_cast<int>(it->second.size()) != boxes.dimension) return false;
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& bx = boxes.boxes.at(verts[i]);
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const auto& by = boxes.boxes.at(verts[j]);
      bool disjoint = false;
      for (std::size_t k = 0; k < bx.size() && !disjoint; ++k) disjoint = !intersects(bx[k], by[k]);
      if (disjoint != g.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

int path_coboxicity(int n) {
  if (n < 1) throw InputError("path_coboxicity: n must be at least 1");
  return (n - 1 + 2) / 3;
}

std::string to_string(CoverKind k) { return k == CoverKind::cointerval ? "cointerval" : "threshold"; }

std::string to_string(CaseTaken c) {
  switch (c) {
    case CaseTaken::clique_or_star: return "1";
    case CaseTaken::big_leaf: return "2";
    case CaseTaken::two_cuts: return "3a";
    case CaseTaken::many_cuts: return "3b";
    case CaseTaken::threshold_two_cuts: return "3*-2cuts";
    case CaseTaken::threshold_many_cuts: return "3*-many";
  }
  return "?";
}

CoverKind parse_cover_kind(const std::string& name) {
  if (name == "cointerval") return CoverKind::cointerval;
  if (name == "threshold") return CoverKind::threshold;
  throw ParseError("unknown cover kind '" + name + "'");
}

CaseTaken parse_case_taken(const std::string& name) {
  for (CaseTaken c : {CaseTaken::clique_or_star, CaseTaken::big_leaf, CaseTaken::two_cuts, CaseTaken::many_cuts,
                      CaseTaken::threshold_two_cuts, CaseTaken::threshold_many_cuts}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError("unknown case '" + name + "'");
}

}  // namespace cobox
