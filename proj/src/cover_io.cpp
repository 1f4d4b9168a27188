#include "cobox/cover_io.hpp"

#include <json.hpp>

namespace cobox {

using nlohmann::json;

namespace {

json edges_json(const EdgeList& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.a, e.b});
  return out;
}

VertexSet vertex_list(const json& j) {
  VertexSet out = j.get<VertexSet>();
  normalize(out);
  return out;
}

}  // namespace

std::string write_cover_json(const CoverResult& result) {
  const Cover& cover = result.cover;
  json doc;
  doc["kind"] = to_string(cover.kind);
  doc["size"] = cover.size();
  doc["elements"] = json::array();
  for (const CoverElement& el : cover.elements) {
    json e;
    if (el.ant) {
      e["block"] = el.ant->block;
      e["u"] = el.ant->u;
      e["v"] = el.ant->v;
    }
    e["vertices"] = el.subgraph.vertices;
    e["edges"] = edges_json(el.subgraph.edges);
    doc["elements"].push_back(std::move(e));
  }
  doc["traces"] = json::array();
  for (const IterationTrace& tr : result.traces) {
    json t;
    t["case"] = to_string(tr.case_taken);
    t["component"] = tr.component;
    t["block"] = tr.chosen_block ? json(*tr.chosen_block) : json(nullptr);
    t["protected"] = tr.protected_vertex ? json(*tr.protected_vertex) : json(nullptr);
    t["apexes"] = tr.apexes ? json::array({tr.apexes->first, tr.apexes->second}) : json(nullptr);
    t["removed"] = tr.removed;
    t["element"] = tr.element_index;
    doc["traces"].push_back(std::move(t));
  }
  return doc.dump(1) + "\n";
}

CoverResult read_cover_json(std::string_view text) {
  CoverResult result;
  try {
    const json doc = json::parse(text);
    result.cover.kind = parse_cover_kind(doc.at("kind").get<std::string>());
    for (const json& e : doc.at("elements")) {
      CoverElement el;
      EdgeList edges;
      for (const json& pair : e.at("edges")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("cover edge must be a pair");
        const Vertex a = pair[0].get<Vertex>();
        const Vertex b = pair[1].get<Vertex>();
        if (a == b) throw ParseError("cover edge is a loop");
        edges.push_back(make_edge(a, b));
      }
      el.subgraph = subgraph_from_edges(std::move(edges));
      if (e.contains("vertices")) {
        el.subgraph.vertices = vertex_list(e.at("vertices"));
        el.subgraph.isolated_allowed = el.subgraph.edges.empty();
      }
      if (e.contains("block")) el.ant = BigAnt{vertex_list(e.at("block")), e.at("u").get<Vertex>(), e.at("v").get<Vertex>()};
      result.cover.elements.push_back(std::move(el));
    }
    if (doc.contains("size") && doc.at("size").get<std::size_t>() != result.cover.size()) {
      throw ParseError("cover size field disagrees with the element count");
    }
    if (doc.contains("traces")) {
      for (const json& t : doc.at("traces")) {
        IterationTrace tr;
        tr.case_taken = parse_case_taken(t.at("case").get<std::string>());
        if (t.contains("component")) tr.component = vertex_list(t.at("component"));
        if (t.contains("block") && !t.at("block").is_null()) tr.chosen_block = vertex_list(t.at("block"));
        if (t.contains("protected") && !t.at("protected").is_null()) tr.protected_vertex = t.at("protected").get<Vertex>();
        if (t.contains("apexes") && !t.at("apexes").is_null()) {
          const auto& a = t.at("apexes");
          tr.apexes = std::make_pair(a.at(0).get<Vertex>(), a.at(1).get<Vertex>());
        }
        tr.removed = vertex_list(t.at("removed"));
        tr.element_index = t.at("element").get<std::size_t>();
        result.traces.push_back(std::move(tr));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("cover: ") + e.what());
  }
  return result;
}

std::string write_box_json(const BoxRepresentation& boxes) {
  json doc;
  doc["d"] = boxes.dimension;
  json map = json::object();
  for (const auto& [v, ivs] : boxes.boxes) {
    json list = json::array();
    for (const Interval& iv : ivs) list.push_back({iv.lo, iv.hi});
    map[std::to_string(v)] = std::move(list);
  }
  doc["boxes"] = std::move(map);
  return doc.dump() + "\n";
}

std::string write_verification_report(const VerificationReport& report) {
  if (report.valid()) return "valid\n";
  std::string out = "invalid\n";
  for (std::size_t i : report.not_subgraph) out += "not a subgraph: element " + std::to_string(i) + "\n";
  for (std::size_t i : report.recognition_failures) out += "recognition failed: element " + std::to_string(i) + "\n";
  for (const Edge& e : report.uncovered) out += "uncovered: " + std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

}  // namespace cobox
