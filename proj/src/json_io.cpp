#include "woi/json_io.hpp"

#include <fstream>

namespace woi {

Json graph_to_json(const WeightedOrientedGraph& g) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"name", g.vertex_name(v)}, {"weight", g.weight(v)}});
  Json edges = Json::array();
  for (auto [tail, head] : g.edges())
    edges.push_back(Json::array({g.vertex_name(tail), g.vertex_name(head)}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

WeightedOrientedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw parse_error("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const Json& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("name") || !v.contains("weight"))
      throw parse_error("each vertex needs \"name\" and \"weight\"");
    names.push_back(v.at("name").get<std::string>());
    weights.push_back(v.at("weight").get<int>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw parse_error("each edge is a [tail, head] pair");
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return WeightedOrientedGraph(std::move(names), std::move(weights),
                               std::move(edges));
}

WeightedOrientedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("bad JSON in " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& m : ideal.generators())
    gens.push_back(m.exponents());
  return Json{{"variables", ideal.universe()->names()},
              {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw parse_error("ideal JSON needs \"variables\" and \"generators\"");
  UniverseRef universe =
      make_universe(j.at("variables").get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const Json& row : j.at("generators")) {
    std::vector<Exponent> exps = row.get<std::vector<Exponent>>();
    gens.emplace_back(universe, std::move(exps));
  }
  return MonomialIdeal::of(universe, std::move(gens));
}

namespace {

Json name_list(const WeightedOrientedGraph& g,
               const std::vector<std::size_t>& vs) {
  Json out = Json::array();
  for (std::size_t v : vs) out.push_back(g.vertex_name(v));
  return out;
}

}  // namespace

Json cover_to_json(const WeightedOrientedGraph& g, const CoverPartition& p) {
  return Json{
      {"cover", name_list(g, p.cover)}, {"l1", name_list(g, p.l1)},
      {"l2", name_list(g, p.l2)},       {"l3", name_list(g, p.l3)},
      {"minimal", p.is_minimal},        {"strong", p.is_strong}};
}

Json report_to_json(const EqualityReport& report) {
  Json j{{"s", report.s},
         {"equal", report.equal},
         {"ordinary_gens", report.ordinary_gens},
         {"symbolic_gens", report.symbolic_gens}};
  j["witness"] = report.witness ? Json(to_string(*report.witness)) : Json();
  j["methods_agree"] = report.methods_agree;
  return j;
}

const char* outcome_name(TheoremVerdict::Outcome outcome) {
  switch (outcome) {
    case TheoremVerdict::Outcome::Satisfied: return "satisfied";
    case TheoremVerdict::Outcome::Violated: return "violated";
    case TheoremVerdict::Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json verdict_to_json(const TheoremVerdict& verdict) {
  Json j{{"family", family_name(verdict.family)},
         {"hypothesis", verdict.hypothesis},
         {"tested_s", verdict.tested_s}};
  Json equal = Json::array();
  for (bool b : verdict.equal_by_s) equal.push_back(b);
  j["equal_by_s"] = std::move(equal);
  j["outcome"] = outcome_name(verdict.outcome);
  if (verdict.required_witness_power)
    j["required_witness_power"] = *verdict.required_witness_power;
  j["detail"] = verdict.detail;
  return j;
}

}  // namespace woi
