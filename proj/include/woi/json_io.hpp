#pragma once

// JSON forms.  Graphs: {"vertices":[{"name":"x1","weight":1},...],
// "edges":[["x1","x2"],...]} — vertex order defines the canonical variable
// order.  Ideals: variable names plus exponent vectors.  All serializers
// emit keys in a fixed order so reports are byte-stable.

#include <json.hpp>

#include "woi/symbolic.hpp"

namespace woi {

using Json = nlohmann::ordered_json;

Json graph_to_json(const WeightedOrientedGraph& g);
WeightedOrientedGraph graph_from_json(const Json& j);
WeightedOrientedGraph load_graph_file(const std::string& path);

Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json cover_to_json(const WeightedOrientedGraph& g, const CoverPartition& p);
Json report_to_json(const EqualityReport& report);
Json verdict_to_json(const TheoremVerdict& verdict);

const char* outcome_name(TheoremVerdict::Outcome outcome);

}  // namespace woi
