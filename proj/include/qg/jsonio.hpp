// Strict JSON (de)serialization for graphs plus shared numeric formatting
// helpers.  Parsing rejects unknown fields so schema drift fails loudly.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qg/errors.hpp"
#include "qg/graph.hpp"

namespace qg {

using json = nlohmann::ordered_json;

// 17 significant digits, locale-independent: round-trips every double.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace detail {
inline void require_fields(const json& j, const std::vector<std::string>& required,
                           const std::vector<std::string>& optional,
                           const std::string& where) {
  if (!j.is_object()) fail(Err::ParseError, where + " must be a JSON object");
  for (const auto& f : required)
    if (!j.contains(f))
      fail(Err::ParseError, where + " is missing required field '" + f + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = false;
    for (const auto& f : required) known = known || (f == key);
    for (const auto& f : optional) known = known || (f == key);
    if (!known) fail(Err::ParseError, where + " has unknown field '" + key + "'");
  }
}
inline double number_field(const json& j, const std::string& field,
                           const std::string& where) {
  if (!j.at(field).is_number())
    fail(Err::ParseError, where + " field '" + field + "' must be a number");
  return j.at(field).get<double>();
}
inline std::string string_field(const json& j, const std::string& field,
                                const std::string& where) {
  if (!j.at(field).is_string())
    fail(Err::ParseError, where + " field '" + field + "' must be a string");
  return j.at(field).get<std::string>();
}
}  // namespace detail

inline ConditionKind condition_kind_from_string(const std::string& s) {
  if (s == "Dirichlet") return ConditionKind::Dirichlet;
  if (s == "Neumann") return ConditionKind::Neumann;
  if (s == "Standard") return ConditionKind::Standard;
  if (s == "AntiStandard") return ConditionKind::AntiStandard;
  if (s == "Delta") return ConditionKind::Delta;
  if (s == "DeltaPrime") return ConditionKind::DeltaPrime;
  fail(Err::ParseError, "unknown condition kind '" + s + "'");
}

inline VertexCondition parse_condition(const json& j, const std::string& where) {
  detail::require_fields(j, {"kind"}, {"strength"}, where);
  ConditionKind kind =
      condition_kind_from_string(detail::string_field(j, "kind", where));
  bool has_strength =
      kind == ConditionKind::Delta || kind == ConditionKind::DeltaPrime;
  if (has_strength && !j.contains("strength"))
    fail(Err::ParseError, where + " of kind " + to_string(kind) +
                              " requires a 'strength' field");
  if (!has_strength && j.contains("strength"))
    fail(Err::ParseError, where + " of kind " + to_string(kind) +
                              " must not carry a 'strength' field");
  VertexCondition c;
  c.kind = kind;
  c.strength = has_strength ? detail::number_field(j, "strength", where) : 0.0;
  return c;
}

inline MetricGraph parse_graph(const json& j,
                               Connectivity conn = Connectivity::Require) {
  detail::require_fields(j, {"vertices", "edges"}, {}, "graph");
  if (!j.at("vertices").is_array() || !j.at("edges").is_array())
    fail(Err::ParseError, "graph 'vertices' and 'edges' must be arrays");
  std::vector<Vertex> verts;
  for (const auto& vj : j.at("vertices")) {
    detail::require_fields(vj, {"id", "condition"}, {}, "vertex");
    Vertex v;
    v.id = detail::string_field(vj, "id", "vertex");
    v.condition = parse_condition(vj.at("condition"),
                                  "condition of vertex '" + v.id + "'");
    verts.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (const auto& ej : j.at("edges")) {
    detail::require_fields(ej, {"id", "from", "to", "length"}, {}, "edge");
    Edge e;
    e.id = detail::string_field(ej, "id", "edge");
    e.from = detail::string_field(ej, "from", "edge '" + e.id + "'");
    e.to = detail::string_field(ej, "to", "edge '" + e.id + "'");
    e.length = detail::number_field(ej, "length", "edge '" + e.id + "'");
    edges.push_back(std::move(e));
  }
  return MetricGraph::build(std::move(verts), std::move(edges), conn);
}

inline MetricGraph parse_graph_string(const std::string& text,
                                      Connectivity conn = Connectivity::Require) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, "input is not valid JSON");
  return parse_graph(j, conn);
}

inline json condition_to_json(const VertexCondition& c) {
  json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == ConditionKind::Delta || c.kind == ConditionKind::DeltaPrime)
    j["strength"] = c.strength;
  return j;
}

inline json graph_to_json(const MetricGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices()) {
    json vj;
    vj["id"] = v.id;
    vj["condition"] = condition_to_json(v.condition);
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    json ej;
    ej["id"] = e.id;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["length"] = e.length;
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

}  // namespace qg
