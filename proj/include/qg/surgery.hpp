// Graph surgery: gluing, splitting, pendant attachment, insertion, scaling,
// flowerization, pendant edges, subdivision — pure transformations with
// family-aware strength bookkeeping.  Condition families:
//   Delta-like (Standard/Delta, natural strength α, Standard = 0),
//   DeltaPrime-like (AntiStandard/DeltaPrime, natural strength α′, Anti = 0),
//   Dirichlet, Neumann (strengthless).
// Glue sums strengths within one family; split/insert distribute them under
// an explicit caller-provided assignment validated against the sum rule.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qg/graph.hpp"
#include "qg/jsonio.hpp"

namespace qg {

inline MetricGraph set_vertex_condition(const MetricGraph& g,
                                        const std::string& vertex_id,
                                        const VertexCondition& cond) {
  int vi = g.vertex_index(vertex_id);
  std::vector<Vertex> verts = g.vertices();
  verts[vi].condition = cond;
  return MetricGraph::build(std::move(verts), g.edges(), Connectivity::Allow);
}

namespace detail {

inline bool strength_family(ConditionFamily f) {
  return f == ConditionFamily::DeltaLike || f == ConditionFamily::DeltaPrimeLike;
}

// Condition with the given natural strength within a family.
inline VertexCondition family_condition(ConditionFamily f, double strength) {
  switch (f) {
    case ConditionFamily::DeltaLike: return VertexCondition::delta(strength);
    case ConditionFamily::DeltaPrimeLike:
      return strength == 0.0 ? VertexCondition::anti_standard()
                             : VertexCondition::delta_prime(strength);
    case ConditionFamily::Dirichlet: return VertexCondition::dirichlet();
    case ConditionFamily::Neumann: return VertexCondition::neumann();
  }
  return VertexCondition::neumann();
}

inline ConditionFamily common_family(const MetricGraph& g,
                                     const std::vector<std::string>& ids) {
  ConditionFamily f = family_of(g.vertex(ids[0]).condition.kind);
  for (const auto& id : ids)
    if (family_of(g.vertex(id).condition.kind) != f)
      fail(Err::MixedConditionFamilies,
           "vertices '" + ids[0] + "' and '" + id +
               "' carry conditions from different families");
  return f;
}

}  // namespace detail

inline MetricGraph glue_vertices(const MetricGraph& g,
                                 const std::vector<std::string>& ids,
                                 const std::string& new_id_hint = "") {
  if (ids.empty()) fail(Err::ConfigInvalid, "glue needs at least one vertex");
  std::set<std::string> uniq(ids.begin(), ids.end());
  if (uniq.size() != ids.size())
    fail(Err::ConfigInvalid, "glue vertex list contains duplicates");
  for (const auto& id : ids) (void)g.vertex_index(id);  // UnknownVertex check
  ConditionFamily fam = detail::common_family(g, ids);

  double total = 0.0;
  for (const auto& id : ids) total += g.vertex(id).condition.family_strength();

  std::string joined = ids[0];
  for (size_t i = 1; i < ids.size(); ++i) joined += "+" + ids[i];
  std::string new_id = new_id_hint.empty() ? joined : new_id_hint;
  // fresh against the vertices that remain
  {
    auto used = [&](const std::string& s) {
      if (uniq.count(s)) return false;
      return g.has_vertex(s);
    };
    if (used(new_id)) {
      for (int n = 2;; ++n) {
        std::string cand = new_id + "_" + std::to_string(n);
        if (!used(cand)) {
          new_id = cand;
          break;
        }
      }
    }
  }

  std::vector<Vertex> verts;
  bool placed = false;
  for (const auto& v : g.vertices()) {
    if (uniq.count(v.id)) {
      if (!placed) {
        verts.push_back({new_id, detail::family_condition(fam, total)});
        placed = true;
      }
    } else {
      verts.push_back(v);
    }
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    if (uniq.count(e.from)) e.from = new_id;
    if (uniq.count(e.to)) e.to = new_id;
  }
  return MetricGraph::build(std::move(verts), std::move(edges),
                            Connectivity::Allow);
}

// One endpoint of a named edge: side 0 = "from" end, side 1 = "to" end.
struct EndpointRef {
  std::string edge;
  int side = 0;
};

struct SplitPart {
  std::vector<EndpointRef> endpoints;
  double strength = 0.0;  // natural family strength for this part
};

inline MetricGraph split_vertex(const MetricGraph& g, const std::string& vertex_id,
                                const std::vector<SplitPart>& parts,
                                Connectivity conn = Connectivity::Require) {
  int vi = g.vertex_index(vertex_id);
  const VertexCondition& vc = g.vertices()[vi].condition;
  ConditionFamily fam = family_of(vc.kind);
  if (parts.empty()) fail(Err::PartitionIncomplete, "split needs at least one part");

  // The multiset of endpoint references must cover the endpoints at v exactly.
  std::multiset<std::string> want;
  for (const auto& p : g.endpoints_at(vi))
    want.insert(g.edges()[p.edge].id + "/" + std::to_string(p.side));
  std::multiset<std::string> got;
  for (const auto& part : parts)
    for (const auto& r : part.endpoints) {
      if (r.side != 0 && r.side != 1)
        fail(Err::PartitionIncomplete, "endpoint side must be 0 or 1");
      got.insert(r.edge + "/" + std::to_string(r.side));
    }
  if (want != got)
    fail(Err::PartitionIncomplete,
         "split parts must cover the endpoints at '" + vertex_id +
             "' exactly once each");

  if (detail::strength_family(fam)) {
    double sum = 0.0;
    for (const auto& part : parts) sum += part.strength;
    double target = vc.family_strength();
    if (std::abs(sum - target) > 1e-12 * (1.0 + std::abs(target)))
      fail(Err::StrengthSumMismatch,
           "part strengths sum to " + fmt17(sum) + ", expected " + fmt17(target));
  } else {
    for (const auto& part : parts)
      if (part.strength != 0.0)
        fail(Err::ConfigInvalid,
             "strengths are not allowed when splitting a strengthless vertex");
  }

  // Fresh ids v.1, v.2, ... for the descendant vertices.
  std::vector<std::string> part_ids;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::string base = vertex_id + "." + std::to_string(i + 1);
    part_ids.push_back(g.fresh_vertex_id(base));
  }

  std::vector<Vertex> verts;
  for (const auto& v : g.vertices()) {
    if (v.id == vertex_id) {
      for (size_t i = 0; i < parts.size(); ++i)
        verts.push_back(
            {part_ids[i], detail::family_condition(fam, parts[i].strength)});
    } else {
      verts.push_back(v);
    }
  }
  std::vector<Edge> edges = g.edges();
  for (size_t i = 0; i < parts.size(); ++i) {
    for (const auto& r : parts[i].endpoints) {
      Edge& e = edges[g.edge_index(r.edge)];
      if (r.side == 0)
        e.from = part_ids[i];
      else
        e.to = part_ids[i];
    }
  }
  return MetricGraph::build(std::move(verts), std::move(edges), conn);
}

// Disjoint union with H (ids prefixed) followed by gluing v with H's anchor;
// the junction keeps v's id.
inline MetricGraph attach_pendant_graph(const MetricGraph& g,
                                        const std::string& v,
                                        const MetricGraph& h,
                                        const std::string& w,
                                        const std::string& prefix = "h.") {
  (void)g.vertex_index(v);
  (void)h.vertex_index(w);
  std::vector<Vertex> verts = g.vertices();
  for (const auto& hv : h.vertices()) {
    std::string id = prefix + hv.id;
    if (g.has_vertex(id))
      fail(Err::ConfigInvalid, "prefixed pendant vertex id '" + id +
                                   "' collides; choose another prefix");
    verts.push_back({id, hv.condition});
  }
  std::vector<Edge> edges = g.edges();
  for (const auto& he : h.edges()) {
    std::string id = prefix + he.id;
    for (const auto& e : g.edges())
      if (e.id == id)
        fail(Err::ConfigInvalid, "prefixed pendant edge id '" + id +
                                     "' collides; choose another prefix");
    edges.push_back({id, prefix + he.from, prefix + he.to, he.length});
  }
  MetricGraph joined =
      MetricGraph::build(std::move(verts), std::move(edges), Connectivity::Allow);
  return glue_vertices(joined, {v, prefix + w}, v);
}

struct InsertAssignment {
  EndpointRef endpoint;     // an endpoint currently at the replaced vertex
  std::string to_vertex;    // receiving vertex of H (unprefixed id)
};

struct InsertStrength {
  std::string vertex;  // receiving vertex of H (unprefixed id)
  double strength = 0.0;
};

// Replace vertex v by the graph H: every endpoint formerly at v is re-homed
// to an H vertex; receiving vertices get caller-chosen strengths whose sum
// must equal α_v plus the receiving vertices' own strengths.
inline MetricGraph insert_graph_at_vertex(
    const MetricGraph& g, const std::string& v, const MetricGraph& h,
    const std::vector<InsertAssignment>& assignment,
    const std::vector<InsertStrength>& strengths,
    const std::string& prefix = "h.") {
  int vi = g.vertex_index(v);
  const VertexCondition& vc = g.vertices()[vi].condition;
  ConditionFamily fam = family_of(vc.kind);

  // Every endpoint at v must be assigned exactly once.
  std::multiset<std::string> want;
  for (const auto& p : g.endpoints_at(vi))
    want.insert(g.edges()[p.edge].id + "/" + std::to_string(p.side));
  std::multiset<std::string> got;
  for (const auto& asg : assignment) {
    (void)h.vertex_index(asg.to_vertex);
    got.insert(asg.endpoint.edge + "/" + std::to_string(asg.endpoint.side));
  }
  if (want != got)
    fail(Err::AssignmentIncomplete,
         "insertion must assign every endpoint at '" + v + "' exactly once");

  std::set<std::string> receiving;
  for (const auto& asg : assignment) receiving.insert(asg.to_vertex);
  for (const auto& st : strengths) {
    (void)h.vertex_index(st.vertex);
    if (!receiving.count(st.vertex))
      fail(Err::ConfigInvalid, "strength assigned to non-receiving vertex '" +
                                   st.vertex + "'");
  }

  if (detail::strength_family(fam)) {
    for (const auto& w : receiving)
      if (family_of(h.vertex(w).condition.kind) != fam)
        fail(Err::MixedConditionFamilies,
             "receiving vertex '" + w + "' is not in the family of '" + v + "'");
    double target = vc.family_strength();
    for (const auto& w : receiving)
      target += h.vertex(w).condition.family_strength();
    double sum = 0.0;
    std::set<std::string> with_strength;
    for (const auto& st : strengths) {
      sum += st.strength;
      with_strength.insert(st.vertex);
    }
    if (with_strength != receiving)
      fail(Err::ConfigInvalid,
           "every receiving vertex needs exactly one assigned strength");
    if (std::abs(sum - target) > 1e-12 * (1.0 + std::abs(target)))
      fail(Err::StrengthSumMismatch, "assigned strengths sum to " + fmt17(sum) +
                                         ", expected " + fmt17(target));
  } else {
    if (!strengths.empty())
      fail(Err::ConfigInvalid,
           "strength assignment requires a strength-carrying family");
    for (const auto& w : receiving)
      if (family_of(h.vertex(w).condition.kind) != fam)
        fail(Err::MixedConditionFamilies,
             "receiving vertex '" + w + "' is not in the family of '" + v + "'");
  }

  std::map<std::string, double> new_strength;
  for (const auto& st : strengths) new_strength[st.vertex] = st.strength;

  std::vector<Vertex> verts;
  for (const auto& gv : g.vertices())
    if (gv.id != v) verts.push_back(gv);
  for (const auto& hv : h.vertices()) {
    std::string id = prefix + hv.id;
    if (g.has_vertex(id))
      fail(Err::ConfigInvalid, "prefixed inserted vertex id '" + id +
                                   "' collides; choose another prefix");
    VertexCondition cond = hv.condition;
    if (receiving.count(hv.id) && detail::strength_family(fam))
      cond = detail::family_condition(fam, new_strength.at(hv.id));
    verts.push_back({id, cond});
  }

  std::map<std::string, std::string> ep_target;  // "edge/side" -> prefixed vertex
  for (const auto& asg : assignment)
    ep_target[asg.endpoint.edge + "/" + std::to_string(asg.endpoint.side)] =
        prefix + asg.to_vertex;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Edge ne = e;
    if (ne.from == v) ne.from = ep_target.at(ne.id + "/0");
    if (ne.to == v) ne.to = ep_target.at(ne.id + "/1");
    edges.push_back(ne);
  }
  for (const auto& he : h.edges()) {
    std::string id = prefix + he.id;
    for (const auto& e : g.edges())
      if (e.id == id)
        fail(Err::ConfigInvalid, "prefixed inserted edge id '" + id +
                                     "' collides; choose another prefix");
    edges.push_back({id, prefix + he.from, prefix + he.to, he.length});
  }
  return MetricGraph::build(std::move(verts), std::move(edges),
                            Connectivity::Allow);
}

inline MetricGraph scale_edge(const MetricGraph& g, const std::string& edge_id,
                              double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    fail(Err::NonpositiveFactor, "scale factor must be positive");
  int ei = g.edge_index(edge_id);
  std::vector<Edge> edges = g.edges();
  edges[ei].length *= t;
  return MetricGraph::build(g.vertices(), std::move(edges), Connectivity::Allow);
}

// Lengths ×t, DeltaPrime strengths ×t, Delta strengths ×1/t.
inline MetricGraph scale_graph(const MetricGraph& g, double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    fail(Err::NonpositiveFactor, "scale factor must be positive");
  std::vector<Vertex> verts = g.vertices();
  for (auto& v : verts) {
    if (v.condition.kind == ConditionKind::Delta) v.condition.strength /= t;
    if (v.condition.kind == ConditionKind::DeltaPrime) v.condition.strength *= t;
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.length *= t;
  return MetricGraph::build(std::move(verts), std::move(edges),
                            Connectivity::Allow);
}

inline MetricGraph flowerize(const MetricGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  return glue_vertices(g, ids);
}

inline MetricGraph attach_pendant_edge(const MetricGraph& g, const std::string& v,
                                       double length,
                                       const VertexCondition& tip) {
  if (!(length > 0.0) || !std::isfinite(length))
    fail(Err::NonpositiveLength, "pendant edge length must be positive");
  (void)g.vertex_index(v);
  std::string tip_id = g.fresh_vertex_id(v + ".tip");
  std::string edge_id = g.fresh_edge_id(v + ".pe");
  std::vector<Vertex> verts = g.vertices();
  verts.push_back({tip_id, tip});
  std::vector<Edge> edges = g.edges();
  edges.push_back({edge_id, v, tip_id, length});
  return MetricGraph::build(std::move(verts), std::move(edges),
                            Connectivity::Allow);
}

// --- JSON surgery scripts ---

inline EndpointRef parse_endpoint_ref(const json& j, const std::string& where) {
  detail::require_fields(j, {"edge", "end"}, {}, where);
  EndpointRef r;
  r.edge = detail::string_field(j, "edge", where);
  std::string end = detail::string_field(j, "end", where);
  if (end == "from")
    r.side = 0;
  else if (end == "to")
    r.side = 1;
  else
    fail(Err::ParseError, where + " field 'end' must be 'from' or 'to'");
  return r;
}

inline MetricGraph apply_surgery_op(const MetricGraph& g, const json& j) {
  if (!j.is_object() || !j.contains("op"))
    fail(Err::ParseError, "surgery op must be an object with an 'op' field");
  std::string op = detail::string_field(j, "op", "surgery op");
  if (op == "set_condition") {
    detail::require_fields(j, {"op", "vertex", "condition"}, {}, "set_condition");
    return set_vertex_condition(
        g, detail::string_field(j, "vertex", "set_condition"),
        parse_condition(j.at("condition"), "set_condition condition"));
  }
  if (op == "glue") {
    detail::require_fields(j, {"op", "vertices"}, {"new_id"}, "glue");
    std::vector<std::string> ids;
    for (const auto& v : j.at("vertices")) ids.push_back(v.get<std::string>());
    std::string hint =
        j.contains("new_id") ? detail::string_field(j, "new_id", "glue") : "";
    return glue_vertices(g, ids, hint);
  }
  if (op == "split") {
    detail::require_fields(j, {"op", "vertex", "parts"}, {"allow_disconnected"},
                           "split");
    std::vector<SplitPart> parts;
    for (const auto& pj : j.at("parts")) {
      detail::require_fields(pj, {"endpoints"}, {"strength"}, "split part");
      SplitPart part;
      for (const auto& rj : pj.at("endpoints"))
        part.endpoints.push_back(parse_endpoint_ref(rj, "split endpoint"));
      if (pj.contains("strength"))
        part.strength = detail::number_field(pj, "strength", "split part");
      parts.push_back(std::move(part));
    }
    Connectivity conn = Connectivity::Require;
    if (j.contains("allow_disconnected") && j.at("allow_disconnected").is_boolean() &&
        j.at("allow_disconnected").get<bool>())
      conn = Connectivity::Allow;
    return split_vertex(g, detail::string_field(j, "vertex", "split"), parts, conn);
  }
  if (op == "attach_pendant") {
    detail::require_fields(j, {"op", "vertex", "graph", "pendant_vertex"},
                           {"prefix"}, "attach_pendant");
    MetricGraph h = parse_graph(j.at("graph"));
    std::string prefix = j.contains("prefix")
                             ? detail::string_field(j, "prefix", "attach_pendant")
                             : "h.";
    return attach_pendant_graph(
        g, detail::string_field(j, "vertex", "attach_pendant"), h,
        detail::string_field(j, "pendant_vertex", "attach_pendant"), prefix);
  }
  if (op == "insert") {
    detail::require_fields(j, {"op", "vertex", "graph", "assignment"},
                           {"strengths", "prefix"}, "insert");
    MetricGraph h = parse_graph(j.at("graph"));
    std::vector<InsertAssignment> assignment;
    for (const auto& aj : j.at("assignment")) {
      detail::require_fields(aj, {"edge", "end", "vertex"}, {}, "insert assignment");
      InsertAssignment a;
      a.endpoint.edge = detail::string_field(aj, "edge", "insert assignment");
      std::string end = detail::string_field(aj, "end", "insert assignment");
      if (end == "from")
        a.endpoint.side = 0;
      else if (end == "to")
        a.endpoint.side = 1;
      else
        fail(Err::ParseError, "insert assignment 'end' must be 'from' or 'to'");
      a.to_vertex = detail::string_field(aj, "vertex", "insert assignment");
      assignment.push_back(std::move(a));
    }
    std::vector<InsertStrength> strengths;
    if (j.contains("strengths"))
      for (const auto& sj : j.at("strengths")) {
        detail::require_fields(sj, {"vertex", "strength"}, {}, "insert strength");
        strengths.push_back({detail::string_field(sj, "vertex", "insert strength"),
                             detail::number_field(sj, "strength", "insert strength")});
      }
    std::string prefix =
        j.contains("prefix") ? detail::string_field(j, "prefix", "insert") : "h.";
    return insert_graph_at_vertex(g, detail::string_field(j, "vertex", "insert"),
                                  h, assignment, strengths, prefix);
  }
  if (op == "scale_edge") {
    detail::require_fields(j, {"op", "edge", "factor"}, {}, "scale_edge");
    return scale_edge(g, detail::string_field(j, "edge", "scale_edge"),
                      detail::number_field(j, "factor", "scale_edge"));
  }
  if (op == "scale_graph") {
    detail::require_fields(j, {"op", "factor"}, {}, "scale_graph");
    return scale_graph(g, detail::number_field(j, "factor", "scale_graph"));
  }
  if (op == "flowerize") {
    detail::require_fields(j, {"op"}, {}, "flowerize");
    return flowerize(g);
  }
  if (op == "attach_pendant_edge") {
    detail::require_fields(j, {"op", "vertex", "length", "tip"}, {},
                           "attach_pendant_edge");
    return attach_pendant_edge(
        g, detail::string_field(j, "vertex", "attach_pendant_edge"),
        detail::number_field(j, "length", "attach_pendant_edge"),
        parse_condition(j.at("tip"), "attach_pendant_edge tip"));
  }
  if (op == "subdivide") {
    detail::require_fields(j, {"op", "edge", "position"}, {}, "subdivide");
    return subdivide_edge(g, detail::string_field(j, "edge", "subdivide"),
                          detail::number_field(j, "position", "subdivide"));
  }
  fail(Err::ParseError, "unknown surgery op '" + op + "'");
}

// Ordered script, applied transactionally: a throwing op leaves no output.
inline MetricGraph apply_surgery_script(const MetricGraph& g, const json& ops) {
  if (!ops.is_array()) fail(Err::ParseError, "surgery script must be a JSON array");
  MetricGraph cur = g;
  for (const auto& oj : ops) cur = apply_surgery_op(cur, oj);
  return cur;
}

}  // namespace qg
