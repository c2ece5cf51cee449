// Immutable compact metric graph: vertices carrying self-adjoint vertex
// conditions, edges carrying positive lengths.  Loops and multi-edges are
// first-class.  All operations are pure functions returning new graphs.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

enum class ConditionKind {
  Dirichlet,
  Neumann,
  Standard,
  AntiStandard,
  Delta,
  DeltaPrime,
};

inline const char* to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::Dirichlet: return "Dirichlet";
    case ConditionKind::Neumann: return "Neumann";
    case ConditionKind::Standard: return "Standard";
    case ConditionKind::AntiStandard: return "AntiStandard";
    case ConditionKind::Delta: return "Delta";
    case ConditionKind::DeltaPrime: return "DeltaPrime";
  }
  return "?";
}

// Families whose quadratic-form domains are compatible under gluing.
enum class ConditionFamily { DeltaLike, DeltaPrimeLike, Dirichlet, Neumann };

inline ConditionFamily family_of(ConditionKind k) {
  switch (k) {
    case ConditionKind::Standard:
    case ConditionKind::Delta: return ConditionFamily::DeltaLike;
    case ConditionKind::AntiStandard:
    case ConditionKind::DeltaPrime: return ConditionFamily::DeltaPrimeLike;
    case ConditionKind::Dirichlet: return ConditionFamily::Dirichlet;
    case ConditionKind::Neumann: return ConditionFamily::Neumann;
  }
  return ConditionFamily::Neumann;
}

struct VertexCondition {
  ConditionKind kind = ConditionKind::Standard;
  double strength = 0.0;  // meaningful only for Delta / DeltaPrime

  static VertexCondition dirichlet() { return {ConditionKind::Dirichlet, 0.0}; }
  static VertexCondition neumann() { return {ConditionKind::Neumann, 0.0}; }
  static VertexCondition standard() { return {ConditionKind::Standard, 0.0}; }
  static VertexCondition anti_standard() {
    return {ConditionKind::AntiStandard, 0.0};
  }
  static VertexCondition delta(double alpha) {
    if (alpha == 0.0) return standard();  // canonical normalization
    return {ConditionKind::Delta, alpha};
  }
  static VertexCondition delta_prime(double alpha_prime) {
    if (alpha_prime == 0.0)
      fail(Err::ZeroDeltaPrimeStrength,
           "DeltaPrime strength must be nonzero; use AntiStandard");
    return {ConditionKind::DeltaPrime, alpha_prime};
  }
  // Coupling strength in the family's natural parameter (0 for the
  // strengthless kinds; AntiStandard is the zero-strength member of the
  // DeltaPrime family).
  double family_strength() const {
    return (kind == ConditionKind::Delta || kind == ConditionKind::DeltaPrime)
               ? strength
               : 0.0;
  }
};

struct Edge {
  std::string id;
  std::string from;
  std::string to;
  double length = 0.0;
};

struct Vertex {
  std::string id;
  VertexCondition condition;
};

// One edge-endpoint: side 0 is the "from" end (coordinate 0), side 1 the "to"
// end (coordinate ℓ_e).  A loop contributes both sides at the same vertex.
struct Endpoint {
  int edge = -1;
  int side = 0;
};

enum class Connectivity { Require, Allow };

class MetricGraph {
 public:
  static MetricGraph build(std::vector<Vertex> vertices, std::vector<Edge> edges,
                           Connectivity conn = Connectivity::Require) {
    MetricGraph g;
    g.verts_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (int i = 0; i < (int)g.verts_.size(); ++i) {
      auto& v = g.verts_[i];
      if (v.condition.kind == ConditionKind::Delta && v.condition.strength == 0.0)
        v.condition = VertexCondition::standard();
      if (v.condition.kind == ConditionKind::DeltaPrime &&
          v.condition.strength == 0.0)
        fail(Err::ZeroDeltaPrimeStrength,
             "vertex '" + v.id + "' has DeltaPrime strength 0");
      if (!g.vindex_.emplace(v.id, i).second)
        fail(Err::ParseError, "duplicate vertex id '" + v.id + "'");
    }
    if (g.edges_.empty())
      fail(Err::NonpositiveLength, "graph has no edges; total length must be positive");
    std::set<std::string> edge_ids;
    for (const auto& e : g.edges_) {
      if (!(e.length > 0.0) || !std::isfinite(e.length))
        fail(Err::NonpositiveLength,
             "edge '" + e.id + "' has nonpositive length");
      if (!g.vindex_.count(e.from))
        fail(Err::DanglingEndpoint,
             "edge '" + e.id + "' references unknown vertex '" + e.from + "'");
      if (!g.vindex_.count(e.to))
        fail(Err::DanglingEndpoint,
             "edge '" + e.id + "' references unknown vertex '" + e.to + "'");
      if (!edge_ids.insert(e.id).second)
        fail(Err::ParseError, "duplicate edge id '" + e.id + "'");
    }
    g.build_incidence();
    if (conn == Connectivity::Require && !g.is_connected())
      fail(Err::Disconnected, "graph is not connected");
    return g;
  }

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return (int)verts_.size(); }
  int edge_count() const { return (int)edges_.size(); }

  int vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end())
      fail(Err::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  }
  bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }
  const Vertex& vertex(const std::string& id) const {
    return verts_[vertex_index(id)];
  }
  int edge_index(const std::string& id) const {
    for (int i = 0; i < (int)edges_.size(); ++i)
      if (edges_[i].id == id) return i;
    fail(Err::UnknownVertex, "unknown edge '" + id + "'");
  }

  double total_length() const {
    double L = 0.0;
    for (const auto& e : edges_) L += e.length;
    return L;
  }

  const std::vector<Endpoint>& endpoints_at(int vi) const { return inc_[vi]; }
  int degree(int vi) const { return (int)inc_[vi].size(); }
  int degree(const std::string& id) const { return degree(vertex_index(id)); }
  std::map<std::string, int> degrees() const {
    std::map<std::string, int> d;
    for (int i = 0; i < (int)verts_.size(); ++i) d[verts_[i].id] = degree(i);
    return d;
  }
  std::vector<std::string> pendant_vertices() const {
    std::vector<std::string> p;
    for (int i = 0; i < (int)verts_.size(); ++i)
      if (degree(i) == 1) p.push_back(verts_[i].id);
    return p;
  }
  // Vertex index at a given endpoint.
  int endpoint_vertex(const Endpoint& p) const {
    const Edge& e = edges_[p.edge];
    return vertex_index(p.side == 0 ? e.from : e.to);
  }

  bool is_connected() const {
    if (verts_.empty()) return true;
    std::vector<int> seen(verts_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& p : inc_[v]) {
        const Edge& e = edges_[p.edge];
        for (const std::string* w : {&e.from, &e.to}) {
          int wi = vindex_.at(*w);
          if (!seen[wi]) {
            seen[wi] = 1;
            stack.push_back(wi);
          }
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
  }

  int betti_number() const {
    if (!is_connected()) fail(Err::Disconnected, "Betti number needs a connected graph");
    return edge_count() - vertex_count() + 1;
  }

  bool is_bipartite() const {
    std::vector<int> color(verts_.size(), -1);
    for (int s = 0; s < (int)verts_.size(); ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::vector<int> stack = {s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& p : inc_[v]) {
          const Edge& e = edges_[p.edge];
          int a = vindex_.at(e.from), b = vindex_.at(e.to);
          if (a == b) return false;  // loop
          int w = (v == a) ? b : a;
          if (color[w] == -1) {
            color[w] = 1 - color[v];
            stack.push_back(w);
          } else if (color[w] == color[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool all_in_family(ConditionFamily f) const {
    return std::all_of(verts_.begin(), verts_.end(), [&](const Vertex& v) {
      return family_of(v.condition.kind) == f;
    });
  }

  std::string fresh_vertex_id(const std::string& base) const {
    return fresh_id(base, [&](const std::string& s) { return vindex_.count(s) > 0; });
  }
  std::string fresh_edge_id(const std::string& base) const {
    return fresh_id(base, [&](const std::string& s) {
      return std::any_of(edges_.begin(), edges_.end(),
                         [&](const Edge& e) { return e.id == s; });
    });
  }

 private:
  template <class Used>
  static std::string fresh_id(const std::string& base, Used used) {
    if (!used(base)) return base;
    for (int n = 2;; ++n) {
      std::string cand = base + "_" + std::to_string(n);
      if (!used(cand)) return cand;
    }
  }

  void build_incidence() {
    inc_.assign(verts_.size(), {});
    for (int ei = 0; ei < (int)edges_.size(); ++ei) {
      inc_[vindex_.at(edges_[ei].from)].push_back({ei, 0});
      inc_[vindex_.at(edges_[ei].to)].push_back({ei, 1});
    }
  }

  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vindex_;
  std::vector<std::vector<Endpoint>> inc_;
};

// --- topology utilities ---

inline MetricGraph subdivide_edge(const MetricGraph& g, const std::string& edge_id,
                                  double position) {
  int ei = g.edge_index(edge_id);
  const Edge e = g.edges()[ei];
  if (!(position > 0.0) || !(position < e.length) || !std::isfinite(position))
    fail(Err::PositionOutOfRange, "subdivision position must lie strictly inside (0, " +
                                      std::to_string(e.length) + ")");
  std::vector<Vertex> verts = g.vertices();
  std::string vid = g.fresh_vertex_id(e.id + "#v");
  verts.push_back({vid, VertexCondition::standard()});
  std::vector<Edge> edges = g.edges();
  Edge a{g.fresh_edge_id(e.id + "#a"), e.from, vid, position};
  Edge b{g.fresh_edge_id(e.id + "#b"), vid, e.to, e.length - position};
  edges[ei] = a;
  edges.insert(edges.begin() + ei + 1, b);
  return MetricGraph::build(std::move(verts), std::move(edges), Connectivity::Allow);
}

inline MetricGraph suppress_degree2_standard(const MetricGraph& g,
                                             const std::string& vertex_id) {
  int vi = g.vertex_index(vertex_id);
  if (g.degree(vi) != 2)
    fail(Err::NotDegreeTwo, "vertex '" + vertex_id + "' has degree " +
                                std::to_string(g.degree(vi)));
  if (g.vertices()[vi].condition.kind != ConditionKind::Standard)
    fail(Err::NotStandard, "vertex '" + vertex_id + "' is not Standard");
  const auto& eps = g.endpoints_at(vi);
  if (eps[0].edge == eps[1].edge)
    fail(Err::WouldCreateDanglingLoop,
         "both endpoints of '" + vertex_id + "' lie on the same edge");
  const Edge& e1 = g.edges()[eps[0].edge];
  const Edge& e2 = g.edges()[eps[1].edge];
  // Far endpoints: the ends not incident to the suppressed vertex.
  std::string far1 = (eps[0].side == 0) ? e1.to : e1.from;
  std::string far2 = (eps[1].side == 0) ? e2.to : e2.from;
  Edge merged{g.fresh_edge_id(e1.id + "+" + e2.id), far1, far2,
              e1.length + e2.length};
  std::vector<Vertex> verts;
  for (const auto& v : g.vertices())
    if (v.id != vertex_id) verts.push_back(v);
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == eps[0].edge)
      edges.push_back(merged);
    else if (i != eps[1].edge)
      edges.push_back(g.edges()[i]);
  }
  return MetricGraph::build(std::move(verts), std::move(edges), Connectivity::Allow);
}

struct SpanningTreeResult {
  MetricGraph tree;
  std::vector<Edge> removed;  // exactly β edges, in original edge order
};

inline SpanningTreeResult maximal_spanning_tree(const MetricGraph& g) {
  if (!g.is_connected())
    fail(Err::Disconnected, "spanning tree needs a connected graph");
  // Kruskal, maximizing total length; ties broken by edge id for determinism.
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = g.edges()[a];
    const Edge& eb = g.edges()[b];
    if (ea.length != eb.length) return ea.length > eb.length;
    return ea.id < eb.id;
  });
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> keep(g.edge_count(), 0);
  for (int ei : order) {
    const Edge& e = g.edges()[ei];
    int a = find(g.vertex_index(e.from));
    int b = find(g.vertex_index(e.to));
    if (a != b) {
      parent[a] = b;
      keep[ei] = 1;
    }
  }
  std::vector<Edge> tree_edges, removed;
  for (int i = 0; i < g.edge_count(); ++i)
    (keep[i] ? tree_edges : removed).push_back(g.edges()[i]);
  MetricGraph tree = MetricGraph::build(g.vertices(), std::move(tree_edges),
                                        Connectivity::Require);
  return {std::move(tree), std::move(removed)};
}

inline bool is_tree(const MetricGraph& g) {
  return g.is_connected() && g.edge_count() == g.vertex_count() - 1;
}

inline double tree_diameter(const MetricGraph& t) {
  if (!is_tree(t)) fail(Err::NotATree, "tree_diameter requires a tree");
  auto dist_from = [&](int src) {
    std::vector<double> d(t.vertex_count(), -1.0);
    d[src] = 0.0;
    std::vector<int> stack = {src};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& p : t.endpoints_at(v)) {
        const Edge& e = t.edges()[p.edge];
        int w = t.vertex_index(p.side == 0 ? e.to : e.from);
        if (d[w] < 0.0) {
          d[w] = d[v] + e.length;
          stack.push_back(w);
        }
      }
    }
    return d;
  };
  double best = 0.0;
  for (int i = 0; i < t.vertex_count(); ++i) {
    if (t.degree(i) != 1) continue;
    auto d = dist_from(i);
    for (int j = 0; j < t.vertex_count(); ++j)
      if (t.degree(j) == 1) best = std::max(best, d[j]);
  }
  return best;
}

// Pendant edges: edges incident to a degree-1 vertex.
inline std::vector<std::string> pendant_edges(const MetricGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    if (g.degree(e.from) == 1 || g.degree(e.to) == 1) out.push_back(e.id);
  }
  return out;
}

}  // namespace qg
