#pragma once
// Random connected multigraphs and trees for the checker suite.
// Construction is skeleton-first (every vertex links to an earlier one),
// so the result is connected without a separate repair pass, and every
// value is drawn in a fixed order from a splitmix64 stream: a given
// (params, seed) pair yields the same graph on every platform.

#include <algorithm>
#include <string>
#include <vector>

#include "qg/graph.hpp"
#include "qg/rand.hpp"

namespace qg {

struct RandomGraphParams {
  int min_edges = 2;
  int max_edges = 6;
  int min_vertices = 1;
  double min_length = 0.5;
  double max_length = 2.0;
  // condition family placed at every vertex
  ConditionKind family = ConditionKind::Standard;
  // strength magnitude window for Delta / DeltaPrime vertices
  double min_abs_strength = 0.2;
  double max_abs_strength = 5.0;
  // -1: all negative, +1: all positive, 0: independent random signs
  int strength_sign = 0;
  // probability that a DeltaPrime vertex degrades to AntiStandard
  double anti_fraction = 0.0;
  bool allow_loops = true;
  bool tree = false;  // force |V| = |E|+1 with no loops or extra edges
};

inline MetricGraph random_graph(const RandomGraphParams& p, std::uint64_t seed) {
  if (p.min_edges < 1 || p.max_edges < p.min_edges)
    fail(Err::UnsatisfiableParams, "edge count range is empty");
  if (!(p.min_length > 0.0) || p.max_length < p.min_length)
    fail(Err::UnsatisfiableParams, "length range is empty or nonpositive");
  if (!(p.min_abs_strength > 0.0) || p.max_abs_strength < p.min_abs_strength)
    fail(Err::UnsatisfiableParams, "strength magnitude range is empty");
  if (p.anti_fraction < 0.0 || p.anti_fraction > 1.0)
    fail(Err::UnsatisfiableParams, "anti fraction outside [0,1]");
  if (p.min_vertices > p.min_edges + 1)
    fail(Err::UnsatisfiableParams,
         "min_vertices cannot exceed min_edges + 1");

  Rng rng(seed);
  const int n_edges = rng.int_in(p.min_edges, p.max_edges);
  // a loopless edge needs two distinct endpoints
  const int min_verts = std::max(p.min_vertices, p.allow_loops ? 1 : 2);
  const int n_verts = p.tree ? n_edges + 1 : rng.int_in(min_verts, n_edges + 1);

  auto vertex_id = [](int i) { return "v" + std::to_string(i + 1); };

  std::vector<Edge> edges;
  int edge_no = 0;
  auto add_edge = [&](int a, int b) {
    edges.push_back({"e" + std::to_string(++edge_no), vertex_id(a), vertex_id(b),
                     rng.uniform(p.min_length, p.max_length)});
  };
  for (int i = 1; i < n_verts; ++i) add_edge(rng.int_in(0, i - 1), i);
  for (int i = n_verts - 1; i < n_edges; ++i) {
    int a = rng.int_in(0, n_verts - 1);
    int b = rng.int_in(0, n_verts - 1);
    while (!p.allow_loops && b == a) b = rng.int_in(0, n_verts - 1);
    add_edge(a, b);
  }

  auto draw_strength = [&]() {
    double mag = rng.uniform(p.min_abs_strength, p.max_abs_strength);
    bool negative = p.strength_sign < 0 || (p.strength_sign == 0 && rng.coin());
    return negative ? -mag : mag;
  };
  std::vector<Vertex> vertices;
  for (int i = 0; i < n_verts; ++i) {
    VertexCondition c = VertexCondition::standard();
    switch (p.family) {
      case ConditionKind::Standard: c = VertexCondition::standard(); break;
      case ConditionKind::AntiStandard: c = VertexCondition::anti_standard(); break;
      case ConditionKind::Dirichlet: c = VertexCondition::dirichlet(); break;
      case ConditionKind::Neumann: c = VertexCondition::neumann(); break;
      case ConditionKind::Delta: c = VertexCondition::delta(draw_strength()); break;
      case ConditionKind::DeltaPrime:
        if (rng.uniform() < p.anti_fraction) {
          c = VertexCondition::anti_standard();
        } else {
          c = VertexCondition::delta_prime(draw_strength());
        }
        break;
    }
    vertices.push_back({vertex_id(i), c});
  }
  return MetricGraph::build(vertices, edges, Connectivity::Require);
}

inline MetricGraph random_tree(RandomGraphParams p, std::uint64_t seed) {
  p.tree = true;
  p.allow_loops = false;
  return random_graph(p, seed);
}

}  // namespace qg
