// Per-edge P1 mesh: each edge carries n_e + 1 nodal degrees of freedom in a
// contiguous block; endpoint values at a shared vertex are NOT identified a
// priori (vertex coupling is imposed by constraints / form terms).
#pragma once

#include <vector>

#include "qg/errors.hpp"
#include "qg/graph.hpp"

namespace qg {

struct Mesh {
  std::vector<int> elems_per_edge;  // n_e ≥ 1
  std::vector<int> offset;          // dof block start per edge
  int total_dofs = 0;

  static Mesh uniform(const MetricGraph& g, int n) {
    if (n < 1) fail(Err::ConfigInvalid, "elements per edge must be >= 1");
    Mesh m;
    m.elems_per_edge.assign(g.edge_count(), n);
    m.offset.resize(g.edge_count());
    int at = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      m.offset[e] = at;
      at += n + 1;
    }
    m.total_dofs = at;
    return m;
  }

  int node_dof(int edge, int node) const { return offset[edge] + node; }
  int endpoint_dof(const Endpoint& p) const {
    return offset[p.edge] + (p.side == 0 ? 0 : elems_per_edge[p.edge]);
  }
};

}  // namespace qg
