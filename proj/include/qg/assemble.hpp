// Quadratic-form assembly: per-edge P1 stiffness and (consistent) mass,
// vertex coupling as hard constraint rows plus rank-one stiffness terms, and
// the structural null-space basis used for constraint reduction.
//
// Per vertex condition:
//   Standard / Delta(α): continuity rows equating all endpoint values; Delta
//     adds α on the (single) common value.
//   Dirichlet: one row per endpoint, pinning it to zero.
//   Neumann: nothing (natural).
//   AntiStandard: one balance row, Σ endpoint values = 0.
//   DeltaPrime(α′): no rows; stiffness gains (1/α′)·b bᵀ with b the sum of
//     endpoint-value selectors.
// A loop contributes both of its endpoints to its vertex's rows/sums.
#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qg/graph.hpp"
#include "qg/mesh.hpp"

namespace qg {

// Sparse column: list of (dof, value) entries.
using SparseCol = std::vector<std::pair<int, double>>;

struct Assembly {
  Eigen::MatrixXd K;              // stiffness incl. vertex rank-one terms
  Eigen::MatrixXd M;              // consistent mass, SPD
  std::vector<SparseCol> Crows;   // hard constraint rows, Cx = 0
  std::vector<SparseCol> Zcols;   // structural basis of ker C (full col rank)
  Mesh mesh;
};

inline Assembly assemble_forms(const MetricGraph& g, const Mesh& mesh) {
  const int N = mesh.total_dofs;
  Assembly a;
  a.mesh = mesh;
  a.K = Eigen::MatrixXd::Zero(N, N);
  a.M = Eigen::MatrixXd::Zero(N, N);

  for (int e = 0; e < g.edge_count(); ++e) {
    int n = mesh.elems_per_edge[e];
    double h = g.edges()[e].length / n;
    for (int i = 0; i < n; ++i) {
      int d0 = mesh.node_dof(e, i), d1 = d0 + 1;
      a.K(d0, d0) += 1.0 / h;
      a.K(d1, d1) += 1.0 / h;
      a.K(d0, d1) -= 1.0 / h;
      a.K(d1, d0) -= 1.0 / h;
      a.M(d0, d0) += 2.0 * h / 6.0;
      a.M(d1, d1) += 2.0 * h / 6.0;
      a.M(d0, d1) += h / 6.0;
      a.M(d1, d0) += h / 6.0;
    }
    // interior nodes are unconstrained: one basis column each
    for (int i = 1; i < n; ++i) a.Zcols.push_back({{mesh.node_dof(e, i), 1.0}});
  }

  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    const auto& eps = g.endpoints_at(vi);
    std::vector<int> dofs;
    for (const auto& p : eps) dofs.push_back(mesh.endpoint_dof(p));
    const VertexCondition& c = g.vertices()[vi].condition;
    switch (c.kind) {
      case ConditionKind::Standard:
      case ConditionKind::Delta: {
        for (size_t i = 1; i < dofs.size(); ++i)
          a.Crows.push_back({{dofs[0], 1.0}, {dofs[i], -1.0}});
        if (!dofs.empty()) {
          SparseCol col;
          for (int d : dofs) col.push_back({d, 1.0});
          a.Zcols.push_back(std::move(col));
          if (c.kind == ConditionKind::Delta)
            a.K(dofs[0], dofs[0]) += c.strength;
        }
        break;
      }
      case ConditionKind::Dirichlet: {
        for (int d : dofs) a.Crows.push_back({{d, 1.0}});
        break;
      }
      case ConditionKind::AntiStandard: {
        SparseCol row;
        for (int d : dofs) row.push_back({d, 1.0});
        a.Crows.push_back(std::move(row));
        for (size_t i = 0; i + 1 < dofs.size(); ++i)
          a.Zcols.push_back({{dofs[i], 1.0}, {dofs[i + 1], -1.0}});
        break;
      }
      case ConditionKind::Neumann: {
        for (int d : dofs) a.Zcols.push_back({{d, 1.0}});
        break;
      }
      case ConditionKind::DeltaPrime: {
        for (int d : dofs) a.Zcols.push_back({{d, 1.0}});
        for (int d1 : dofs)
          for (int d2 : dofs) a.K(d1, d2) += 1.0 / c.strength;
        break;
      }
    }
  }
  return a;
}

// Zᵀ A Z exploiting the sparsity of the basis columns.
inline Eigen::MatrixXd reduce_matrix(const Eigen::MatrixXd& A,
                                     const std::vector<SparseCol>& Z) {
  const int m = (int)Z.size();
  const int N = (int)A.rows();
  Eigen::MatrixXd AZ = Eigen::MatrixXd::Zero(N, m);
  for (int j = 0; j < m; ++j)
    for (const auto& [idx, val] : Z[j]) AZ.col(j) += val * A.col(idx);
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (const auto& [idx, val] : Z[i]) R.row(i) += val * AZ.row(idx);
  return R;
}

// Expand reduced coordinates back to nodal values (x = Z y).
inline Eigen::VectorXd expand_from_reduced(const std::vector<SparseCol>& Z,
                                           const Eigen::VectorXd& y, int N) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(N);
  for (int j = 0; j < (int)Z.size(); ++j)
    for (const auto& [idx, val] : Z[j]) x[idx] += val * y[j];
  return x;
}

inline double constraint_residual(const std::vector<SparseCol>& Crows,
                                  const Eigen::VectorXd& x) {
  double worst = 0.0;
  for (const auto& row : Crows) {
    double r = 0.0;
    for (const auto& [idx, val] : row) r += val * x[idx];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace qg
