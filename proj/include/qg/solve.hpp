// Two-mesh variational eigensolver.  Solves the reduced generalized problem
// ZᵀKZ y = λ ZᵀMZ y at n and 2n elements per edge; reports Richardson-
// extrapolated eigenvalues (fourth-order) with error estimates
// |λ(n) − λ(2n)|/3, and keeps the raw pair for convergence diagnostics.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "qg/assemble.hpp"
#include "qg/graph.hpp"
#include "qg/jsonio.hpp"
#include "qg/mesh.hpp"

namespace qg {

struct SolveOptions {
  int elements_per_edge = 64;
  double cluster_tol_base = 1e-9;  // gap tolerance scale: tol·(1+|λ|)
};

struct Spectrum {
  std::vector<double> eigenvalues;      // reported (extrapolated), ascending
  std::vector<double> error_estimates;  // nonnegative, per eigenvalue
  std::vector<std::pair<int, int>> clusters;  // 1-based inclusive, size ≥ 2
  std::vector<double> coarse, fine;     // raw two-mesh values
  int elements_per_edge = 0;
  double cluster_tol_base = 1e-9;
};

namespace detail {
inline std::vector<double> lowest_eigenvalues(const MetricGraph& g, int n,
                                              int k_max) {
  Assembly a = assemble_forms(g, Mesh::uniform(g, n));
  const int m = (int)a.Zcols.size();
  if (k_max > m)
    fail(Err::KMaxExceedsDofs, "k_max " + std::to_string(k_max) +
                                   " exceeds reduced dimension " +
                                   std::to_string(m));
  Eigen::MatrixXd Kr = reduce_matrix(a.K, a.Zcols);
  Eigen::MatrixXd Mr = reduce_matrix(a.M, a.Zcols);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
      Kr, Mr, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    fail(Err::ConstraintRankDeficiency,
         "generalized eigensolver failed; reduced mass matrix not positive "
         "definite");
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + k_max);
  return out;
}
}  // namespace detail

inline Spectrum solve_spectrum(const MetricGraph& g, int k_max,
                               const SolveOptions& opts = {}) {
  if (k_max < 1) fail(Err::ConfigInvalid, "k_max must be >= 1");
  Spectrum s;
  s.elements_per_edge = opts.elements_per_edge;
  s.cluster_tol_base = opts.cluster_tol_base;
  s.coarse = detail::lowest_eigenvalues(g, opts.elements_per_edge, k_max);
  s.fine = detail::lowest_eigenvalues(g, 2 * opts.elements_per_edge, k_max);
  std::vector<std::pair<double, double>> rep(k_max);
  for (int k = 0; k < k_max; ++k)
    rep[k] = {(4.0 * s.fine[k] - s.coarse[k]) / 3.0,
              std::abs(s.coarse[k] - s.fine[k]) / 3.0};
  std::sort(rep.begin(), rep.end());  // extrapolation may reorder near-ties
  s.eigenvalues.resize(k_max);
  s.error_estimates.resize(k_max);
  for (int k = 0; k < k_max; ++k) {
    s.eigenvalues[k] = rep[k].first;
    s.error_estimates[k] = rep[k].second;
  }
  // cluster consecutive eigenvalues with relative gap below tolerance
  int start = 0;
  for (int k = 1; k <= k_max; ++k) {
    bool close = k < k_max &&
                 (s.eigenvalues[k] - s.eigenvalues[k - 1]) <=
                     opts.cluster_tol_base *
                         (1.0 + std::abs(s.eigenvalues[k]));
    if (!close) {
      if (k - start >= 2) s.clusters.push_back({start + 1, k});  // 1-based
      start = k;
    }
  }
  return s;
}

// #{λ_i ≤ λ} over the computed range.
inline int counting_function(const Spectrum& s, double lambda) {
  if (s.eigenvalues.empty() || lambda > s.eigenvalues.back())
    fail(Err::LambdaBeyondComputedRange,
         "counting function evaluated beyond the last computed eigenvalue");
  int n = 0;
  for (double ev : s.eigenvalues)
    if (ev <= lambda) ++n;
  return n;
}

// xᵀKx for a nodal vector respecting the hard constraints.
inline double quadratic_form_value(const MetricGraph& g, const Mesh& mesh,
                                   const Eigen::VectorXd& x) {
  Assembly a = assemble_forms(g, mesh);
  double scale = 1.0 + x.lpNorm<Eigen::Infinity>();
  if (constraint_residual(a.Crows, x) > 1e-9 * scale)
    fail(Err::ConstraintViolation,
         "test function violates the hard vertex constraints");
  return x.dot(a.K * x);
}

inline double mass_form_value(const MetricGraph& g, const Mesh& mesh,
                              const Eigen::VectorXd& x) {
  Assembly a = assemble_forms(g, mesh);
  return x.dot(a.M * x);
}

// Nodal interpolation of a per-edge function f(edge_index, arclength).
template <class F>
Eigen::VectorXd interpolate_on_mesh(const MetricGraph& g, const Mesh& mesh,
                                    F&& f) {
  Eigen::VectorXd x(mesh.total_dofs);
  for (int e = 0; e < g.edge_count(); ++e) {
    int n = mesh.elems_per_edge[e];
    double h = g.edges()[e].length / n;
    for (int i = 0; i <= n; ++i) x[mesh.node_dof(e, i)] = f(e, i * h);
  }
  return x;
}

inline json spectrum_to_json(const Spectrum& s) {
  json j;
  j["eigenvalues"] = s.eigenvalues;
  j["error_estimates"] = s.error_estimates;
  j["clusters"] = json::array();
  for (const auto& [a, b] : s.clusters) j["clusters"].push_back({a, b});
  j["mesh"] = {{"elements_per_edge", s.elements_per_edge}};
  return j;
}

}  // namespace qg
