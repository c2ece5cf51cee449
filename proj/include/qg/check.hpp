#pragma once
// Numeric verification of interlacing statements and closed-form bounds with
// discretization-aware three-valued verdicts.
//
// Verdict discipline: an inequality claim "lhs <= rhs" is judged on
// margin = rhs - lhs against the combined error budget of both spectra
// (sum of Richardson estimates plus a 1e-9*(1+|lambda|) floor):
//   margin >  budget  -> Pass
//   |margin| <= budget -> Inconclusive (cannot be distinguished from equality)
//   margin < -budget  -> Fail
// Integer counting comparisons and exact algebraic identities are judged
// binarily. Callers retry Inconclusive instances once on a doubled mesh.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qg/bounds.hpp"
#include "qg/graph.hpp"
#include "qg/solve.hpp"
#include "qg/surgery.hpp"

namespace qg {

enum class VerdictStatus { Pass, Fail, Inconclusive };

inline std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "Pass";
    case VerdictStatus::Fail: return "Fail";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  double margin = 0.0;        // slack in the claimed direction; >= 0 is good
  double error_budget = 0.0;
  std::string detail;
};

// Test-only hook: flips every inequality margin so the harness can prove the
// checker detects violations.
inline bool& sentinel_flip_inequalities() {
  static bool flag = false;
  return flag;
}

inline Verdict check_le(double lhs, double rhs, double budget,
                        std::string detail) {
  double margin = rhs - lhs;
  if (sentinel_flip_inequalities()) margin = -margin;
  VerdictStatus st = margin > budget    ? VerdictStatus::Pass
                     : margin >= -budget ? VerdictStatus::Inconclusive
                                         : VerdictStatus::Fail;
  return {st, margin, budget, std::move(detail)};
}

// Equality claims are binary: within budget or violated.
inline Verdict check_eq(double a, double b, double budget, std::string detail) {
  double deviation = std::abs(a - b);
  if (sentinel_flip_inequalities()) deviation = budget + 1.0 + deviation;
  VerdictStatus st =
      deviation <= budget ? VerdictStatus::Pass : VerdictStatus::Fail;
  return {st, budget - deviation, budget, std::move(detail)};
}

// Integer comparisons (counting functions) need no budget; grid safety is the
// caller's job.
inline Verdict check_int_le(long lhs, long rhs, std::string detail) {
  long margin = rhs - lhs;
  if (sentinel_flip_inequalities()) margin = -margin - 1;
  return {margin >= 0 ? VerdictStatus::Pass : VerdictStatus::Fail,
          static_cast<double>(margin), 0.0, std::move(detail)};
}

namespace detail {

inline double combined_budget(const Spectrum& a, int ka, const Spectrum& b,
                              int kb) {
  double la = a.eigenvalues[static_cast<size_t>(ka) - 1];
  double lb = b.eigenvalues[static_cast<size_t>(kb) - 1];
  double ea = a.error_estimates[static_cast<size_t>(ka) - 1];
  double eb = b.error_estimates[static_cast<size_t>(kb) - 1];
  return ea + eb + 1e-9 * (1.0 + std::max(std::abs(la), std::abs(lb)));
}

inline double lam(const Spectrum& s, int k) {
  return s.eigenvalues[static_cast<size_t>(k) - 1];
}

inline double err(const Spectrum& s, int k) {
  return s.error_estimates[static_cast<size_t>(k) - 1];
}

inline double single_budget(const Spectrum& s, int k) {
  return err(s, k) + 1e-9 * (1.0 + std::abs(lam(s, k)));
}

inline std::string ktag(const std::string& what, int k) {
  return what + " at k=" + std::to_string(k);
}

inline VertexCondition deltaprime_family_condition(double strength) {
  return strength == 0.0 ? VertexCondition::anti_standard()
                         : VertexCondition::delta_prime(strength);
}

inline bool is_deltaprime_family(const MetricGraph& g, const std::string& v) {
  return family_of(g.vertex(v).condition.kind) ==
         ConditionFamily::DeltaPrimeLike;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strength interlacing: changing one delta-prime strength.
// Same-sign change (toward zero -> away from zero plays no role; with
// lo = smaller strength and hi = larger strength of the same sign):
//   lambda_k(hi) <= lambda_k(lo) <= lambda_k(anti) <= lambda_{k+1}(hi).
// Sign-crossing change (neg -> pos):
//   lambda_k(neg) <= lambda_k(pos) <= lambda_k(anti) <= lambda_{k+1}(neg).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_interlacing_strength(
    const MetricGraph& g, const std::string& v, double new_strength, int k_max,
    const SolveOptions& opts = {}) {
  const auto& cond = g.vertex(v).condition;
  if (cond.kind != ConditionKind::DeltaPrime)
    fail(Err::NotDeltaPrime, "strength interlacing needs a DeltaPrime vertex");
  if (new_strength == 0.0)
    fail(Err::NotDeltaPrime, "new strength must be nonzero");
  double old_strength = cond.strength;

  auto tilde =
      set_vertex_condition(g, v, VertexCondition::delta_prime(new_strength));
  auto zero = set_vertex_condition(g, v, VertexCondition::anti_standard());
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum st = solve_spectrum(tilde, k_max, opts);
  Spectrum s0 = solve_spectrum(zero, k_max, opts);

  // Chain A_k <= B_k <= C_k <= A_{k+1}
  const Spectrum *A, *B;
  if ((old_strength > 0) == (new_strength > 0)) {
    A = new_strength > old_strength ? &st : &sg;  // larger strength
    B = new_strength > old_strength ? &sg : &st;
  } else {
    A = old_strength < 0 ? &sg : &st;  // negative strength
    B = old_strength < 0 ? &st : &sg;
  }
  const Spectrum& C = s0;

  std::vector<Verdict> out;
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(check_le(detail::lam(*A, k), detail::lam(*B, k),
                           detail::combined_budget(*A, k, *B, k),
                           detail::ktag("first link", k)));
    out.push_back(check_le(detail::lam(*B, k), detail::lam(C, k),
                           detail::combined_budget(*B, k, C, k),
                           detail::ktag("second link", k)));
    if (k + 1 <= k_max)
      out.push_back(check_le(detail::lam(C, k), detail::lam(*A, k + 1),
                             detail::combined_budget(C, k, *A, k + 1),
                             detail::ktag("wraparound link", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gluing two delta-prime-family vertices (new strength = sum). Direction by
// sign pattern (s1, s2, sum):
//   both > 0                  : glued <= original
//   both < 0                  : original <= glued
//   product < 0, sum > 0      : original <= glued
//   product < 0, sum < 0      : glued <= original
//   product < 0, sum = 0      : original <= glued
//   product = 0 (an anti end) : glued <= original
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_gluing_cases(const MetricGraph& g,
                                               const std::string& v1,
                                               const std::string& v2, int k_max,
                                               const SolveOptions& opts = {}) {
  if (!detail::is_deltaprime_family(g, v1) ||
      !detail::is_deltaprime_family(g, v2))
    fail(Err::NotDeltaPrime, "gluing cases need delta-prime-family vertices");
  double s1 = g.vertex(v1).condition.family_strength();
  double s2 = g.vertex(v2).condition.family_strength();

  auto glued = glue_vertices(g, {v1, v2});
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sG = solve_spectrum(glued, k_max, opts);

  bool glued_le;
  std::string which;
  if (s1 > 0 && s2 > 0) {
    glued_le = true;
    which = "both positive";
  } else if (s1 < 0 && s2 < 0) {
    glued_le = false;
    which = "both negative";
  } else if (s1 * s2 < 0) {
    double sum = s1 + s2;
    glued_le = sum < 0;
    which = sum > 0   ? "opposite signs, positive sum"
            : sum < 0 ? "opposite signs, negative sum"
                      : "opposite signs, zero sum";
  } else {
    glued_le = true;
    which = "one anti-standard end";
  }

  std::vector<Verdict> out;
  for (int k = 1; k <= k_max; ++k) {
    double a = glued_le ? detail::lam(sG, k) : detail::lam(sg, k);
    double b = glued_le ? detail::lam(sg, k) : detail::lam(sG, k);
    out.push_back(check_le(a, b, detail::combined_budget(sg, k, sG, k),
                           detail::ktag("gluing (" + which + ")", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scaling: one edge (monotone on the nonnegative part of the spectrum) or the
// whole graph (exact algebraic covariance of the discretization).
// ---------------------------------------------------------------------------
enum class ScalingMode { Edge, Graph };

inline std::vector<Verdict> check_scaling(const MetricGraph& g,
                                          const std::string& edge_id, double t,
                                          ScalingMode mode, int k_max,
                                          const SolveOptions& opts = {}) {
  if (!(t > 0.0)) fail(Err::NonpositiveFactor, "scaling factor must be positive");
  std::vector<Verdict> out;
  if (mode == ScalingMode::Graph) {
    auto scaled = scale_graph(g, t);
    Spectrum s = solve_spectrum(g, k_max, opts);
    Spectrum ss = solve_spectrum(scaled, k_max, opts);
    for (int k = 1; k <= k_max; ++k) {
      double tol = 1e-10 * std::max(1.0, std::abs(detail::lam(s, k)));
      out.push_back(check_eq(detail::lam(ss, k) * t * t, detail::lam(s, k), tol,
                             detail::ktag("graph scaling covariance", k)));
    }
    return out;
  }
  auto scaled = scale_edge(g, edge_id, t);
  Spectrum s_long, s_short;  // the longer-edge and shorter-edge spectra
  if (t > 1.0) {
    s_short = solve_spectrum(g, k_max, opts);
    s_long = solve_spectrum(scaled, k_max, opts);
  } else {
    s_short = solve_spectrum(scaled, k_max, opts);
    s_long = solve_spectrum(g, k_max, opts);
  }
  // Lengthening never increases eigenvalues on the nonnegative part of the
  // shorter-edge spectrum; indices below that are not claimed.
  for (int k = 1; k <= k_max; ++k) {
    double gate = detail::single_budget(s_short, k);
    if (detail::lam(s_short, k) < gate) continue;
    out.push_back(check_le(detail::lam(s_long, k), detail::lam(s_short, k),
                           detail::combined_budget(s_long, k, s_short, k),
                           detail::ktag("edge scaling", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pendant attachment with delta-prime couplings at the junction.  For the
// "<=" sign patterns the hypothesis lambda_r(H) <= lambda_{k0}(G) yields
// lambda_{k+r}(attached) <= lambda_k(G) for k >= k0; for the mirrored
// patterns the reversed hypothesis yields the reversed conclusion for
// k <= k0.  (r, k0) are searched in the computed spectra; when no admissible
// pair exists the instance is Inconclusive ("NoValidRK").
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_pendant_cases(const MetricGraph& g,
                                                const std::string& v,
                                                const MetricGraph& h,
                                                const std::string& w, int k_max,
                                                const SolveOptions& opts = {}) {
  if (!detail::is_deltaprime_family(g, v) || !detail::is_deltaprime_family(h, w))
    fail(Err::NotDeltaPrime, "pendant cases need delta-prime-family junctions");
  double s1 = g.vertex(v).condition.family_strength();
  double s2 = h.vertex(w).condition.family_strength();

  auto attached = attach_pendant_graph(g, v, h, w);
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sh = solve_spectrum(h, k_max, opts);
  Spectrum sa = solve_spectrum(attached, k_max, opts);

  bool le_case = (s1 > 0 && s2 > 0) || (s1 * s2 == 0) ||
                 (s1 * s2 < 0 && s1 + s2 < 0);

  std::vector<Verdict> out;
  if (le_case) {
    int k0 = 0;
    for (int k = 1; k <= k_max; ++k) {
      if (detail::lam(sh, 1) <=
          detail::lam(sg, k) - detail::combined_budget(sh, 1, sg, k)) {
        k0 = k;
        break;
      }
    }
    int r = 0;
    if (k0 > 0)
      for (int j = 1; j <= k_max; ++j)
        if (detail::lam(sh, j) <=
            detail::lam(sg, k0) - detail::combined_budget(sh, j, sg, k0))
          r = j;
    if (k0 == 0 || r == 0 || k0 > k_max - r) {
      out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                     "NoValidRK: no admissible (r, k0) pair in range"});
      return out;
    }
    for (int k = k0; k <= k_max - r; ++k)
      out.push_back(check_le(detail::lam(sa, k + r), detail::lam(sg, k),
                             detail::combined_budget(sa, k + r, sg, k),
                             detail::ktag("pendant attachment (<= case)", k)));
  } else {
    int k0 = std::max(1, k_max / 2);
    int r = 0;
    for (int j = 1; j <= k_max; ++j)
      if (detail::lam(sh, j) >=
          detail::lam(sg, k0) + detail::combined_budget(sh, j, sg, k0)) {
        r = j;
        break;
      }
    if (r == 0 || k_max - r < 1) {
      out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                     "NoValidRK: no admissible (r, k0) pair in range"});
      return out;
    }
    for (int k = 1; k <= std::min(k0, k_max - r); ++k)
      out.push_back(check_le(detail::lam(sg, k), detail::lam(sa, k + r),
                             detail::combined_budget(sg, k, sa, k + r),
                             detail::ktag("pendant attachment (>= case)", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Delta-coupling insertion: with m receiving vertices and an index r >= m
// such that lambda_r(H) <= lambda_k(G), the enlarged graph satisfies
// lambda_{k+r-m}(inserted) <= lambda_k(G).  r is chosen per k from the
// computed spectra.
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_delta_insertion(
    const MetricGraph& g, const std::string& v, const MetricGraph& h,
    const std::vector<InsertAssignment>& assignment,
    const std::vector<InsertStrength>& strengths, int k_max,
    const SolveOptions& opts = {}) {
  auto inserted = insert_graph_at_vertex(g, v, h, assignment, strengths);
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sh = solve_spectrum(h, k_max, opts);
  Spectrum si = solve_spectrum(inserted, k_max, opts);

  std::map<std::string, bool> receiving;
  for (const auto& a : assignment) receiving[a.to_vertex] = true;
  int m = static_cast<int>(receiving.size());

  std::vector<Verdict> out;
  for (int k = 1; k <= k_max; ++k) {
    int r = 0;
    for (int j = 1; j <= k_max; ++j)
      if (detail::lam(sh, j) <=
          detail::lam(sg, k) - detail::combined_budget(sh, j, sg, k))
        r = j;
    if (r < m || k + r - m > k_max || k + r - m < 1) continue;
    out.push_back(check_le(detail::lam(si, k + r - m), detail::lam(sg, k),
                           detail::combined_budget(si, k + r - m, sg, k),
                           detail::ktag("delta insertion", k)));
  }
  if (out.empty())
    out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                   "NoValidRK: no index k admits r >= m in range"});
  return out;
}

// ---------------------------------------------------------------------------
// Delta-prime insertion: replace a DeltaPrime(a) vertex by an all-anti graph
// whose two receiving vertices split the strength so that the split lowers
// eigenvalues (halves for a < 0, (a+1, -1) for a > 0).  The chain runs
// through attaching the receiving-vertex-glued copy of H as a pendant, so
// the shift-one conclusion lambda_{k+1}(inserted) <= lambda_k(G) needs
// lambda_k(G) >= lambda_1 of that glued all-anti graph (which is generally
// positive, not zero).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_deltaprime_insertion(
    const MetricGraph& g, const std::string& v, const MetricGraph& h_anti,
    const std::vector<InsertAssignment>& assignment, int k_max,
    const SolveOptions& opts = {}) {
  const auto& cond = g.vertex(v).condition;
  if (cond.kind != ConditionKind::DeltaPrime)
    fail(Err::NotDeltaPrime, "delta-prime insertion needs a DeltaPrime vertex");
  double a = cond.strength;

  std::map<std::string, bool> receiving;
  for (const auto& as : assignment) receiving[as.to_vertex] = true;
  if (receiving.size() != 2)
    fail(Err::AssignmentIncomplete,
         "delta-prime insertion needs exactly two receiving vertices");
  auto it = receiving.begin();
  std::string r1 = it->first;
  std::string r2 = std::next(it)->first;
  std::vector<InsertStrength> strengths;
  if (a < 0) {
    strengths = {{r1, a / 2.0}, {r2, a / 2.0}};
  } else {
    strengths = {{r1, a + 1.0}, {r2, -1.0}};
  }

  auto inserted = insert_graph_at_vertex(g, v, h_anti, assignment, strengths);
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum si = solve_spectrum(inserted, k_max, opts);

  // Ground state of H with the two receiving vertices identified: the chain
  // only applies to eigenvalues of G at or above this level.
  auto glued_h = glue_vertices(h_anti, {r1, r2});
  Spectrum sh = solve_spectrum(glued_h, 1, opts);
  double h_floor = detail::lam(sh, 1);

  std::vector<Verdict> out;
  int k0 = 0;
  for (int k = 1; k <= k_max; ++k)
    if (detail::lam(sg, k) >=
        h_floor + detail::combined_budget(sg, k, sh, 1)) {
      k0 = k;
      break;
    }
  if (k0 == 0 || k0 > k_max - 1) {
    out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                   "NoValidRK: no eigenvalue above the attached-graph floor"});
    return out;
  }
  for (int k = k0; k <= k_max - 1; ++k)
    out.push_back(check_le(detail::lam(si, k + 1), detail::lam(sg, k),
                           detail::combined_budget(si, k + 1, sg, k),
                           detail::ktag("delta-prime insertion", k)));
  return out;
}

// ---------------------------------------------------------------------------
// Rank-one / finite-rank chains at a single vertex v (the rest of the graph
// unchanged): each pair (X, Y, shift s) asserts
//   lambda_k(X) <= lambda_k(Y) <= lambda_{k+s}(X),
// with shift 0 meaning equality of the two spectra.
// Chains: Neumann vs anti (1), all-Neumann vs all-anti (|V|), Neumann vs
// delta-prime(a>0) (1), delta-prime(a<0) vs Neumann (1), Neumann vs
// Dirichlet (deg v), anti vs Dirichlet (deg v - 1), delta-prime vs Dirichlet
// (deg v, both signs), delta-prime(a) vs delta(deg^2/a) (deg v - 1, both
// signs).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_rank_one_chains(const MetricGraph& g,
                                                  const std::string& v,
                                                  double strength_magnitude,
                                                  int k_max,
                                                  const SolveOptions& opts = {}) {
  if (!(strength_magnitude > 0.0))
    fail(Err::ConfigInvalid, "strength magnitude must be positive");
  double a = strength_magnitude;
  int deg = static_cast<int>(g.degree(v));
  double d2 = static_cast<double>(deg) * deg;

  auto variant = [&](VertexCondition c) {
    return solve_spectrum(set_vertex_condition(g, v, c), k_max, opts);
  };
  Spectrum sN = variant(VertexCondition::neumann());
  Spectrum sA = variant(VertexCondition::anti_standard());
  Spectrum sD = variant(VertexCondition::dirichlet());
  Spectrum sPp = variant(VertexCondition::delta_prime(a));
  Spectrum sPn = variant(VertexCondition::delta_prime(-a));
  Spectrum sdp = variant(VertexCondition::delta(d2 / a));
  Spectrum sdn = variant(VertexCondition::delta(-d2 / a));

  MetricGraph all_n = g, all_a = g;
  for (const auto& vert : g.vertices()) {
    all_n = set_vertex_condition(all_n, vert.id, VertexCondition::neumann());
    all_a = set_vertex_condition(all_a, vert.id, VertexCondition::anti_standard());
  }
  Spectrum sNall = solve_spectrum(all_n, k_max, opts);
  Spectrum sAall = solve_spectrum(all_a, k_max, opts);

  std::vector<Verdict> out;
  auto chain = [&](const Spectrum& X, const Spectrum& Y, int shift,
                   const std::string& name) {
    for (int k = 1; k <= k_max; ++k) {
      if (shift == 0) {
        out.push_back(check_eq(detail::lam(X, k), detail::lam(Y, k),
                               detail::combined_budget(X, k, Y, k),
                               detail::ktag(name + " (coincidence)", k)));
        continue;
      }
      out.push_back(check_le(detail::lam(X, k), detail::lam(Y, k),
                             detail::combined_budget(X, k, Y, k),
                             detail::ktag(name + " (lower)", k)));
      if (k + shift <= k_max)
        out.push_back(check_le(detail::lam(Y, k), detail::lam(X, k + shift),
                               detail::combined_budget(Y, k, X, k + shift),
                               detail::ktag(name + " (upper)", k)));
    }
  };
  chain(sN, sA, 1, "neumann/anti");
  chain(sNall, sAall, static_cast<int>(g.vertex_count()), "all-neumann/all-anti");
  chain(sN, sPp, 1, "neumann/delta-prime positive");
  chain(sPn, sN, 1, "delta-prime negative/neumann");
  chain(sN, sD, deg, "neumann/dirichlet");
  chain(sA, sD, deg - 1, "anti/dirichlet");
  chain(sPp, sD, deg, "delta-prime positive/dirichlet");
  chain(sPn, sD, deg, "delta-prime negative/dirichlet");
  chain(sPp, sdp, deg - 1, "delta-prime/matched delta positive");
  chain(sPn, sdn, deg - 1, "delta-prime/matched delta negative");
  return out;
}

// ---------------------------------------------------------------------------
// Counting-function sandwich for an all-anti-standard graph, evaluated at
// midpoints of the union of the computed anti spectrum and the closed-form
// Dirichlet spectrum:
//   floor(sqrt(l)L/pi) - |E| + 1 <= N_D(l) <= N_A(l) <= N_D(l) + W,
// with W = 2|E| - |V|, and additionally N_A(l) <= N_D(l) + |V| when the
// Betti number is at most one.  Grid points closer to an eigenvalue than the
// local error budget are skipped.
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_counting_sandwich(const MetricGraph& g,
                                                    int k_max,
                                                    const SolveOptions& opts = {}) {
  for (const auto& vert : g.vertices())
    if (vert.condition.kind != ConditionKind::AntiStandard)
      fail(Err::ConfigInvalid, "counting sandwich needs an all-anti graph");
  const int E = static_cast<int>(g.edge_count());
  const int V = static_cast<int>(g.vertex_count());
  const int W = 2 * E - V;
  const int beta = g.betti_number();
  const double L = g.total_length();
  std::vector<double> lengths;
  for (const auto& e : g.edges()) lengths.push_back(e.length);

  Spectrum sA = solve_spectrum(g, k_max, opts);
  double top = detail::lam(sA, k_max);

  std::vector<double> points = sA.eigenvalues;
  for (double l : lengths)
    for (int m = 1;; ++m) {
      double lam = detail::sq(m * detail::pi_v / l);
      if (lam >= top) break;
      points.push_back(lam);
    }
  std::sort(points.begin(), points.end());
  std::vector<double> grid;
  if (points.front() > 0.0) grid.push_back(points.front() / 2.0);
  for (size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i + 1] - points[i] > 1e-12 * (1.0 + std::abs(points[i])))
      grid.push_back(0.5 * (points[i] + points[i + 1]));

  std::vector<Verdict> out;
  int skipped = 0;
  for (double x : grid) {
    // safety: x must be separated from every computed eigenvalue by more
    // than that eigenvalue's own budget
    bool safe = true;
    for (size_t i = 0; i < sA.eigenvalues.size(); ++i) {
      double b = sA.error_estimates[i] + 1e-9 * (1.0 + std::abs(sA.eigenvalues[i]));
      if (std::abs(sA.eigenvalues[i] - x) <= b) safe = false;
    }
    for (double l : lengths)
      for (int m = 1;; ++m) {
        double lam = detail::sq(m * detail::pi_v / l);
        if (lam > top) break;
        if (std::abs(lam - x) <= 1e-9 * (1.0 + std::abs(lam))) safe = false;
      }
    if (!safe) {
      ++skipped;  // GridPointTooCloseToEigenvalue
      continue;
    }
    long nd = dirichlet_counting_closed_form(lengths, x);
    long na = counting_function(sA, x);
    long c2 = static_cast<long>(std::floor(std::sqrt(std::max(0.0, x)) * L /
                                           detail::pi_v)) -
              E + 1;
    char tag[64];
    std::snprintf(tag, sizeof tag, "at lambda=%.6g", x);
    out.push_back(check_int_le(c2, nd, std::string("c2 lower ") + tag));
    out.push_back(check_int_le(nd, na, std::string("dirichlet below anti ") + tag));
    out.push_back(
        check_int_le(na, nd + W, std::string("anti within wide shift ") + tag));
    if (beta <= 1)
      out.push_back(check_int_le(na, nd + V,
                                 std::string("anti within vertex shift ") + tag));
  }
  if (out.empty()) {
    out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                   "GridPointTooCloseToEigenvalue: all grid points skipped"});
  } else if (skipped > 0) {
    out.back().detail += "; skipped=" + std::to_string(skipped);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Every applicable closed-form bound against the computed spectrum.
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_bounds(const MetricGraph& g, int k_max,
                                         const SolveOptions& opts = {},
                                         const std::vector<std::string>& only = {}) {
  Spectrum s = solve_spectrum(g, k_max, opts);
  std::vector<Verdict> out;
  for (const auto& row : all_bounds(g, k_max)) {
    if (!row.applicable) continue;
    if (!only.empty() &&
        std::find(only.begin(), only.end(), row.bound_id) == only.end())
      continue;
    double lam = detail::lam(s, row.k);
    double budget = detail::single_budget(s, row.k);
    std::string tag = row.bound_id + " at k=" + std::to_string(row.k);
    if (row.side == BoundSide::Lower)
      out.push_back(check_le(row.value, lam, budget, tag));
    else
      out.push_back(check_le(lam, row.value, budget, tag));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gluing two delta vertices (continuity added, strengths summed):
//   lambda_k(G) <= lambda_k(glued) <= lambda_{k+1}(G).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_delta_gluing(const MetricGraph& g,
                                               const std::string& v1,
                                               const std::string& v2, int k_max,
                                               const SolveOptions& opts = {}) {
  auto glued = glue_vertices(g, {v1, v2});
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sG = solve_spectrum(glued, k_max, opts);
  std::vector<Verdict> out;
  for (int k = 1; k <= k_max; ++k) {
    out.push_back(check_le(detail::lam(sg, k), detail::lam(sG, k),
                           detail::combined_budget(sg, k, sG, k),
                           detail::ktag("delta gluing (lower)", k)));
    if (k + 1 <= k_max)
      out.push_back(check_le(detail::lam(sG, k), detail::lam(sg, k + 1),
                             detail::combined_budget(sG, k, sg, k + 1),
                             detail::ktag("delta gluing (upper)", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Flower comparisons. Delta family: gluing all vertices into one flower
// vertex interlaces with shift |V|-1:
//   lambda_{k-|V|+1}(flower) <= lambda_k(G) <= lambda_k(flower)
//                                           <= lambda_{k+|V|-1}(G).
// Delta-prime family (sign-uniform strengths): all positive pushes the
// flower below G, all negative above.
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_flower_chain(const MetricGraph& g, int k_max,
                                               const SolveOptions& opts = {}) {
  auto flower = flowerize(g);
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sf = solve_spectrum(flower, k_max, opts);
  const int V = static_cast<int>(g.vertex_count());
  std::vector<Verdict> out;

  bool delta_like = g.all_in_family(ConditionFamily::DeltaLike);
  if (delta_like) {
    for (int k = 1; k <= k_max; ++k) {
      if (k - V + 1 >= 1)
        out.push_back(check_le(detail::lam(sf, k - V + 1), detail::lam(sg, k),
                               detail::combined_budget(sf, k - V + 1, sg, k),
                               detail::ktag("flower below", k)));
      out.push_back(check_le(detail::lam(sg, k), detail::lam(sf, k),
                             detail::combined_budget(sg, k, sf, k),
                             detail::ktag("flower above", k)));
      if (k + V - 1 <= k_max)
        out.push_back(check_le(detail::lam(sf, k), detail::lam(sg, k + V - 1),
                               detail::combined_budget(sf, k, sg, k + V - 1),
                               detail::ktag("flower wraparound", k)));
    }
    return out;
  }
  // delta-prime family: direction by the common strength sign
  bool all_pos = true, all_neg = true;
  for (const auto& vert : g.vertices()) {
    double s = vert.condition.family_strength();
    all_pos = all_pos && s > 0;
    all_neg = all_neg && s < 0;
  }
  if (!all_pos && !all_neg)
    fail(Err::ConfigInvalid,
         "delta-prime flower comparison needs sign-uniform strengths");
  for (int k = 1; k <= k_max; ++k) {
    double a = all_pos ? detail::lam(sf, k) : detail::lam(sg, k);
    double b = all_pos ? detail::lam(sg, k) : detail::lam(sf, k);
    out.push_back(check_le(a, b, detail::combined_budget(sg, k, sf, k),
                           detail::ktag("delta-prime flower", k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pendant edge attachment.  Delta-prime family: extension by zero is
// admissible, so every eigenvalue can only drop.  Standard family: the claim
// is restricted to the nonnegative part of the spectrum.
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_pendant_edge(const MetricGraph& g,
                                               const std::string& v,
                                               double length, int k_max,
                                               const SolveOptions& opts = {}) {
  bool dp_family = g.all_in_family(ConditionFamily::DeltaPrimeLike);
  VertexCondition tip = dp_family ? VertexCondition::anti_standard()
                                  : VertexCondition::standard();
  auto attached = attach_pendant_edge(g, v, length, tip);
  Spectrum sg = solve_spectrum(g, k_max, opts);
  Spectrum sa = solve_spectrum(attached, k_max, opts);
  std::vector<Verdict> out;
  for (int k = 1; k <= k_max; ++k) {
    if (!dp_family && detail::lam(sg, k) < detail::single_budget(sg, k))
      continue;  // only the nonnegative part is claimed
    out.push_back(check_le(detail::lam(sa, k), detail::lam(sg, k),
                           detail::combined_budget(sa, k, sg, k),
                           detail::ktag("pendant edge", k)));
  }
  if (out.empty())
    out.push_back({VerdictStatus::Inconclusive, 0.0, 0.0,
                   "NoValidRK: no nonnegative eigenvalue within range"});
  return out;
}

// ---------------------------------------------------------------------------
// Tree relation lambda_k(T^anti) = lambda_{k+1}(T^standard).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_tree_relation(const MetricGraph& t, int k_max,
                                                const SolveOptions& opts = {}) {
  if (!is_tree(t)) fail(Err::NotATree, "tree relation requires a tree");
  MetricGraph ts = t, ta = t;
  for (const auto& vert : t.vertices()) {
    ts = set_vertex_condition(ts, vert.id, VertexCondition::standard());
    ta = set_vertex_condition(ta, vert.id, VertexCondition::anti_standard());
  }
  Spectrum ss = solve_spectrum(ts, k_max, opts);
  Spectrum sa = solve_spectrum(ta, k_max, opts);
  std::vector<Verdict> out;
  for (int k = 1; k + 1 <= k_max; ++k)
    out.push_back(check_eq(detail::lam(sa, k), detail::lam(ss, k + 1),
                           detail::combined_budget(sa, k, ss, k + 1),
                           detail::ktag("tree relation", k)));
  return out;
}

// Aligned eigenvalue pairs (lambda_{k+beta}(B^anti), lambda_{k+1}(B^std)) for
// a bipartite graph, k = 1..k_max-max(beta,1).
struct BipartitePair {
  int k = 0;
  double anti_value = 0.0;
  double standard_value = 0.0;
};

inline std::vector<BipartitePair> bipartite_relation_check_values(
    const MetricGraph& b, int k_max, const SolveOptions& opts = {}) {
  if (!b.is_bipartite())
    fail(Err::NotBipartite, "relation values require a bipartite graph");
  int beta = b.betti_number();
  MetricGraph bs = b, ba = b;
  for (const auto& vert : b.vertices()) {
    bs = set_vertex_condition(bs, vert.id, VertexCondition::standard());
    ba = set_vertex_condition(ba, vert.id, VertexCondition::anti_standard());
  }
  Spectrum ss = solve_spectrum(bs, k_max, opts);
  Spectrum sa = solve_spectrum(ba, k_max, opts);
  std::vector<BipartitePair> out;
  for (int k = 1; k + beta <= k_max && k + 1 <= k_max; ++k)
    out.push_back({k, detail::lam(sa, k + beta), detail::lam(ss, k + 1)});
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite relation lambda_{k+beta}(B^anti) = lambda_{k+1}(B^std); a
// non-bipartite input is first subdivided once on every edge (which always
// produces a bipartite graph and preserves beta).
// ---------------------------------------------------------------------------
inline std::vector<Verdict> check_bipartite_relation(const MetricGraph& g,
                                                     int k_max,
                                                     const SolveOptions& opts = {}) {
  MetricGraph b = g;
  if (!b.is_bipartite()) {
    std::vector<std::string> ids;
    for (const auto& e : b.edges()) ids.push_back(e.id);
    for (const auto& id : ids) b = subdivide_edge(b, id, 0.5);
  }
  int beta = b.betti_number();
  MetricGraph bs = b, ba = b;
  for (const auto& vert : b.vertices()) {
    bs = set_vertex_condition(bs, vert.id, VertexCondition::standard());
    ba = set_vertex_condition(ba, vert.id, VertexCondition::anti_standard());
  }
  Spectrum ss = solve_spectrum(bs, k_max, opts);
  Spectrum sa = solve_spectrum(ba, k_max, opts);
  std::vector<Verdict> out;
  for (int k = 1; k + beta <= k_max && k + 1 <= k_max; ++k)
    out.push_back(check_eq(detail::lam(sa, k + beta), detail::lam(ss, k + 1),
                           detail::combined_budget(sa, k + beta, ss, k + 1),
                           detail::ktag("bipartite relation", k)));
  return out;
}

// ---------------------------------------------------------------------------
// Pendant-count/diameter relation for trees: 2L/#leaves <= diameter, with a
// fixed 1e-12 slack (pure geometry, no spectra involved).
// ---------------------------------------------------------------------------
inline Verdict check_pendant_diameter(const MetricGraph& t) {
  double slack = pendant_diameter_slack(t);
  double flipped = sentinel_flip_inequalities() ? -slack : slack;
  return {flipped >= -1e-12 ? VerdictStatus::Pass : VerdictStatus::Fail,
          flipped, 1e-12, "pendant-count/diameter relation"};
}

// Run a check, retrying once on a doubled mesh if any verdict is
// Inconclusive; the retry's verdicts are final.
template <typename CheckFn>
std::vector<Verdict> run_with_retry(CheckFn&& fn, const SolveOptions& opts) {
  std::vector<Verdict> first = fn(opts);
  bool inconclusive = false;
  for (const auto& v : first)
    inconclusive = inconclusive || v.status == VerdictStatus::Inconclusive;
  if (!inconclusive) return first;
  SolveOptions doubled = opts;
  doubled.elements_per_edge *= 2;
  return fn(doubled);
}

}  // namespace qg
