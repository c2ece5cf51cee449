#pragma once
// Closed-form eigenvalue bounds: pure scalar formulas plus a wrapper that
// collects every bound applicable to a given graph.
//
// Conventions: eigenvalue indices are 1-based; L is the total length, |E| the
// edge count, |V| the vertex count, beta the first Betti number.  Lower
// bounds whose index shift is vacuous are clamped to zero when the spectrum
// is known to be nonnegative, and reported inapplicable otherwise.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/errors.hpp"
#include "qg/graph.hpp"

namespace qg {

enum class BoundSide { Lower, Upper, Equality };

inline std::string to_string(BoundSide s) {
  switch (s) {
    case BoundSide::Lower: return "lower";
    case BoundSide::Upper: return "upper";
    case BoundSide::Equality: return "equality";
  }
  return "?";
}

struct BoundResult {
  std::string bound_id;
  int k = 0;  // 1-based index of the eigenvalue being bounded
  BoundSide side = BoundSide::Upper;
  double value = 0.0;
  bool applicable = true;
  std::string reason;  // populated when applicable is false
};

enum class StrengthSign { Zero, Positive, Negative, Mixed };

inline StrengthSign classify_strengths(const std::vector<double>& strengths) {
  bool pos = false, neg = false;
  for (double s : strengths) {
    pos = pos || s > 0.0;
    neg = neg || s < 0.0;
  }
  if (pos && neg) return StrengthSign::Mixed;
  if (pos) return StrengthSign::Positive;
  if (neg) return StrengthSign::Negative;
  return StrengthSign::Zero;
}

namespace detail {
inline constexpr double pi_v = std::numbers::pi;
inline double sq(double x) { return x * x; }
inline double harmonic_sum(const std::vector<double>& lengths) {
  double s = 0.0;
  for (double l : lengths) s += 1.0 / l;
  return s;
}
}  // namespace detail

// lambda_k of an all-standard connected graph is at most ((k-1+beta+|E|)pi/L)^2.
inline double bound_standard_upper(int k, int beta, int edges, double total_length) {
  return detail::sq((k - 1 + beta + edges) * detail::pi_v / total_length);
}

// Variant with |D| pendant Dirichlet vertices and |S| standard vertices:
// lambda_k <= ((k-2+2*beta+2|D|+|S|)pi/L)^2.  With |D|=0 and |S|=|V| this
// coincides with bound_standard_upper after |E| = beta+|V|-1.
inline double bound_dirichlet_standard_upper(int k, int beta, int dirichlet,
                                             int standard, double total_length) {
  return detail::sq((k - 2 + 2 * beta + 2 * dirichlet + standard) * detail::pi_v /
                    total_length);
}

// Upper bound for delta-coupling graphs, by sign of the strengths:
// nonpositive strengths compare against the decoupled Dirichlet graph
// ((k+|E|)pi/L)^2; a positive strength costs one more index.
inline double bound_delta_upper(int k, int edges, double total_length,
                                StrengthSign sign) {
  int shift = sign == StrengthSign::Positive ? edges + 1 : edges;
  return detail::sq((k + shift) * detail::pi_v / total_length);
}

// Lower bound for delta-coupling graphs: ((k-|V|)pi/L)^2 once k > |V| (the
// form domain exceeds the decoupled Dirichlet domain by |V| dimensions, and
// the strength terms vanish on Dirichlet data, so the counting functions
// differ by at most |V| for every choice of strengths).  For k <= |V| the
// bound degenerates to zero, which is valid only for nonnegative strengths.
inline std::optional<double> bound_delta_lower(int k, int vertices,
                                               double total_length,
                                               StrengthSign sign) {
  if (k > vertices)
    return detail::sq((k - vertices) * detail::pi_v / total_length);
  if (sign == StrengthSign::Negative) return std::nullopt;
  return 0.0;
}

// Anti-standard "window": lower ((k-|V|)pi/L)^2 clamped at zero.  The vertex
// count matches the constraint count only when beta <= 1; the wide variant
// below uses the true codimension W = 2|E|-|V| and holds for every graph.
inline double bound_anti_window_lower(int k, int vertices, double total_length) {
  if (k <= vertices) return 0.0;
  return detail::sq((k - vertices) * detail::pi_v / total_length);
}

inline double bound_anti_window_lower_wide(int k, int edges, int vertices,
                                           double total_length) {
  int w = 2 * edges - vertices;
  if (k <= w) return 0.0;
  return detail::sq((k - w) * detail::pi_v / total_length);
}

inline double bound_anti_window_upper(int k, int edges, double total_length) {
  return detail::sq((k + edges - 1) * detail::pi_v / total_length);
}

// Second anti-standard pair: lower (k pi/L)^2 is attained exactly on a single
// non-loop edge (where anti-standard reduces to Dirichlet) and fails already
// for loops and stars, hence the single-edge gate; the shifted upper
// ((k+|E|+|V|-1)pi/L)^2 holds for every connected graph.
inline double bound_anti_interval_lower(int k, double total_length) {
  return detail::sq(k * detail::pi_v / total_length);
}

inline double bound_anti_shifted_upper(int k, int edges, int vertices,
                                       double total_length) {
  return detail::sq((k + edges + vertices - 1) * detail::pi_v / total_length);
}

// All vertices delta-prime with negative strengths.  Doubling every edge and
// cutting the Eulerian double cover open into a single cycle of length 2L
// leaves 2|E| negative-strength vertices whose removal costs one index each,
// and the resulting even anti cycle shares its spectrum with the standard
// cycle, lambda_m = (floor(m/2) pi / L)^2.  Hence for k >= 2|E|,
//   lambda_k >= (floor((k-2|E|)/2) pi / L)^2.
inline std::optional<double> bound_deltaprime_negative_lower(int k, int edges,
                                                             double total_length) {
  if (k < 2 * edges) return std::nullopt;
  return detail::sq(((k - 2 * edges) / 2) * detail::pi_v / total_length);
}

// Lower bound for eigenvalue number k|E|+j of an all-delta-prime graph with
// lengths sorted in non-increasing order: with k' = k - (1 + (|V|+1)/|E|),
//   min{ (2k'+3)^2 pi^2 / (4 l_1^2), (2k'+1)^2 pi^2 / (4 l_j^2) },
// applicable while 2k'+1 >= 0.
inline std::optional<double> bound_deltaprime_star_lower(
    int k, int j, int edges, int vertices,
    const std::vector<double>& lengths_desc) {
  if (edges < 2 || j < 1 || j > edges ||
      static_cast<int>(lengths_desc.size()) != edges)
    fail(Err::IndexOutOfRange, "star bound needs |E| >= 2 and 1 <= j <= |E|");
  double kp = k - (1.0 + static_cast<double>(vertices + 1) / edges);
  if (2.0 * kp + 1.0 < 0.0) return std::nullopt;
  double a = detail::sq((2.0 * kp + 3.0) * detail::pi_v) /
             (4.0 * detail::sq(lengths_desc.front()));
  double b = detail::sq((2.0 * kp + 1.0) * detail::pi_v) /
             (4.0 * detail::sq(lengths_desc[static_cast<size_t>(j) - 1]));
  return std::min(a, b);
}

// Rayleigh quotients of explicit test functions, all upper bounds for
// lambda_1 of a delta-prime-family graph.  Edgewise sin(pi x/l) and
// sin(2 pi x/l) vanish at every vertex and need no strength assumption;
// the constant function and edgewise cos(2 pi x/l) have nonzero vertex
// values and require a nonzero strength at every vertex.
inline double lambda1_sine_upper(double total_length,
                                 const std::vector<double>& lengths) {
  return detail::sq(detail::pi_v) / total_length * detail::harmonic_sum(lengths);
}

inline double lambda1_sine2_upper(double total_length,
                                  const std::vector<double>& lengths) {
  return 4.0 * detail::sq(detail::pi_v) / total_length *
         detail::harmonic_sum(lengths);
}

inline std::optional<double> lambda1_constant_upper(
    double total_length, const std::vector<std::pair<int, double>>& degree_strength) {
  double s = 0.0;
  for (auto [d, a] : degree_strength) {
    if (a == 0.0) return std::nullopt;
    s += static_cast<double>(d) * d / a;
  }
  return s / total_length;
}

inline std::optional<double> lambda1_cosine_upper(
    double total_length, const std::vector<double>& lengths,
    const std::vector<std::pair<int, double>>& degree_strength) {
  double s = 0.0;
  for (auto [d, a] : degree_strength) {
    if (a == 0.0) return std::nullopt;
    s += static_cast<double>(d) * d / a;
  }
  return 2.0 / total_length *
         (2.0 * detail::sq(detail::pi_v) * detail::harmonic_sum(lengths) + s);
}

// Closed-form counting function of the fully decoupled Dirichlet graph:
// N(lambda) = sum_j floor(sqrt(lambda) l_j / pi).
inline int dirichlet_counting_closed_form(const std::vector<double>& lengths,
                                          double lambda) {
  if (lambda <= 0.0) return 0;
  int n = 0;
  for (double l : lengths)
    n += static_cast<int>(std::floor(std::sqrt(lambda) * l / detail::pi_v));
  return n;
}

// Diameter minus the pendant-count bound 2L/#leaves; nonnegative for every
// tree (each leaf-to-leaf path is at most the diameter, and doubling the tree
// walks every edge twice across at most #leaves such paths).
inline double pendant_diameter_slack(const MetricGraph& t) {
  if (!is_tree(t)) fail(Err::NotATree, "pendant-diameter bound requires a tree");
  double leaves = static_cast<double>(t.pendant_vertices().size());
  return tree_diameter(t) - 2.0 * t.total_length() / leaves;
}

enum class TreeKind { Standard, AntiStandard };

namespace detail {
inline void push_bound(std::vector<BoundResult>& out, std::string id, int k,
                       BoundSide side, double value) {
  out.push_back({std::move(id), k, side, value, true, ""});
}
inline void push_inapplicable(std::vector<BoundResult>& out, std::string id,
                              int k, BoundSide side, std::string reason) {
  out.push_back({std::move(id), k, side, 0.0, false, std::move(reason)});
}
}  // namespace detail

// Upper bounds for tree spectra.  The same four expressions bound
// lambda_{m+1} of the standard tree and lambda_m of the anti-standard tree:
// (m pi/d)^2 via the diameter (= the longest path of a tree), (m pi |E|/2L)^2
// via the edge count (|E| >= 2 only), and (m pi #leaves/2L)^2 via pendant
// count.  A single-edge tree has two pendant endpoints, hence leaves, not
// pendant edges, enter the last expression.
inline std::vector<BoundResult> tree_bounds(const MetricGraph& t, TreeKind kind,
                                            int k_max) {
  if (!is_tree(t)) fail(Err::NotATree, "tree bounds require a tree");
  const double total = t.total_length();
  const double diam = tree_diameter(t);
  const int edges = static_cast<int>(t.edge_count());
  const int leaves = static_cast<int>(t.pendant_vertices().size());
  std::vector<BoundResult> out;
  for (int n = 1; n <= k_max; ++n) {
    int m = kind == TreeKind::Standard ? n - 1 : n;
    double via_diameter = detail::sq(m * detail::pi_v / diam);
    detail::push_bound(out, "tree-longest-path-upper", n, BoundSide::Upper,
                       via_diameter);
    detail::push_bound(out, "tree-diameter-upper", n, BoundSide::Upper,
                       via_diameter);
    if (edges >= 2)
      detail::push_bound(out, "tree-edge-count-upper", n, BoundSide::Upper,
                         detail::sq(m * detail::pi_v * edges / (2.0 * total)));
    else
      detail::push_inapplicable(out, "tree-edge-count-upper", n, BoundSide::Upper,
                                "requires at least two edges");
    detail::push_bound(out, "tree-pendant-upper", n, BoundSide::Upper,
                       detail::sq(m * detail::pi_v * leaves / (2.0 * total)));
  }
  return out;
}

// Every closed-form bound applicable to g, for eigenvalue indices 1..k_max.
// Bounds assume a compact connected graph; a disconnected g yields no rows.
// Rows are emitted inapplicable (with a reason) when the condition family
// matches a bound but one of its secondary gates fails.
inline std::vector<BoundResult> all_bounds(const MetricGraph& g, int k_max) {
  if (k_max < 1) fail(Err::ConfigInvalid, "k_max must be at least 1");
  std::vector<BoundResult> out;
  if (!g.is_connected()) return out;

  const int edges = static_cast<int>(g.edge_count());
  const int verts = static_cast<int>(g.vertex_count());
  const double total = g.total_length();
  const int beta = g.betti_number();

  bool all_standard = true, all_anti = true;
  bool delta_family = true, deltaprime_family = true;
  bool dirichlet_standard_mix = true, dirichlet_all_pendant = true;
  bool any_nonzero_dp = false, all_negative_dp = true;
  int n_dirichlet = 0, n_standard = 0;
  std::vector<double> strengths;
  for (const auto& v : g.vertices()) {
    ConditionKind kind = v.condition.kind;
    all_standard = all_standard && kind == ConditionKind::Standard;
    all_anti = all_anti && kind == ConditionKind::AntiStandard;
    delta_family = delta_family && family_of(kind) == ConditionFamily::DeltaLike;
    deltaprime_family =
        deltaprime_family && family_of(kind) == ConditionFamily::DeltaPrimeLike;
    if (kind == ConditionKind::Dirichlet) {
      ++n_dirichlet;
      dirichlet_all_pendant = dirichlet_all_pendant && g.degree(v.id) == 1;
    } else if (kind == ConditionKind::Standard) {
      ++n_standard;
    } else {
      dirichlet_standard_mix = false;
    }
    if (kind == ConditionKind::DeltaPrime) any_nonzero_dp = true;
    strengths.push_back(v.condition.family_strength());
    all_negative_dp = all_negative_dp && v.condition.family_strength() < 0.0;
  }
  std::vector<double> lengths;
  for (const auto& e : g.edges()) lengths.push_back(e.length);

  if (all_standard) {
    for (int k = 1; k <= k_max; ++k)
      detail::push_bound(out, "standard-upper", k, BoundSide::Upper,
                         bound_standard_upper(k, beta, edges, total));
  }
  if (dirichlet_standard_mix && n_dirichlet > 0) {
    for (int k = 1; k <= k_max; ++k) {
      if (dirichlet_all_pendant)
        detail::push_bound(out, "dirichlet-standard-upper", k, BoundSide::Upper,
                           bound_dirichlet_standard_upper(k, beta, n_dirichlet,
                                                          n_standard, total));
      else
        detail::push_inapplicable(out, "dirichlet-standard-upper", k,
                                  BoundSide::Upper,
                                  "Dirichlet vertices must be pendant");
    }
  }
  if (delta_family) {
    StrengthSign sign = classify_strengths(strengths);
    for (int k = 1; k <= k_max; ++k) {
      if (sign == StrengthSign::Mixed) {
        detail::push_inapplicable(out, "delta-upper", k, BoundSide::Upper,
                                  "strengths have mixed signs");
        detail::push_inapplicable(out, "delta-lower", k, BoundSide::Lower,
                                  "strengths have mixed signs");
        continue;
      }
      detail::push_bound(out, "delta-upper", k, BoundSide::Upper,
                         bound_delta_upper(k, edges, total, sign));
      if (auto low = bound_delta_lower(k, verts, total, sign))
        detail::push_bound(out, "delta-lower", k, BoundSide::Lower, *low);
      else
        detail::push_inapplicable(out, "delta-lower", k, BoundSide::Lower,
                                  to_string(Err::IndexOutOfRange));
    }
  }
  if (all_anti) {
    bool single_plain_edge =
        edges == 1 && g.edges()[0].from != g.edges()[0].to;
    for (int k = 1; k <= k_max; ++k) {
      if (beta <= 1)
        detail::push_bound(out, "anti-window-lower", k, BoundSide::Lower,
                           bound_anti_window_lower(k, verts, total));
      else
        detail::push_inapplicable(out, "anti-window-lower", k, BoundSide::Lower,
                                  "requires first Betti number at most one");
      detail::push_bound(out, "anti-window-lower-wide", k, BoundSide::Lower,
                         bound_anti_window_lower_wide(k, edges, verts, total));
      detail::push_bound(out, "anti-window-upper", k, BoundSide::Upper,
                         bound_anti_window_upper(k, edges, total));
      if (single_plain_edge)
        detail::push_bound(out, "anti-interval-lower", k, BoundSide::Lower,
                           bound_anti_interval_lower(k, total));
      else
        detail::push_inapplicable(out, "anti-interval-lower", k,
                                  BoundSide::Lower,
                                  "requires a single non-loop edge");
      detail::push_bound(out, "anti-shifted-upper", k, BoundSide::Upper,
                         bound_anti_shifted_upper(k, edges, verts, total));
    }
  }
  if (deltaprime_family) {
    // Vanishing test functions never see the vertex terms, so the two sine
    // quotients bound lambda_1 for the whole family, anti vertices included.
    detail::push_bound(out, "deltaprime-l1-sine", 1, BoundSide::Upper,
                       lambda1_sine_upper(total, lengths));
    detail::push_bound(out, "deltaprime-l1-sine2", 1, BoundSide::Upper,
                       lambda1_sine2_upper(total, lengths));
  }
  if (deltaprime_family && any_nonzero_dp) {
    std::vector<std::pair<int, double>> degree_strength;
    for (const auto& v : g.vertices())
      degree_strength.emplace_back(static_cast<int>(g.degree(v.id)),
                                   v.condition.family_strength());
    if (auto c = lambda1_constant_upper(total, degree_strength))
      detail::push_bound(out, "deltaprime-l1-constant", 1, BoundSide::Upper, *c);
    else
      detail::push_inapplicable(out, "deltaprime-l1-constant", 1,
                                BoundSide::Upper,
                                to_string(Err::ZeroStrengthVertexWithoutRemarkPath));
    if (auto c = lambda1_cosine_upper(total, lengths, degree_strength))
      detail::push_bound(out, "deltaprime-l1-cosine", 1, BoundSide::Upper, *c);
    else
      detail::push_inapplicable(out, "deltaprime-l1-cosine", 1, BoundSide::Upper,
                                to_string(Err::ZeroStrengthVertexWithoutRemarkPath));
    for (int k = 1; k <= k_max; ++k) {
      if (all_negative_dp) {
        if (auto low = bound_deltaprime_negative_lower(k, edges, total))
          detail::push_bound(out, "deltaprime-negative-lower", k,
                             BoundSide::Lower, *low);
        else
          detail::push_inapplicable(out, "deltaprime-negative-lower", k,
                                    BoundSide::Lower,
                                    to_string(Err::IndexOutOfRange));
      } else {
        detail::push_inapplicable(out, "deltaprime-negative-lower", k,
                                  BoundSide::Lower,
                                  "requires negative strengths at every vertex");
      }
    }
    if (edges >= 2) {
      std::vector<double> sorted = lengths;
      std::sort(sorted.begin(), sorted.end(), std::greater<double>());
      for (int n = 1; n <= k_max; ++n) {
        int j = (n - 1) % edges + 1;
        int k = (n - j) / edges;
        if (auto low = bound_deltaprime_star_lower(k, j, edges, verts, sorted))
          detail::push_bound(out, "deltaprime-star-lower", n, BoundSide::Lower,
                             *low);
        else
          detail::push_inapplicable(out, "deltaprime-star-lower", n,
                                    BoundSide::Lower,
                                    to_string(Err::IndexOutOfRange));
      }
    }
  }
  if ((all_standard || all_anti) && is_tree(g)) {
    auto rows = tree_bounds(
        g, all_standard ? TreeKind::Standard : TreeKind::AntiStandard, k_max);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace qg
