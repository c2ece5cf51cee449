// Ground-truth spectra for interval-reducible problems: closed forms where
// they exist and certified secular-equation root bracketing otherwise.
// Solution on [0, ℓ] is parametrized φ = A·c(x) + B·s(x) with c = cos(√λ x),
// s = sin(√λ x)/√λ (hyperbolic for λ < 0, and c = 1, s = x at λ = 0), so that
// φ(0) = A, φ′(0) = B, c′ = −λ s, s′ = c on every branch.  The signed
// derivative ∂φ points into the edge: ∂φ(0) = +φ′(0), ∂φ(ℓ) = −φ′(ℓ).
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qg/errors.hpp"
#include "qg/graph.hpp"

namespace qg {

enum class EndpointKind { Dirichlet, Neumann, RobinDelta, RobinDeltaPrime };

struct EndpointCondition {
  EndpointKind kind = EndpointKind::Neumann;
  double coefficient = 0.0;  // α for δ-type (∂φ = αφ), α′ for δ′-type (φ = α′∂φ)

  static EndpointCondition dirichlet() { return {EndpointKind::Dirichlet, 0.0}; }
  static EndpointCondition neumann() { return {EndpointKind::Neumann, 0.0}; }
  static EndpointCondition robin_delta(double a) {
    return {EndpointKind::RobinDelta, a};
  }
  static EndpointCondition robin_delta_prime(double a) {
    return {EndpointKind::RobinDeltaPrime, a};
  }
};

// Degree-one reduction of a vertex condition to an endpoint condition.
inline EndpointCondition endpoint_condition_of(const VertexCondition& c) {
  switch (c.kind) {
    case ConditionKind::Dirichlet: return EndpointCondition::dirichlet();
    case ConditionKind::Neumann: return EndpointCondition::neumann();
    case ConditionKind::Standard: return EndpointCondition::neumann();
    case ConditionKind::AntiStandard: return EndpointCondition::dirichlet();
    case ConditionKind::Delta: return EndpointCondition::robin_delta(c.strength);
    case ConditionKind::DeltaPrime:
      return EndpointCondition::robin_delta_prime(c.strength);
  }
  return EndpointCondition::neumann();
}

namespace secular {

struct Basis {
  double c, s;  // c(ℓ), s(ℓ)
};

inline Basis basis_at(double lambda, double ell) {
  if (lambda > 0.0) {
    double w = std::sqrt(lambda);
    return {std::cos(w * ell), std::sin(w * ell) / w};
  }
  if (lambda < 0.0) {
    double k = std::sqrt(-lambda);
    return {std::cosh(k * ell), std::sinh(k * ell) / k};
  }
  return {1.0, ell};
}

struct Row {
  double a, b;
};

inline Row left_row(const EndpointCondition& ec) {
  switch (ec.kind) {
    case EndpointKind::Dirichlet: return {1.0, 0.0};
    case EndpointKind::Neumann: return {0.0, 1.0};
    case EndpointKind::RobinDelta: return {-ec.coefficient, 1.0};
    case EndpointKind::RobinDeltaPrime: return {1.0, -ec.coefficient};
  }
  return {0.0, 1.0};
}

inline Row right_row(const EndpointCondition& ec, double lambda, const Basis& z) {
  // φ(ℓ) = A c + B s;  φ′(ℓ) = −λ s A + c B.
  switch (ec.kind) {
    case EndpointKind::Dirichlet: return {z.c, z.s};
    case EndpointKind::Neumann: return {-lambda * z.s, z.c};
    case EndpointKind::RobinDelta:
      // ∂φ(ℓ) = αφ(ℓ)  ⇔  αφ(ℓ) + φ′(ℓ) = 0
      return {ec.coefficient * z.c - lambda * z.s, ec.coefficient * z.s + z.c};
    case EndpointKind::RobinDeltaPrime:
      // φ(ℓ) = α′∂φ(ℓ)  ⇔  φ(ℓ) + α′φ′(ℓ) = 0
      return {z.c - ec.coefficient * lambda * z.s, z.s + ec.coefficient * z.c};
  }
  return {0.0, 0.0};
}

struct Eval {
  double f;      // secular determinant
  double scale;  // row-norm product, for relative zero tests
};

inline Eval eval(double lambda, double ell, const EndpointCondition& left,
                 const EndpointCondition& right) {
  Basis z = basis_at(lambda, ell);
  Row l = left_row(left);
  Row r = right_row(right, lambda, z);
  double f = l.a * r.b - l.b * r.a;
  double scale = std::max(std::abs(l.a), std::abs(l.b)) *
                     std::max(std::abs(r.a), std::abs(r.b)) +
                 1e-300;
  return {f, scale};
}

inline double bisect(double lo, double hi, double flo, double ell,
                     const EndpointCondition& left, const EndpointCondition& right) {
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-15 * (1.0 + std::abs(mid))) return mid;
    double fm = eval(mid, ell, left, right).f;
    if (fm == 0.0) return mid;
    if ((flo < 0.0) != (fm < 0.0))
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace secular

// Closed forms: both endpoint conditions Dirichlet/Neumann only.
inline std::vector<double> interval_spectrum_closed_form(
    double ell, const EndpointCondition& left, const EndpointCondition& right,
    int k_max) {
  auto closed = [](EndpointKind k) {
    return k == EndpointKind::Dirichlet || k == EndpointKind::Neumann;
  };
  if (!closed(left.kind) || !closed(right.kind))
    fail(Err::RobinNotClosedForm,
         "closed-form interval spectra exist only for Dirichlet/Neumann ends");
  const double pi = 3.14159265358979323846;
  std::vector<double> out;
  bool ld = left.kind == EndpointKind::Dirichlet;
  bool rd = right.kind == EndpointKind::Dirichlet;
  for (int k = 0; (int)out.size() < k_max; ++k) {
    double v;
    if (ld && rd)
      v = ((k + 1) * pi / ell) * ((k + 1) * pi / ell);
    else if (!ld && !rd)
      v = (k * pi / ell) * (k * pi / ell);
    else
      v = ((k + 0.5) * pi / ell) * ((k + 0.5) * pi / ell);
    out.push_back(v);
  }
  return out;
}

// Transcendental secular spectrum for any endpoint pair.  Roots are bracketed
// by sign changes on a scan grid and certified by bisection; the hyperbolic
// branch (λ < 0) is scanned logarithmically.
inline std::vector<double> interval_secular_spectrum(double ell,
                                                     const EndpointCondition& left,
                                                     const EndpointCondition& right,
                                                     int k_max) {
  if (!(ell > 0.0)) fail(Err::NonpositiveLength, "interval length must be positive");
  if (k_max < 1) fail(Err::ConfigInvalid, "k_max must be >= 1");
  const double pi = 3.14159265358979323846;
  std::vector<double> roots;

  // λ = 0 is checked explicitly (the scan grids exclude it).
  {
    auto e0 = secular::eval(0.0, ell, left, right);
    if (std::abs(e0.f) <= 1e-11 * e0.scale * (1.0 + ell)) roots.push_back(0.0);
  }

  // Trigonometric branch: λ = ω², grid offset avoids exact root hits for the
  // pure Dirichlet/Neumann cases whose roots sit on multiples of π/ℓ.
  {
    double step = pi / (8.0 * ell);
    double wmax = (k_max + 4) * pi / ell;
    // Log sub-scan below the first grid point: catches near-zero roots from
    // marginally subcritical Robin coefficients.
    {
      double w0 = 1e-7 / ell, w1 = 0.375 * step;
      double prev_w = w0;
      secular::Eval prev = secular::eval(w0 * w0, ell, left, right);
      for (int j = 1; j <= 64; ++j) {
        double w = w0 * std::pow(w1 / w0, j / 64.0);
        secular::Eval cur = secular::eval(w * w, ell, left, right);
        if ((prev.f < 0.0) != (cur.f < 0.0))
          roots.push_back(
              secular::bisect(prev_w * prev_w, w * w, prev.f, ell, left, right));
        prev_w = w;
        prev = cur;
      }
    }
    double prev_w = (0.375) * step;
    secular::Eval prev = secular::eval(prev_w * prev_w, ell, left, right);
    for (int j = 1; prev_w < wmax; ++j) {
      double w = (j + 0.375) * step;
      secular::Eval cur = secular::eval(w * w, ell, left, right);
      if (std::abs(cur.f) <= 1e-14 * cur.scale) {
        roots.push_back(w * w);
      } else if ((prev.f < 0.0) != (cur.f < 0.0)) {
        roots.push_back(
            secular::bisect(prev_w * prev_w, w * w, prev.f, ell, left, right));
      }
      prev_w = w;
      prev = cur;
    }
  }

  // Hyperbolic branch: λ = −κ².  Range covers δ-type (κ ~ |α|) and δ′-type
  // (κ ~ 1/|α′|) localization scales with margin.
  {
    double hi = 10.0;
    int neg_bound = 0;
    for (const auto& ec : {left, right}) {
      if (ec.kind == EndpointKind::RobinDelta) {
        hi += std::abs(ec.coefficient);
        if (ec.coefficient < 0.0) ++neg_bound;
      } else if (ec.kind == EndpointKind::RobinDeltaPrime) {
        hi += std::abs(ec.coefficient) + 2.0 / std::abs(ec.coefficient);
        if (ec.coefficient < 0.0) ++neg_bound;
      }
    }
    std::vector<double> neg;
    if (neg_bound > 0) {
      const int ngrid = 4000;
      double lo = 1e-6;
      double lk = std::log(lo), hk = std::log(hi);
      double prev_k = lo;
      secular::Eval prev = secular::eval(-lo * lo, ell, left, right);
      for (int j = 1; j <= ngrid; ++j) {
        double kk = std::exp(lk + (hk - lk) * j / ngrid);
        secular::Eval cur = secular::eval(-kk * kk, ell, left, right);
        if (std::abs(cur.f) <= 1e-14 * cur.scale) {
          neg.push_back(-kk * kk);
        } else if ((prev.f < 0.0) != (cur.f < 0.0)) {
          neg.push_back(secular::bisect(-kk * kk, -prev_k * prev_k, cur.f, ell,
                                        left, right));
        }
        prev_k = kk;
        prev = cur;
      }
    }
    if ((int)neg.size() > neg_bound || (int)neg.size() > 2)
      fail(Err::BracketingFailure,
           "hyperbolic branch found " + std::to_string(neg.size()) +
               " roots, more than the sign pattern allows");
    roots.insert(roots.end(), neg.begin(), neg.end());
  }

  std::sort(roots.begin(), roots.end());
  // Merge near-duplicates (a bracketed root adjacent to an exact grid hit).
  std::vector<double> uniq;
  for (double r : roots) {
    if (!uniq.empty() && std::abs(r - uniq.back()) <= 1e-10 * (1.0 + std::abs(r)))
      continue;
    uniq.push_back(r);
  }
  if ((int)uniq.size() < k_max)
    fail(Err::BracketingFailure,
         "found only " + std::to_string(uniq.size()) + " roots of " +
             std::to_string(k_max) + " requested on the scanned grid");
  uniq.resize(k_max);
  return uniq;
}

// All-Standard cycle of total length L: 0, then (2kπ/L)² twice each.
inline std::vector<double> cycle_spectrum_closed_form(double L, int k_max) {
  if (!(L > 0.0)) fail(Err::NonpositiveLength, "cycle length must be positive");
  const double pi = 3.14159265358979323846;
  std::vector<double> out = {0.0};
  for (int k = 1; (int)out.size() < k_max; ++k) {
    double v = (2.0 * k * pi / L) * (2.0 * k * pi / L);
    out.push_back(v);
    if ((int)out.size() < k_max) out.push_back(v);
  }
  out.resize(k_max);
  return out;
}

enum class PathKind { Standard, AntiStandard };

// Path of total length L with interior Standard vertices: standard endpoints
// give (kπ/L)², k ≥ 0; anti-standard endpoints give (kπ/L)², k ≥ 1.
inline std::vector<double> path_spectrum_closed_form(double L, PathKind kind,
                                                     int k_max) {
  if (!(L > 0.0)) fail(Err::NonpositiveLength, "path length must be positive");
  const double pi = 3.14159265358979323846;
  std::vector<double> out;
  int k0 = (kind == PathKind::Standard) ? 0 : 1;
  for (int k = k0; (int)out.size() < k_max; ++k)
    out.push_back((k * pi / L) * (k * pi / L));
  return out;
}

}  // namespace qg
