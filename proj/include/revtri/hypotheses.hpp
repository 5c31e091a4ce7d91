/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_HYPOTHESES_HPP
#define REVTRI_HYPOTHESES_HPP

#include <optional>
#include <variant>
#include <vector>

#include "revtri/function.hpp"
#include "revtri/types.hpp"

namespace revtri {

/// Result of a pointwise hypothesis check.  Margins are the per-node slack,
/// normalized by max(1, ||f(t)||); a check holds when the worst margin stays
/// above -margin_tol.  Step functions exclude the final node.
struct CheckReport {
  bool holds = false;
  double worst_margin = 0.0;
  double worst_node = 0.0;  ///< t of the worst margin (smallest t on ties)
  std::vector<double> per_node_margins;
};

// --- hypothesis parameter sets --------------------------------------------

/// ||f(t)|| <= K Re<f(t), e> with e unit and K >= 1.
struct UnitKParams {
  Vec e;
  double K = 1.0;
};

/// ||f(t) - e|| <= rho with e unit and rho in [0, 1).
struct DiskParams {
  Vec e;
  double rho = 0.0;
};

/// Re<M e - f, f - m e> >= 0 with 0 < m <= M, checked together with the
/// equivalent ball form ||f - ((M+m)/2) e|| <= (M-m)/2; the reported margin
/// is the minimum over both forms evaluated independently.
struct BandParams {
  Vec e;
  double m = 1.0;
  double M = 1.0;
};

/// Re<f(t), e_i> >= k_i ||f(t)|| for an orthonormal family and k_i >= 0.
struct OrthoKParams {
  std::vector<Vec> family;
  std::vector<double> k;
};

/// ||f(t) - e_i|| <= rho_i, each rho_i in [0, 1).
struct OrthoDiskParams {
  std::vector<Vec> family;
  std::vector<double> rho;
};

/// Band condition against every member of an orthonormal family.
struct OrthoBandParams {
  std::vector<Vec> family;
  std::vector<double> m;
  std::vector<double> M;
};

/// |arg f(t)| <= theta with theta in [0, pi/2); scalar complex functions.
struct ComplexArgParams {
  double theta = 0.0;
};

/// m alpha <= Re f <= M alpha and m beta <= Im f <= M beta with
/// alpha^2 + beta^2 = 1 and 0 < m <= M; scalar complex functions.
struct ComplexRectParams {
  double alpha = 1.0;
  double beta = 0.0;
  double m = 1.0;
  double M = 1.0;
};

using HypothesisParams =
    std::variant<UnitKParams, DiskParams, BandParams, OrthoKParams, OrthoDiskParams,
                 OrthoBandParams, ComplexArgParams, ComplexRectParams>;

/// Pointwise check of a hypothesis over the counted grid nodes.
CheckReport check(const SampledFunction& f, const HypothesisParams& params,
                  const ToleranceConfig& tol = {});

/// Smallest K with ||f(t)|| <= K Re<f(t), e> at every counted node
/// (zero-norm nodes satisfy the condition trivially and are skipped).
/// Clamped up to 1 when rounding pulls the ratio below it.  Throws
/// InapplicableError when some node has Re<f(t), e> <= 0 with ||f(t)|| > 0.
double minimal_k(const SampledFunction& f, const Vec& e,
                 const ToleranceConfig& tol = {});

/// Smallest rho with ||f(t) - e|| <= rho: the max node distance.  Values
/// >= 1 are returned as-is; whether they are usable is the caller's call.
double minimal_rho(const SampledFunction& f, const Vec& e,
                   const ToleranceConfig& tol = {});

struct BandFit {
  double m = 0.0;
  double M = 0.0;
  double factor = 0.0;  ///< 2 sqrt(mM) / (M + m)
};

/// Feasible band [m, M] maximizing 2 sqrt(mM)/(M+m) subject to the
/// pointwise condition ||f||^2 + mM <= (M+m) Re<f,e> at every counted node.
/// With s = m+M and p = mM the feasible region is p <= min(s^2/4, g(s)),
/// g(s) = min_t (s b_t - a_t); the objective 4 p(s)/s^2 is quasi-concave in
/// s (a min of unimodal single-node ratios), so a golden-section search on
/// s in [sigma, 2 sigma], sigma = max_t a_t/b_t, finds the optimum; the
/// bracket provably contains it.  Throws InapplicableError when any counted
/// node has Re<f,e> <= 0.
BandFit band_fit(const SampledFunction& f, const Vec& e,
                 const ToleranceConfig& tol = {});

/// k_i = max(0, min over non-zero nodes of Re<f(t), e_i>/||f(t)||).
std::vector<double> ortho_coefficients(const SampledFunction& f,
                                       const std::vector<Vec>& family,
                                       const ToleranceConfig& tol = {});

/// theta* = max |arg f(t)| over counted nodes; scalar complex functions
/// with Re f(t) > 0 everywhere (throws InapplicableError otherwise).
double arc_bound(const SampledFunction& f);

/// Rectangle check (the two one-dimensional bounds above); when it holds,
/// the band-form inequality it implies is also evaluated and verified
/// non-negative at every node.
CheckReport rect_check(const SampledFunction& f, double alpha, double beta, double m,
                       double M, const ToleranceConfig& tol = {});

}  // namespace revtri

#endif  // REVTRI_HYPOTHESES_HPP
