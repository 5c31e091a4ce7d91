/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_CERTIFICATES_HPP
#define REVTRI_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "revtri/hypotheses.hpp"
#include "revtri/quadrature.hpp"

namespace revtri {

/// The certified statement, identified by its source result.
enum class TheoremId {
  T2_1,         ///< cone condition, factor 1/K
  C2_2,         ///< disk condition, factor sqrt(1 - rho^2)
  C2_3,         ///< band condition, factor 2 sqrt(mM)/(M + m)
  T3_1,         ///< orthonormal cone family, factor sqrt(sum k_i^2)
  C3_2,         ///< orthonormal disk family, k_i = sqrt(1 - rho_i^2)
  C3_3,         ///< orthonormal band family, k_i = 2 sqrt(m_i M_i)/(m_i + M_i)
  P4_1,         ///< complex cone condition
  Karamata,     ///< |arg f| <= theta, factor cos(theta)
  P4_3,         ///< complex disk condition
  P4_4,         ///< complex band / rectangle condition
  DiazMetcalf,  ///< discrete finite-sum form, factor r
};

/// Canonical lowercase token ("t21", "karamata", ...), as used by the CLI
/// and in reports.
const char* theorem_token(TheoremId id);

/// Parses a theorem token; throws ArgumentError on unknown names.
TheoremId theorem_from_token(const std::string& token);

/// Certificate refused: the pointwise hypothesis failed.  Carries the
/// failing check so callers can report the worst node.
struct HypothesisError : Error {
  HypothesisError(const std::string& msg, CheckReport rep)
      : Error(msg), report(std::move(rep)) {}
  CheckReport report;
};

/// Additive restatement of the band result: lhs - rhs <= c * rhs.  The
/// certified coefficient is (sqrt(M)-sqrt(m))^2 / (2 sqrt(mM)); the smaller
/// printed variant (sqrt(M)-sqrt(m))^2 / (M+m) fails on exact equality
/// instances whenever m != M and is carried as a diagnostic only.
struct AdditiveForm {
  double coefficient_corrected = 0.0;
  double coefficient_printed = 0.0;
  double lhs_minus_rhs = 0.0;
  double bound_corrected = 0.0;
  double bound_printed = 0.0;
  bool printed_holds = false;
};

/// A numerically certified reverse triangle inequality
///   factor * integral ||f||  <=  || integral f ||.
struct Certificate {
  TheoremId theorem = TheoremId::T2_1;
  double factor = 0.0;             ///< in [0, 1]
  double lhs = 0.0;                ///< integral of ||f||
  double rhs = 0.0;                ///< norm of the vector integral
  double slack = 0.0;              ///< rhs - factor * lhs
  double tightness = 0.0;          ///< factor * lhs / rhs
  double equality_residual = 0.0;  ///< distance from the equality case / rhs
  double quad_err = 0.0;           ///< combined quadrature error estimate
  bool holds = false;
  CheckReport hypothesis;
  std::optional<AdditiveForm> additive;  ///< band results only
};

// --- single-direction certificates ----------------------------------------

Certificate certify_unit_vector(const SampledFunction& f, const Vec& e, double K,
                                const QuadratureRule& rule,
                                const ToleranceConfig& tol = {});

Certificate certify_disk(const SampledFunction& f, const Vec& e, double rho,
                         const QuadratureRule& rule, const ToleranceConfig& tol = {});

Certificate certify_band(const SampledFunction& f, const Vec& e, double m, double M,
                         const QuadratureRule& rule, const ToleranceConfig& tol = {});

// --- orthonormal-family certificates --------------------------------------

Certificate certify_ortho(const SampledFunction& f, const std::vector<Vec>& family,
                          const std::vector<double>& k, const QuadratureRule& rule,
                          const ToleranceConfig& tol = {});

Certificate certify_ortho_disk(const SampledFunction& f, const std::vector<Vec>& family,
                               const std::vector<double>& rho, const QuadratureRule& rule,
                               const ToleranceConfig& tol = {});

Certificate certify_ortho_band(const SampledFunction& f, const std::vector<Vec>& family,
                               const std::vector<double>& m, const std::vector<double>& M,
                               const QuadratureRule& rule, const ToleranceConfig& tol = {});

// --- complex scalar certificates ------------------------------------------

/// Parameter sets accepted for scalar complex functions.  UnitK, Disk and
/// Band use e as a complex unit (alpha + i beta); ComplexArg certifies the
/// Karamata angle form with e = 1; ComplexRect verifies the rectangle
/// bounds first and then certifies through the band form.
using ComplexParams = std::variant<UnitKParams, DiskParams, BandParams, ComplexArgParams,
                                   ComplexRectParams>;

Certificate certify_complex(const SampledFunction& f, const ComplexParams& params,
                            const QuadratureRule& rule, const ToleranceConfig& tol = {});

// --- discrete finite sums -------------------------------------------------

/// Discrete form over explicit vectors: r * sum ||x_i|| <= || sum x_i ||
/// whenever r <= Re<x_i, e>/||x_i|| for every non-zero x_i.  Computed
/// through from_discrete and the exact step rule.
Certificate certify_discrete(const std::vector<Vec>& xs, const Vec& e, double r,
                             const ToleranceConfig& tol = {});

// --- search and auto mode -------------------------------------------------

struct DirectionSearchResult {
  Vec e;
  Certificate certificate;
};

/// Deterministic search for a unit direction maximizing the cone factor
/// 1/K*.  Candidates: the normalized vector integral and the normalized
/// mean of normalized samples; for dim <= 3 a projected coordinate-descent
/// refinement (step 1e-2 halved to 1e-6) polishes the winner.
DirectionSearchResult direction_search(const SampledFunction& f, const QuadratureRule& rule,
                                       const ToleranceConfig& tol = {});

/// One row of an auto-certification: either a certificate or an explicit
/// reason why the theorem's hypothesis class is inapplicable to the data.
struct AutoEntry {
  TheoremId theorem = TheoremId::T2_1;
  std::optional<Certificate> certificate;
  std::string reason;  ///< set when inapplicable
  std::vector<std::pair<std::string, double>> params;  ///< estimated parameters
  bool applicable() const { return certificate.has_value(); }
};

/// Runs the estimators against e (default: the direction_search winner) and
/// emits one entry per theorem -- T2_1, C2_2, C2_3, and Karamata for scalar
/// complex data -- sorted by factor descending, inapplicable entries last.
std::vector<AutoEntry> auto_certify(const SampledFunction& f, const std::optional<Vec>& e,
                                    const QuadratureRule& rule,
                                    const ToleranceConfig& tol = {});

}  // namespace revtri

#endif  // REVTRI_CERTIFICATES_HPP
