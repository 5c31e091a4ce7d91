/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_QUADRATURE_HPP
#define REVTRI_QUADRATURE_HPP

#include <string>
#include <vector>

#include "revtri/function.hpp"

namespace revtri {

enum class RuleKind { Step, Trapezoid, Simpson, GaussLegendre };

/// Quadrature rule selector.  The step rule is the only rule for step
/// functions (and is exact for them); node-based rules (trapezoid, Simpson)
/// and Gauss-Legendre apply to smooth functions only.  Simpson requires an
/// even number of grid subintervals.  Gauss-Legendre evaluates off-node
/// points through piecewise-linear interpolation of the samples, which caps
/// its effective order at 2 unless the grid is dense.
struct QuadratureRule {
  RuleKind kind = RuleKind::Trapezoid;
  int order = 4;    ///< Gauss-Legendre points per panel, 2..10
  int panels = 16;  ///< Gauss-Legendre panel count, >= 1

  static QuadratureRule step() { return {RuleKind::Step, 0, 0}; }
  static QuadratureRule trapezoid() { return {RuleKind::Trapezoid, 0, 0}; }
  static QuadratureRule simpson() { return {RuleKind::Simpson, 0, 0}; }
  static QuadratureRule gauss(int order, int panels) {
    return {RuleKind::GaussLegendre, order, panels};
  }

  void validate() const;
  std::string describe() const;
};

struct VectorIntegral {
  Vec value;
  double err = 0.0;  ///< a-posteriori error estimate (0 for the step rule)
};

struct ScalarIntegral {
  double value = 0.0;
  double err = 0.0;
};

/// Integral of the sampled vector function, coordinate by coordinate.  The
/// error estimate is a Richardson comparison against the grid with alternate
/// nodes dropped (or, for Gauss-Legendre, against half the panel count plus
/// a second-difference bound for the piecewise-linear data model).
VectorIntegral integrate_vector(const SampledFunction& f, const QuadratureRule& rule);

/// Integral of t -> ||f(t)||.  Applies the scalar rule to the node norms
/// directly (interpolating norms, not vectors), so the triangle inequality
/// ||integrate_vector|| <= integrate_norm holds at the discrete level for
/// the non-negative weights used here.  Result is >= 0.
ScalarIntegral integrate_norm(const SampledFunction& f, const QuadratureRule& rule);

struct ConvergenceResult {
  double order = 0.0;  ///< least-squares slope of log(err) vs log(h)
  bool exact = false;  ///< all errors at rounding level; order not meaningful
  std::vector<double> errors;  ///< per-size error against the finest grid
};

/// Measures the empirical convergence order of `rule` on a smooth family by
/// sampling uniform grids of the given node counts on [a, b] and comparing
/// vector integrals against the finest grid (which is excluded from the
/// fit).  Needs at least three sizes, strictly increasing.
ConvergenceResult convergence_order(const FamilySpec& spec, double a, double b,
                                    const QuadratureRule& rule,
                                    const std::vector<int>& sizes);

}  // namespace revtri

#endif  // REVTRI_QUADRATURE_HPP
