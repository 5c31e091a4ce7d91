/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_FUNCTION_HPP
#define REVTRI_FUNCTION_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "revtri/space.hpp"
#include "revtri/types.hpp"

namespace revtri {

/// Strictly increasing grid of sample points; at least two nodes.
class Grid {
 public:
  explicit Grid(std::vector<double> nodes);

  /// Uniform grid with `count` nodes on [a, b].
  static Grid uniform(double a, double b, std::size_t count);

  double a() const { return nodes_.front(); }
  double b() const { return nodes_.back(); }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }

  /// Grid with an extra node at t (no-op if t is already a node).
  Grid with_node(double t) const;

 private:
  std::vector<double> nodes_;
};

enum class Kind { Smooth, Step };

/// A vector-valued function known through samples on a grid.  Kind `Step`
/// means right-open constant subintervals [t_i, t_{i+1}) taking values[i];
/// the final node's value is not used by integration.  Kind `Smooth` means
/// the nodes sample a continuous function (interpolated linearly between
/// nodes when an off-node value is needed).
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<Vec> values, Kind kind);

  const Grid& grid() const { return grid_; }
  Kind kind() const { return kind_; }
  std::size_t dim() const { return values_.front().dim(); }
  std::size_t size() const { return values_.size(); }
  const Vec& value(std::size_t i) const { return values_[i]; }
  const std::vector<Vec>& values() const { return values_; }

  /// Number of nodes that carry data: step functions exclude the final node.
  std::size_t counted_nodes() const {
    return kind_ == Kind::Step ? grid_.size() - 1 : grid_.size();
  }

  /// Value at t in [a, b]: containing-subinterval value for step functions
  /// (last subinterval closed at b), linear interpolation for smooth ones.
  Vec evaluate(double t) const;

 private:
  Grid grid_;
  std::vector<Vec> values_;
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Closed-form sample families
// ---------------------------------------------------------------------------

/// f(t) = v.
struct ConstantFamily {
  Vec v;
};

/// f(t) = exp(i (omega t + phi0)) in C^1.
struct ComplexArcFamily {
  double omega = 1.0;
  double phi0 = 0.0;
};

/// f(t) = e + r (cos(omega t) u1 + sin(omega t) u2) with ||f(t) - e|| == r.
/// For dim >= 3, u1 and u2 are the first two Gram-Schmidt completions of e
/// against the standard basis; for dim 2, u2 = i u1; for dim 1 the family is
/// f(t) = e + r exp(i omega t).
struct DiskOrbitFamily {
  Vec e;
  double r = 0.0;
  double omega = 1.0;
};

/// Step function taking exp(i theta) on the first half of [a, b] and
/// exp(-i theta) on the second, theta = arccos(1/K).  Attains equality in
/// the K-cone reverse inequality.
struct TwoPieceEqualityFamily {
  double K = 1.0;
};

/// f(t) = sum_i c_i E_i for an orthonormal family E and c_i >= 0.
struct OrthoMixFamily {
  std::vector<double> c;
  std::vector<Vec> family;
};

/// f(t) = sum_j coeffs[j] t^j.
struct PolynomialFamily {
  std::vector<Vec> coeffs;
};

using FamilySpec = std::variant<ConstantFamily, ComplexArcFamily, DiskOrbitFamily,
                                TwoPieceEqualityFamily, OrthoMixFamily,
                                PolynomialFamily>;

/// Samples a family on the grid.  All families yield Kind::Smooth except
/// TwoPieceEqualityFamily, which yields Kind::Step and guarantees a node at
/// the interval midpoint (inserting one if the grid lacks it, so that step
/// integration stays exact).  Family parameters are validated.
SampledFunction sample_family(const FamilySpec& spec, const Grid& grid);

/// Step function on [0, count] with unit subintervals carrying the given
/// vectors; sums of the list become exact integrals under the step rule.
SampledFunction from_discrete(const std::vector<Vec>& xs);

}  // namespace revtri

#endif  // REVTRI_FUNCTION_HPP
