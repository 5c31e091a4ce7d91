/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/function.hpp"

#include <algorithm>
#include <cmath>

namespace revtri {

namespace {
constexpr double kUnitTolInternal = 1e-9;
}

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw ArgumentError("grid needs at least two nodes");
  for (double t : nodes_)
    if (!std::isfinite(t)) throw ArgumentError("grid node is not finite");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] > nodes_[i - 1]))
      throw ArgumentError("grid nodes must be strictly increasing (node " +
                          std::to_string(i) + ")");
}

Grid Grid::uniform(double a, double b, std::size_t count) {
  if (count < 2) throw ArgumentError("uniform grid needs at least two nodes");
  if (!(b > a)) throw ArgumentError("uniform grid needs b > a");
  std::vector<double> ts(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(count - 1);
    ts[i] = a * (1.0 - u) + b * u;
  }
  ts.front() = a;
  ts.back() = b;
  return Grid(std::move(ts));
}

Grid Grid::with_node(double t) const {
  if (std::binary_search(nodes_.begin(), nodes_.end(), t)) return *this;
  std::vector<double> ts = nodes_;
  ts.insert(std::upper_bound(ts.begin(), ts.end(), t), t);
  return Grid(std::move(ts));
}

SampledFunction::SampledFunction(Grid grid, std::vector<Vec> values, Kind kind)
    : grid_(std::move(grid)), values_(std::move(values)), kind_(kind) {
  if (values_.size() != grid_.size())
    throw ArgumentError("sample count " + std::to_string(values_.size()) +
                        " does not match grid size " + std::to_string(grid_.size()));
  const std::size_t d = values_.front().dim();
  if (d == 0) throw ArgumentError("samples must have dimension >= 1");
  for (const Vec& v : values_) {
    if (v.dim() != d) throw ArgumentError("samples have inconsistent dimensions");
    v.check_finite();
  }
}

Vec SampledFunction::evaluate(double t) const {
  const auto& ts = grid_.nodes();
  if (t < ts.front() || t > ts.back())
    throw ArgumentError("evaluate: t = " + std::to_string(t) + " outside [" +
                        std::to_string(ts.front()) + ", " + std::to_string(ts.back()) + "]");
  // Index of the subinterval [ts[i], ts[i+1]) containing t; the last
  // subinterval is closed at b.
  auto it = std::upper_bound(ts.begin(), ts.end(), t);
  std::size_t i = (it == ts.begin()) ? 0 : static_cast<std::size_t>(it - ts.begin()) - 1;
  if (i >= ts.size() - 1) i = ts.size() - 2;
  if (kind_ == Kind::Step) return values_[i];
  const double h = ts[i + 1] - ts[i];
  const double lam = (t - ts[i]) / h;
  return values_[i] * Complex(1.0 - lam, 0.0) + values_[i + 1] * Complex(lam, 0.0);
}

namespace {

struct Sampler {
  const Grid& grid;

  SampledFunction operator()(const ConstantFamily& fam) const {
    fam.v.check_finite();
    if (fam.v.dim() == 0) throw ArgumentError("constant family needs dimension >= 1");
    return SampledFunction(grid, std::vector<Vec>(grid.size(), fam.v), Kind::Smooth);
  }

  SampledFunction operator()(const ComplexArcFamily& fam) const {
    if (!std::isfinite(fam.omega) || !std::isfinite(fam.phi0))
      throw ArgumentError("complex_arc parameters must be finite");
    std::vector<Vec> vals;
    vals.reserve(grid.size());
    for (double t : grid.nodes())
      vals.push_back(Vec{std::polar(1.0, fam.omega * t + fam.phi0)});
    return SampledFunction(grid, std::move(vals), Kind::Smooth);
  }

  SampledFunction operator()(const DiskOrbitFamily& fam) const {
    if (!(fam.r >= 0.0) || !std::isfinite(fam.r))
      throw ArgumentError("disk_orbit needs r >= 0");
    if (!std::isfinite(fam.omega)) throw ArgumentError("disk_orbit omega must be finite");
    if (!validate_unit(fam.e, kUnitTolInternal))
      throw ArgumentError("disk_orbit center e must be a unit vector");
    const std::size_t n = fam.e.dim();
    std::vector<Vec> vals;
    vals.reserve(grid.size());
    if (n == 1) {
      for (double t : grid.nodes())
        vals.push_back(Vec{fam.e[0] + fam.r * std::polar(1.0, fam.omega * t)});
      return SampledFunction(grid, std::move(vals), Kind::Smooth);
    }
    // Complete e against the standard basis; u1 is the first completion.
    // In dimension 2 a second complex-orthogonal direction does not exist,
    // so u2 = i u1 (Re<u1, i u1> = 0 keeps ||f - e|| == r exact).
    Vec u1, u2;
    {
      std::vector<Vec> seed{fam.e};
      for (std::size_t axis = 0; axis < n && seed.size() < 3; ++axis) {
        try {
          std::vector<Vec> trial = seed;
          trial.push_back(Vec::unit_axis(n, axis));
          seed = gram_schmidt(trial);
        } catch (const ArgumentError&) {
          // axis parallel to the span so far; try the next one
        }
      }
      if (seed.size() < 2)
        throw ArgumentError("disk_orbit: could not complete e to an orthonormal frame");
      u1 = seed[1];
      u2 = (seed.size() >= 3) ? seed[2] : u1 * Complex(0.0, 1.0);
    }
    for (double t : grid.nodes()) {
      const double c = std::cos(fam.omega * t), s = std::sin(fam.omega * t);
      vals.push_back(fam.e + u1 * Complex(fam.r * c, 0.0) + u2 * Complex(fam.r * s, 0.0));
    }
    return SampledFunction(grid, std::move(vals), Kind::Smooth);
  }

  SampledFunction operator()(const TwoPieceEqualityFamily& fam) const {
    if (!(fam.K >= 1.0) || !std::isfinite(fam.K))
      throw ArgumentError("two_piece_equality needs K >= 1");
    const double mid = 0.5 * (grid.a() + grid.b());
    const Grid g = grid.with_node(mid);
    const double theta = std::acos(1.0 / fam.K);
    const Complex up = std::polar(1.0, theta), down = std::polar(1.0, -theta);
    std::vector<Vec> vals;
    vals.reserve(g.size());
    for (double t : g.nodes()) vals.push_back(Vec{t < mid ? up : down});
    return SampledFunction(g, std::move(vals), Kind::Step);
  }

  SampledFunction operator()(const OrthoMixFamily& fam) const {
    if (fam.c.empty() || fam.c.size() != fam.family.size())
      throw ArgumentError("ortho_mix needs matching, non-empty c and family");
    for (double ci : fam.c)
      if (!(ci >= 0.0) || !std::isfinite(ci))
        throw ArgumentError("ortho_mix coefficients must be >= 0");
    if (!validate_orthonormal(fam.family, kUnitTolInternal))
      throw ArgumentError("ortho_mix family must be orthonormal");
    Vec v(fam.family.front().dim());
    for (std::size_t i = 0; i < fam.c.size(); ++i)
      v += fam.family[i] * Complex(fam.c[i], 0.0);
    return SampledFunction(grid, std::vector<Vec>(grid.size(), v), Kind::Smooth);
  }

  SampledFunction operator()(const PolynomialFamily& fam) const {
    if (fam.coeffs.empty()) throw ArgumentError("polynomial needs at least one coefficient");
    const std::size_t d = fam.coeffs.front().dim();
    for (const Vec& c : fam.coeffs) {
      if (c.dim() != d) throw ArgumentError("polynomial coefficients have mixed dimensions");
      c.check_finite();
    }
    std::vector<Vec> vals;
    vals.reserve(grid.size());
    for (double t : grid.nodes()) {
      Vec acc(d);
      double p = 1.0;
      for (const Vec& c : fam.coeffs) {
        acc += c * Complex(p, 0.0);
        p *= t;
      }
      vals.push_back(acc);
    }
    return SampledFunction(grid, std::move(vals), Kind::Smooth);
  }
};

}  // namespace

SampledFunction sample_family(const FamilySpec& spec, const Grid& grid) {
  return std::visit(Sampler{grid}, spec);
}

SampledFunction from_discrete(const std::vector<Vec>& xs) {
  if (xs.empty()) throw ArgumentError("from_discrete needs at least one vector");
  std::vector<double> ts(xs.size() + 1);
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = static_cast<double>(i);
  std::vector<Vec> vals = xs;
  vals.push_back(xs.back());  // final node carries no integration weight
  return SampledFunction(Grid(std::move(ts)), std::move(vals), Kind::Step);
}

}  // namespace revtri
