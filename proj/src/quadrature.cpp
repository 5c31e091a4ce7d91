/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace revtri {

void QuadratureRule::validate() const {
  if (kind == RuleKind::GaussLegendre) {
    if (order < 2 || order > 10)
      throw ArgumentError("gauss order must be in 2..10, got " + std::to_string(order));
    if (panels < 1)
      throw ArgumentError("gauss panels must be >= 1, got " + std::to_string(panels));
  }
}

std::string QuadratureRule::describe() const {
  switch (kind) {
    case RuleKind::Step: return "step";
    case RuleKind::Trapezoid: return "trapezoid";
    case RuleKind::Simpson: return "simpson";
    case RuleKind::GaussLegendre:
      return "gauss(order=" + std::to_string(order) + ",panels=" + std::to_string(panels) + ")";
  }
  return "?";
}

namespace {

void check_compat(const SampledFunction& f, const QuadratureRule& rule) {
  rule.validate();
  if (f.kind() == Kind::Step && rule.kind != RuleKind::Step)
    throw ArgumentError("step functions require the step rule, got " + rule.describe());
  if (f.kind() == Kind::Smooth && rule.kind == RuleKind::Step)
    throw ArgumentError("the step rule applies to step functions only");
  if (rule.kind == RuleKind::Simpson && (f.grid().size() - 1) % 2 != 0)
    throw ArgumentError("simpson needs an even number of subintervals, got " +
                        std::to_string(f.grid().size() - 1));
}

// Node weights for the node-based rules, over an arbitrary node subset
// (given as t-values with matching sample count).
std::vector<double> node_weights(const std::vector<double>& ts, RuleKind kind) {
  const std::size_t n = ts.size();
  std::vector<double> w(n, 0.0);
  switch (kind) {
    case RuleKind::Step:
      for (std::size_t i = 0; i + 1 < n; ++i) w[i] = ts[i + 1] - ts[i];
      break;
    case RuleKind::Trapezoid:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = ts[i + 1] - ts[i];
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
      }
      break;
    case RuleKind::Simpson: {
      // Quadratic fit over interval pairs; handles unequal spacing.  A
      // trailing odd interval (possible only on coarsened grids) falls back
      // to the trapezoid weight.
      std::size_t i = 0;
      while (i + 2 < n) {
        const double h0 = ts[i + 1] - ts[i], h1 = ts[i + 2] - ts[i + 1];
        const double s = h0 + h1;
        w[i] += s / 6.0 * (2.0 - h1 / h0);
        w[i + 1] += s / 6.0 * (s * s / (h0 * h1));
        w[i + 2] += s / 6.0 * (2.0 - h0 / h1);
        i += 2;
      }
      if (i + 1 < n) {
        const double h = ts[i + 1] - ts[i];
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
      }
      break;
    }
    case RuleKind::GaussLegendre:
      throw ArgumentError("gauss has no node weights");
  }
  return w;
}

// Gauss-Legendre abscissas/weights on [-1, 1] by Newton iteration on P_n.
void gauss_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double z = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[k] = -z;
    x[n - 1 - k] = z;
    w[k] = w[n - 1 - k] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// Richardson coarsening: every other node, always keeping the last.
std::vector<std::size_t> coarse_indices(std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += 2) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

double richardson_divisor(RuleKind kind) {
  return kind == RuleKind::Simpson ? 15.0 : 3.0;  // 2^order - 1
}

Vec weighted_sum(const std::vector<Vec>& vals, const std::vector<std::size_t>& idx,
                 const std::vector<double>& w) {
  Vec acc(vals.front().dim());
  for (std::size_t k = 0; k < idx.size(); ++k) acc += vals[idx[k]] * Complex(w[k], 0.0);
  return acc;
}

double weighted_sum(const std::vector<double>& vals, const std::vector<std::size_t>& idx,
                    const std::vector<double>& w) {
  double acc = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) acc += vals[idx[k]] * w[k];
  return acc;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

std::vector<double> pick(const std::vector<double>& ts, const std::vector<std::size_t>& idx) {
  std::vector<double> out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = ts[idx[k]];
  return out;
}

// Piecewise-linear interpolation error bound from second differences:
// integral of the interpolation error on one interval is about |f''| h^3 / 12.
double interp_error_bound(const std::vector<double>& ts, const std::vector<double>& mags) {
  const std::size_t n = ts.size();
  if (n < 3) return 0.0;
  std::vector<double> d2(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = ts[i] - ts[i - 1], h1 = ts[i + 1] - ts[i];
    d2[i] = std::abs(2.0 * ((mags[i + 1] - mags[i]) / h1 - (mags[i] - mags[i - 1]) / h0) /
                     (h0 + h1));
  }
  d2[0] = d2[1];
  d2[n - 1] = d2[n - 2];
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = ts[i + 1] - ts[i];
    acc += std::max(d2[i], d2[i + 1]) * h * h * h / 12.0;
  }
  return acc;
}

// Gauss-Legendre over [a, b] in `panels` equal panels of a scalar function
// given through a callable.
template <class F>
double gauss_panels_scalar(double a, double b, int order, int panels, F&& eval) {
  std::vector<double> gx, gw;
  gauss_nodes(order, gx, gw);
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * p / panels;
    const double hi = a + (b - a) * (p + 1) / panels;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int k = 0; k < order; ++k) {
      double t = mid + half * gx[k];
      t = std::clamp(t, a, b);
      acc += half * gw[k] * eval(t);
    }
  }
  return acc;
}

template <class F>
Vec gauss_panels_vector(double a, double b, int order, int panels, std::size_t dim, F&& eval) {
  std::vector<double> gx, gw;
  gauss_nodes(order, gx, gw);
  Vec acc(dim);
  for (int p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * p / panels;
    const double hi = a + (b - a) * (p + 1) / panels;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int k = 0; k < order; ++k) {
      double t = mid + half * gx[k];
      t = std::clamp(t, a, b);
      acc += eval(t) * Complex(half * gw[k], 0.0);
    }
  }
  return acc;
}

}  // namespace

VectorIntegral integrate_vector(const SampledFunction& f, const QuadratureRule& rule) {
  check_compat(f, rule);
  const auto& ts = f.grid().nodes();
  const std::size_t n = ts.size();

  if (rule.kind == RuleKind::GaussLegendre) {
    auto eval = [&](double t) { return f.evaluate(t); };
    const Vec full = gauss_panels_vector(f.grid().a(), f.grid().b(), rule.order, rule.panels,
                                         f.dim(), eval);
    const int half_panels = std::max(1, rule.panels / 2);
    const Vec half = gauss_panels_vector(f.grid().a(), f.grid().b(), rule.order, half_panels,
                                         f.dim(), eval);
    // The panel comparison cannot see the piecewise-linear data model, so a
    // second-difference bound for the interpolation error is added.
    double interp = 0.0;
    for (std::size_t c = 0; c < f.dim(); ++c) {
      std::vector<double> re(n), im(n);
      for (std::size_t i = 0; i < n; ++i) {
        re[i] = f.value(i)[c].real();
        im[i] = f.value(i)[c].imag();
      }
      interp += interp_error_bound(ts, re) + interp_error_bound(ts, im);
    }
    return {full, norm(full - half) + interp};
  }

  const auto idx_full = all_indices(n);
  const auto w_full = node_weights(ts, rule.kind);
  const Vec full = weighted_sum(f.values(), idx_full, w_full);
  if (rule.kind == RuleKind::Step || n < 3) return {full, 0.0};

  const auto idx_c = coarse_indices(n);
  const auto w_c = node_weights(pick(ts, idx_c), rule.kind);
  const Vec coarse = weighted_sum(f.values(), idx_c, w_c);
  return {full, norm(full - coarse) / richardson_divisor(rule.kind)};
}

ScalarIntegral integrate_norm(const SampledFunction& f, const QuadratureRule& rule) {
  check_compat(f, rule);
  const auto& ts = f.grid().nodes();
  const std::size_t n = ts.size();
  std::vector<double> mags(n);
  for (std::size_t i = 0; i < n; ++i) mags[i] = norm(f.value(i));

  if (rule.kind == RuleKind::GaussLegendre) {
    // Interpolate node norms directly (not norms of interpolated vectors).
    auto eval = [&](double t) {
      auto it = std::upper_bound(ts.begin(), ts.end(), t);
      std::size_t i = (it == ts.begin()) ? 0 : static_cast<std::size_t>(it - ts.begin()) - 1;
      if (i >= n - 1) i = n - 2;
      const double lam = (t - ts[i]) / (ts[i + 1] - ts[i]);
      return (1.0 - lam) * mags[i] + lam * mags[i + 1];
    };
    const double full =
        gauss_panels_scalar(f.grid().a(), f.grid().b(), rule.order, rule.panels, eval);
    const int half_panels = std::max(1, rule.panels / 2);
    const double half =
        gauss_panels_scalar(f.grid().a(), f.grid().b(), rule.order, half_panels, eval);
    return {full, std::abs(full - half) + interp_error_bound(ts, mags)};
  }

  const auto idx_full = all_indices(n);
  const auto w_full = node_weights(ts, rule.kind);
  const double full = weighted_sum(mags, idx_full, w_full);
  if (rule.kind == RuleKind::Step || n < 3) return {full, 0.0};

  const auto idx_c = coarse_indices(n);
  const auto w_c = node_weights(pick(ts, idx_c), rule.kind);
  const double coarse = weighted_sum(mags, idx_c, w_c);
  return {full, std::abs(full - coarse) / richardson_divisor(rule.kind)};
}

ConvergenceResult convergence_order(const FamilySpec& spec, double a, double b,
                                    const QuadratureRule& rule,
                                    const std::vector<int>& sizes) {
  if (sizes.size() < 3)
    throw ArgumentError("convergence_order needs at least three grid sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2) throw ArgumentError("grid sizes must be >= 2");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw ArgumentError("grid sizes must be strictly increasing");
  }
  if (std::holds_alternative<TwoPieceEqualityFamily>(spec))
    throw ArgumentError("convergence_order needs a smooth family");

  std::vector<Vec> results;
  results.reserve(sizes.size());
  for (int s : sizes) {
    const SampledFunction f =
        sample_family(spec, Grid::uniform(a, b, static_cast<std::size_t>(s)));
    results.push_back(integrate_vector(f, rule).value);
  }

  const Vec& ref = results.back();
  const double scale = std::max(1.0, norm(ref));
  ConvergenceResult out;
  bool all_tiny = true;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    const double err = norm(results[k] - ref);
    out.errors.push_back(err);
    if (err > 1e-13 * scale) all_tiny = false;
  }
  if (all_tiny) {
    out.exact = true;
    out.order = 0.0;
    return out;
  }

  // Least-squares slope of log(err) vs log(h); the finest grid is the
  // reference and does not enter the fit.
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    const double h = (b - a) / (sizes[k] - 1);
    xs.push_back(std::log(h));
    ys.push_back(std::log(std::max(out.errors[k], 1e-300)));
  }
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0, den = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    num += (xs[k] - mx) * (ys[k] - my);
    den += (xs[k] - mx) * (xs[k] - mx);
  }
  out.order = num / den;
  return out;
}

}  // namespace revtri
