/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace revtri {

namespace {

void require_unit(const Vec& e, double tol, const char* who) {
  if (!validate_unit(e, tol))
    throw ArgumentError(std::string(who) + ": e must be a unit vector");
}

void require_family(const std::vector<Vec>& family, std::size_t expected, double tol,
                    const char* who) {
  if (family.empty()) throw ArgumentError(std::string(who) + ": empty family");
  if (!validate_orthonormal(family, tol))
    throw ArgumentError(std::string(who) + ": family must be orthonormal");
  if (expected != 0 && family.size() != expected)
    throw ArgumentError(std::string(who) + ": parameter count does not match family size");
}

void require_dim1(const SampledFunction& f, const char* who) {
  if (f.dim() != 1)
    throw ArgumentError(std::string(who) + ": needs a scalar complex function (dim 1)");
}

// Runs a raw-margin functional over the counted nodes and assembles the
// normalized report.
CheckReport run_check(const SampledFunction& f, const ToleranceConfig& tol,
                      const std::function<double(const Vec&)>& raw_margin) {
  CheckReport rep;
  const std::size_t count = f.counted_nodes();
  rep.per_node_margins.reserve(count);
  bool first = true;
  for (std::size_t i = 0; i < count; ++i) {
    const Vec& v = f.value(i);
    const double margin = raw_margin(v) / std::max(1.0, norm(v));
    rep.per_node_margins.push_back(margin);
    if (first || margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_node = f.grid()[i];
      first = false;
    }
  }
  rep.holds = rep.worst_margin >= -tol.margin_tol;
  return rep;
}

double band_raw_margin(const Vec& v, const Vec& e, double m, double M) {
  // Quadrant form Re<Me - f, f - me> and ball form, evaluated independently.
  const Vec Me = e * Complex(M, 0.0);
  const Vec me = e * Complex(m, 0.0);
  const double quad = inner(Me - v, v - me).real();
  const double ball = 0.5 * (M - m) - norm(v - e * Complex(0.5 * (M + m), 0.0));
  return std::min(quad, ball);
}

void require_band_range(double m, double M, const char* who) {
  if (!(m > 0.0) || !(M >= m) || !std::isfinite(m) || !std::isfinite(M))
    throw ArgumentError(std::string(who) + ": needs 0 < m <= M");
}

struct Checker {
  const SampledFunction& f;
  const ToleranceConfig& tol;

  CheckReport operator()(const UnitKParams& p) const {
    require_unit(p.e, tol.unit_tol, "unit_k");
    if (!(p.K >= 1.0) || !std::isfinite(p.K)) throw ArgumentError("unit_k: needs K >= 1");
    return run_check(f, tol, [&](const Vec& v) {
      return p.K * inner(v, p.e).real() - norm(v);
    });
  }

  CheckReport operator()(const DiskParams& p) const {
    require_unit(p.e, tol.unit_tol, "disk");
    if (!(p.rho >= 0.0) || !(p.rho < 1.0))
      throw ArgumentError("disk: needs rho in [0, 1)");
    return run_check(f, tol, [&](const Vec& v) { return p.rho - norm(v - p.e); });
  }

  CheckReport operator()(const BandParams& p) const {
    require_unit(p.e, tol.unit_tol, "band");
    require_band_range(p.m, p.M, "band");
    return run_check(f, tol, [&](const Vec& v) {
      return band_raw_margin(v, p.e, p.m, p.M);
    });
  }

  CheckReport operator()(const OrthoKParams& p) const {
    require_family(p.family, p.k.size(), tol.ortho_tol, "ortho_k");
    for (double ki : p.k)
      if (!(ki >= 0.0) || !std::isfinite(ki))
        throw ArgumentError("ortho_k: needs k_i >= 0");
    return run_check(f, tol, [&](const Vec& v) {
      double worst = 0.0;
      bool first = true;
      const double nv = norm(v);
      for (std::size_t i = 0; i < p.family.size(); ++i) {
        const double margin = inner(v, p.family[i]).real() - p.k[i] * nv;
        if (first || margin < worst) {
          worst = margin;
          first = false;
        }
      }
      return worst;
    });
  }

  CheckReport operator()(const OrthoDiskParams& p) const {
    require_family(p.family, p.rho.size(), tol.ortho_tol, "ortho_disk");
    for (double r : p.rho)
      if (!(r >= 0.0) || !(r < 1.0))
        throw ArgumentError("ortho_disk: needs rho_i in [0, 1)");
    return run_check(f, tol, [&](const Vec& v) {
      double worst = 0.0;
      bool first = true;
      for (std::size_t i = 0; i < p.family.size(); ++i) {
        const double margin = p.rho[i] - norm(v - p.family[i]);
        if (first || margin < worst) {
          worst = margin;
          first = false;
        }
      }
      return worst;
    });
  }

  CheckReport operator()(const OrthoBandParams& p) const {
    require_family(p.family, p.m.size(), tol.ortho_tol, "ortho_band");
    if (p.M.size() != p.m.size())
      throw ArgumentError("ortho_band: m and M lists must have equal length");
    for (std::size_t i = 0; i < p.m.size(); ++i)
      require_band_range(p.m[i], p.M[i], "ortho_band");
    return run_check(f, tol, [&](const Vec& v) {
      double worst = 0.0;
      bool first = true;
      for (std::size_t i = 0; i < p.family.size(); ++i) {
        const double margin = band_raw_margin(v, p.family[i], p.m[i], p.M[i]);
        if (first || margin < worst) {
          worst = margin;
          first = false;
        }
      }
      return worst;
    });
  }

  CheckReport operator()(const ComplexArgParams& p) const {
    require_dim1(f, "complex_arg");
    if (!(p.theta >= 0.0) || !(p.theta < std::acos(-1.0) / 2.0))
      throw ArgumentError("complex_arg: needs theta in [0, pi/2)");
    return run_check(f, tol, [&](const Vec& v) {
      const Complex z = v[0];
      if (z == Complex(0.0, 0.0)) return p.theta;  // zero values trivially inside
      return p.theta - std::abs(std::atan2(z.imag(), z.real()));
    });
  }

  CheckReport operator()(const ComplexRectParams& p) const {
    require_dim1(f, "complex_rect");
    if (std::abs(p.alpha * p.alpha + p.beta * p.beta - 1.0) > tol.unit_tol)
      throw ArgumentError("complex_rect: needs alpha^2 + beta^2 = 1");
    require_band_range(p.m, p.M, "complex_rect");
    return run_check(f, tol, [&](const Vec& v) {
      const double re = v[0].real(), im = v[0].imag();
      const double margins[4] = {re - p.m * p.alpha, p.M * p.alpha - re,
                                 im - p.m * p.beta, p.M * p.beta - im};
      return *std::min_element(margins, margins + 4);
    });
  }
};

}  // namespace

CheckReport check(const SampledFunction& f, const HypothesisParams& params,
                  const ToleranceConfig& tol) {
  tol.validate();
  return std::visit(Checker{f, tol}, params);
}

double minimal_k(const SampledFunction& f, const Vec& e, const ToleranceConfig& tol) {
  tol.validate();
  require_unit(e, tol.unit_tol, "minimal_k");
  double best = 1.0;
  for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
    const Vec& v = f.value(i);
    const double nv = norm(v);
    if (nv == 0.0) continue;  // zero values satisfy the cone condition trivially
    const double b = inner(v, e).real();
    if (b <= 0.0)
      throw InapplicableError("no finite K: Re<f(t), e> <= 0 at node t = " +
                              std::to_string(f.grid()[i]));
    best = std::max(best, nv / b);  // ratios below 1 are rounding; clamp up
  }
  return best;
}

double minimal_rho(const SampledFunction& f, const Vec& e, const ToleranceConfig& tol) {
  tol.validate();
  require_unit(e, tol.unit_tol, "minimal_rho");
  double best = 0.0;
  for (std::size_t i = 0; i < f.counted_nodes(); ++i)
    best = std::max(best, norm(f.value(i) - e));
  return best;
}

BandFit band_fit(const SampledFunction& f, const Vec& e, const ToleranceConfig& tol) {
  tol.validate();
  require_unit(e, tol.unit_tol, "band_fit");

  std::vector<double> a, b;  // a_t = ||f||^2, b_t = Re<f, e>
  a.reserve(f.counted_nodes());
  b.reserve(f.counted_nodes());
  for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
    const Vec& v = f.value(i);
    const double bt = inner(v, e).real();
    if (bt <= 0.0)
      throw InapplicableError("band infeasible: Re<f(t), e> <= 0 at node t = " +
                              std::to_string(f.grid()[i]));
    a.push_back(norm(v) * norm(v));
    b.push_back(bt);
  }

  double sigma = 0.0;  // smallest s with a non-empty feasible p-range
  for (std::size_t i = 0; i < a.size(); ++i) sigma = std::max(sigma, a[i] / b[i]);

  const auto p_of_s = [&](double s) {
    double g = s * b[0] - a[0];
    for (std::size_t i = 1; i < a.size(); ++i) g = std::min(g, s * b[i] - a[i]);
    return std::min(0.25 * s * s, g);
  };
  const auto objective = [&](double s) {
    const double p = p_of_s(s);
    return p > 0.0 ? 2.0 * std::sqrt(p) / s : 0.0;
  };

  // Golden-section search; every single-node ratio 4(s b - a)/s^2 peaks at
  // s = 2a/b <= 2 sigma, so the quasi-concave minimum over nodes attains
  // its maximum inside [sigma, 2 sigma].
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = sigma * (1.0 + 1e-14), hi = 2.0 * sigma * (1.0 + 1e-14);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while ((hi - lo) > 1e-10 * hi) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(x1);
    }
  }
  const double s = 0.5 * (lo + hi);
  const double p = p_of_s(s);
  if (!(p > 0.0)) throw InapplicableError("band infeasible: no positive product mM");

  const double disc = std::sqrt(std::max(0.0, 0.25 * s * s - p));
  BandFit fit;
  fit.m = 0.5 * s - disc;
  fit.M = 0.5 * s + disc;
  fit.factor = 2.0 * std::sqrt(p) / s;
  return fit;
}

std::vector<double> ortho_coefficients(const SampledFunction& f,
                                       const std::vector<Vec>& family,
                                       const ToleranceConfig& tol) {
  tol.validate();
  require_family(family, 0, tol.ortho_tol, "ortho_coefficients");
  std::vector<double> k(family.size(), 0.0);
  for (std::size_t j = 0; j < family.size(); ++j) {
    double worst = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
      const Vec& v = f.value(i);
      const double nv = norm(v);
      if (nv == 0.0) continue;
      const double ratio = inner(v, family[j]).real() / nv;
      if (first || ratio < worst) {
        worst = ratio;
        first = false;
      }
    }
    k[j] = first ? 0.0 : std::max(0.0, worst);
  }
  return k;
}

double arc_bound(const SampledFunction& f) {
  require_dim1(f, "arc_bound");
  double best = 0.0;
  for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
    const Complex z = f.value(i)[0];
    if (!(z.real() > 0.0))
      throw InapplicableError("arc_bound: Re f(t) <= 0 at node t = " +
                              std::to_string(f.grid()[i]));
    best = std::max(best, std::abs(std::atan2(z.imag(), z.real())));
  }
  return best;
}

CheckReport rect_check(const SampledFunction& f, double alpha, double beta, double m,
                       double M, const ToleranceConfig& tol) {
  const CheckReport rep =
      check(f, ComplexRectParams{alpha, beta, m, M}, tol);
  if (rep.holds) {
    // The rectangle implies the band-form inequality through the identity
    // Re[(A - z)(conj z - conj a)] = (A_re - z_re)(z_re - a_re)
    //                              + (A_im - z_im)(z_im - a_im);
    // verify non-negativity node by node as a consistency assertion.
    for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
      const Complex z = f.value(i)[0];
      const double expand = (M * alpha - z.real()) * (z.real() - m * alpha) +
                            (M * beta - z.imag()) * (z.imag() - m * beta);
      const double scale = std::max(1.0, std::norm(z));
      if (expand < -tol.margin_tol * scale)
        throw Error("rect_check: rectangle holds but implied band expansion is negative");
    }
  }
  return rep;
}

}  // namespace revtri
