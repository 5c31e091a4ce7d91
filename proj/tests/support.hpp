/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_TESTS_SUPPORT_HPP
#define REVTRI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "revtri/function.hpp"
#include "revtri/space.hpp"
#include "revtri/types.hpp"

namespace revtri::test {

using Rng = std::mt19937_64;

/// Complex standard-gaussian vector, normalized to unit length.
inline Vec random_unit(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    std::vector<Complex> c(dim);
    for (auto& x : c) x = Complex(g(rng), g(rng));
    Vec v(std::move(c));
    if (norm(v) > 1e-6) return normalize(v);
  }
}

/// Real-coordinate unit vector.
inline Vec random_real_unit(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    std::vector<Complex> c(dim);
    for (auto& x : c) x = Complex(g(rng), 0.0);
    Vec v(std::move(c));
    if (norm(v) > 1e-6) return normalize(v);
  }
}

/// Random unit direction orthogonal to e (dim 1 falls back to i*e, which has
/// Re<u,e> = 0).
inline Vec random_orthogonal_unit(Rng& rng, const Vec& e) {
  if (e.dim() == 1) return e * Complex(0.0, 1.0);
  for (;;) {
    Vec g = random_unit(rng, e.dim());
    Vec u = g - e * inner(g, e);
    if (norm(u) > 1e-6) return normalize(u);
  }
}

/// Orthonormal family of `count` vectors in dimension dim (count <= dim).
inline std::vector<Vec> random_orthonormal(Rng& rng, std::size_t dim, std::size_t count) {
  for (;;) {
    std::vector<Vec> seed;
    seed.reserve(count);
    for (std::size_t i = 0; i < count; ++i) seed.push_back(random_unit(rng, dim));
    try {
      return gram_schmidt(seed);
    } catch (const ArgumentError&) {
      // vanishing probability; draw again
    }
  }
}

/// Samples strictly inside the disk { x : ||x - e|| <= rho }.
inline std::vector<Vec> disk_samples(Rng& rng, const Vec& e, double rho, std::size_t n) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec dir = random_unit(rng, e.dim());
    out.push_back(e + dir * Complex(0.999 * rho * u01(rng), 0.0));
  }
  return out;
}

/// Samples strictly inside the closed ball with diameter [m e, M e] (the
/// band condition Re<M e - x, x - m e> >= 0).
inline std::vector<Vec> band_samples(Rng& rng, const Vec& e, double m, double M,
                                     std::size_t n) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double radius = 0.5 * (M - m);
  const Vec center = e * Complex(0.5 * (M + m), 0.0);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec dir = random_unit(rng, e.dim());
    out.push_back(center + dir * Complex(0.999 * radius * u01(rng), 0.0));
  }
  return out;
}

/// Equal-norm samples in the cone { x : ||x|| <= K Re<x, e> }: common norm
/// nu in [0.1, 5], angles to e within gamma = arccos(1/K), and the largest
/// angle forced to hit gamma so the minimal K of the sample set is K itself.
inline std::vector<Vec> cone_samples(Rng& rng, const Vec& e, double K, std::size_t n) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double gamma = std::acos(1.0 / K);
  const double nu = 0.1 + 4.9 * u01(rng);
  std::vector<double> phis(n);
  for (auto& p : phis) p = gamma * u01(rng);
  phis[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = gamma;
  std::vector<Vec> out;
  out.reserve(n);
  for (double phi : phis) {
    const Vec u = random_orthogonal_unit(rng, e);
    out.push_back(e * Complex(nu * std::cos(phi), 0.0) + u * Complex(nu * std::sin(phi), 0.0));
  }
  return out;
}

/// Complex scalars in the rectangle [m alpha, M alpha] x [m beta, M beta]
/// (as Re/Im bounds), alpha = cos(psi), beta = sin(psi).
inline std::vector<Vec> rect_samples(Rng& rng, double alpha, double beta, double m,
                                     double M, std::size_t n) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = m * alpha + (M - m) * alpha * u01(rng);
    const double im = m * beta + (M - m) * beta * u01(rng);
    out.push_back(Vec{Complex(re, im)});
  }
  return out;
}

/// Step function on [0, n] whose subintervals carry the given vectors.
inline SampledFunction step_from(const std::vector<Vec>& vs) { return from_discrete(vs); }

}  // namespace revtri::test

#endif  // REVTRI_TESTS_SUPPORT_HPP
