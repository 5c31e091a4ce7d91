/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/space.hpp"

#include <cmath>

namespace revtri {

Complex inner(const Vec& x, const Vec& y) {
  if (x.dim() != y.dim())
    throw ArgumentError("inner: dimension mismatch: " + std::to_string(x.dim()) +
                        " vs " + std::to_string(y.dim()));
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double norm(const Vec& x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) acc += std::norm(x[i]);
  return std::sqrt(acc);
}

bool validate_unit(const Vec& e, double tol) {
  return std::abs(norm(e) - 1.0) <= tol;
}

bool validate_orthonormal(const std::vector<Vec>& family, double tol) {
  if (family.empty()) return false;
  const std::size_t n = family.front().dim();
  if (family.size() > n) return false;  // cannot be orthonormal
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = inner(family[i], family[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g.real() - target) > tol || std::abs(g.imag()) > tol)
        return false;
    }
  }
  return true;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors) {
  std::vector<Vec> out;
  out.reserve(vectors.size());
  for (const Vec& v : vectors) {
    const double input_norm = norm(v);
    Vec u = v;
    // Modified Gram-Schmidt, then one re-orthogonalization pass for stability.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& e : out) u -= e * inner(u, e);
    const double res = norm(u);
    if (res <= 1e-12 * input_norm || res == 0.0)
      throw ArgumentError("gram_schmidt: rank-deficient input (vector " +
                          std::to_string(out.size()) + ")");
    out.push_back(u * Complex(1.0 / res, 0.0));
  }
  return out;
}

std::pair<bool, bool> ball_quadrant_equiv(const Vec& x, const Vec& z, const Vec& Z) {
  const bool quad = inner(Z - x, x - z).real() >= 0.0;
  const Vec mid = (z + Z) * Complex(0.5, 0.0);
  const bool ball = norm(x - mid) <= 0.5 * norm(Z - z);
  return {quad, ball};
}

Vec normalize(const Vec& x) {
  const double n = norm(x);
  if (n == 0.0) throw ArgumentError("normalize: zero vector");
  return x * Complex(1.0 / n, 0.0);
}

}  // namespace revtri
