/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_TYPES_HPP
#define REVTRI_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revtri {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument, precondition violation, dimension mismatch, non-finite data.
struct ArgumentError : Error {
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

/// Input file could not be parsed or failed validation.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// File system failure (missing file, unwritable path).
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

/// No admissible parameter exists for the requested hypothesis class
/// (e.g. some node has Re<f,e> <= 0, or the integral vanishes).
struct InapplicableError : Error {
  explicit InapplicableError(const std::string& msg) : Error(msg) {}
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

/// Numeric tolerances used across validation, hypothesis checks and
/// certificate acceptance.  All entries must be strictly positive.
struct ToleranceConfig {
  double unit_tol = 1e-9;      ///< | ||e|| - 1 | allowed for unit vectors
  double ortho_tol = 1e-9;     ///< |<e_i,e_j> - delta_ij| allowed for families
  double margin_tol = 1e-12;   ///< relative slack allowed in pointwise checks
  double cert_abs_tol = 1e-10; ///< absolute slack in certificate acceptance
  double cert_rel_tol = 1e-8;  ///< relative slack in certificate acceptance

  void validate() const {
    if (!(unit_tol > 0) || !(ortho_tol > 0) || !(margin_tol > 0) ||
        !(cert_abs_tol > 0) || !(cert_rel_tol > 0))
      throw ArgumentError("tolerances must be strictly positive");
  }
};

// ---------------------------------------------------------------------------
// Space elements
// ---------------------------------------------------------------------------

/// Element of the complex inner-product space C^n (covers R^n with zero
/// imaginary parts).  Components are validated to be finite on construction.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim, Complex(0.0, 0.0)) {}
  Vec(std::initializer_list<Complex> init) : c_(init) { check_finite(); }
  explicit Vec(std::vector<Complex> coords) : c_(std::move(coords)) { check_finite(); }

  /// Standard basis vector with a 1 in position `axis`.
  static Vec unit_axis(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw ArgumentError("unit_axis: axis out of range");
    Vec v(dim);
    v.c_[axis] = Complex(1.0, 0.0);
    return v;
  }

  std::size_t dim() const { return c_.size(); }
  Complex& operator[](std::size_t i) { return c_[i]; }
  const Complex& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Complex>& coords() const { return c_; }

  Vec& operator+=(const Vec& o) {
    same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    same_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(Complex s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, Complex s) { return a *= s; }
  friend Vec operator*(Complex s, Vec a) { return a *= s; }

  bool operator==(const Vec& o) const { return c_ == o.c_; }

  void check_finite() const {
    for (const auto& x : c_)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw ArgumentError("vector has non-finite component");
  }

 private:
  void same_dim(const Vec& o) const {
    if (c_.size() != o.c_.size())
      throw ArgumentError("dimension mismatch: " + std::to_string(c_.size()) +
                          " vs " + std::to_string(o.c_.size()));
  }

  std::vector<Complex> c_;
};

}  // namespace revtri

#endif  // REVTRI_TYPES_HPP
