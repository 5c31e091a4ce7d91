/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "revtri/quadrature.hpp"
#include "revtri/space.hpp"
#include "support.hpp"

using namespace revtri;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("step rule is exact on discrete data") {
  const SampledFunction f = from_discrete({Vec::unit_axis(2, 0) * Complex(3, 0),
                                           Vec::unit_axis(2, 1) * Complex(4, 0)});
  const VectorIntegral vi = integrate_vector(f, QuadratureRule::step());
  CHECK(norm(vi.value - Vec{Complex(3, 0), Complex(4, 0)}) < 1e-15);
  CHECK(vi.err == 0.0);
  const ScalarIntegral si = integrate_norm(f, QuadratureRule::step());
  CHECK(si.value == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(si.err == 0.0);
  CHECK(norm(vi.value) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("rule and data kinds must match") {
  const SampledFunction step_f = from_discrete({Vec{Complex(1, 0)}});
  CHECK_THROWS_AS(integrate_vector(step_f, QuadratureRule::trapezoid()), ArgumentError);
  const SampledFunction smooth_f = sample_family(ConstantFamily{Vec{Complex(1, 0)}},
                                                 Grid::uniform(0.0, 1.0, 3));
  CHECK_THROWS_AS(integrate_vector(smooth_f, QuadratureRule::step()), ArgumentError);
}

TEST_CASE("simpson requires an even number of subintervals") {
  const SampledFunction f = sample_family(ConstantFamily{Vec{Complex(1, 0)}},
                                          Grid::uniform(0.0, 1.0, 4));
  CHECK_THROWS_AS(integrate_vector(f, QuadratureRule::simpson()), ArgumentError);
  CHECK_THROWS_AS(integrate_norm(f, QuadratureRule::simpson()), ArgumentError);
}

TEST_CASE("gauss parameter validation") {
  const SampledFunction f = sample_family(ConstantFamily{Vec{Complex(1, 0)}},
                                          Grid::uniform(0.0, 1.0, 3));
  CHECK_THROWS_AS(integrate_vector(f, QuadratureRule::gauss(1, 4)), ArgumentError);
  CHECK_THROWS_AS(integrate_vector(f, QuadratureRule::gauss(11, 4)), ArgumentError);
  CHECK_THROWS_AS(integrate_vector(f, QuadratureRule::gauss(4, 0)), ArgumentError);
}

TEST_CASE("trapezoid is exact for linear data, simpson for quadratics") {
  const PolynomialFamily lin{{Vec{Complex(0, 0)}, Vec{Complex(1, 0)}}};
  const SampledFunction fl = sample_family(lin, Grid::uniform(0.0, 1.0, 5));
  CHECK(integrate_vector(fl, QuadratureRule::trapezoid()).value[0].real() ==
        doctest::Approx(0.5).epsilon(1e-15));

  // f(t) = (t, t^2) on [0, 1]: integral (1/2, 1/3)
  const PolynomialFamily quad{{Vec{Complex(0, 0), Complex(0, 0)},
                               Vec{Complex(1, 0), Complex(0, 0)},
                               Vec{Complex(0, 0), Complex(1, 0)}}};
  const SampledFunction fq = sample_family(quad, Grid::uniform(0.0, 1.0, 9));
  const Vec v = integrate_vector(fq, QuadratureRule::simpson()).value;
  CHECK(v[0].real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[1].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("norm integral of the circle orbit matches an independent fine sum") {
  // integral over [0, 2 pi] of |1 + 0.5 e^{it}| dt, computed here with a
  // million-step trapezoid loop as an oracle.
  double oracle = 0.0;
  const std::size_t steps = 1'000'000;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(steps);
    const double val = std::abs(1.0 + 0.5 * std::polar(1.0, t));
    oracle += (i == 0 || i == steps) ? 0.5 * val : val;
  }
  oracle *= 2.0 * kPi / static_cast<double>(steps);

  const DiskOrbitFamily fam{Vec{Complex(1, 0)}, 0.5, 1.0};
  const SampledFunction f = sample_family(fam, Grid::uniform(0.0, 2.0 * kPi, 2049));
  const ScalarIntegral si = integrate_norm(f, QuadratureRule::simpson());
  CHECK(si.value == doctest::Approx(oracle).epsilon(1e-8));
  // the vector integral is 2 pi (the orbit term averages out)
  const VectorIntegral vi = integrate_vector(f, QuadratureRule::simpson());
  CHECK(norm(vi.value - Vec{Complex(2.0 * kPi, 0)}) < 1e-9);
}

TEST_CASE("error estimate tracks the true trapezoid error") {
  // f(t) = e^{it} on [-1, 1]: integral 2 sin(1); leading trapezoid error
  // h^2 sin(1)/6.
  const SampledFunction f = sample_family(ComplexArcFamily{1.0, 0.0},
                                          Grid::uniform(-1.0, 1.0, 33));
  const VectorIntegral vi = integrate_vector(f, QuadratureRule::trapezoid());
  const double actual = norm(vi.value - Vec{Complex(2.0 * std::sin(1.0), 0)});
  CHECK(vi.err > 0.0);
  CHECK(actual < 2.0 * vi.err + 1e-12);
  CHECK(vi.err < 5.0 * actual + 1e-12);
}

TEST_CASE("gauss integral is consistent with its own error estimate") {
  const PolynomialFamily quad{{Vec{Complex(0, 0)}, Vec{Complex(0, 0)}, Vec{Complex(1, 0)}}};
  const SampledFunction f = sample_family(quad, Grid::uniform(0.0, 1.0, 65));
  const VectorIntegral vi = integrate_vector(f, QuadratureRule::gauss(4, 8));
  CHECK(std::abs(vi.value[0].real() - 1.0 / 3.0) <= vi.err + 1e-12);
}

TEST_CASE("measured convergence orders on the unit-circle arc") {
  const ComplexArcFamily fam{1.0, 0.0};
  const std::vector<int> sizes{17, 33, 65, 129};

  const ConvergenceResult tr = convergence_order(fam, -1.0, 1.0,
                                                 QuadratureRule::trapezoid(), sizes);
  CHECK_FALSE(tr.exact);
  REQUIRE(tr.errors.size() == 3);
  CHECK(tr.order == doctest::Approx(2.1963).epsilon(0.01));
  CHECK(tr.order > 1.8);
  CHECK(tr.order < 2.2);

  const ConvergenceResult si = convergence_order(fam, -1.0, 1.0,
                                                 QuadratureRule::simpson(), sizes);
  CHECK_FALSE(si.exact);
  CHECK(si.order > 3.5);
  CHECK(si.order < 4.5);

  // errors against the finest grid decrease monotonically
  for (std::size_t k = 1; k < tr.errors.size(); ++k) CHECK(tr.errors[k] < tr.errors[k - 1]);
}

TEST_CASE("convergence detects exactly integrated families") {
  const PolynomialFamily quad{{Vec{Complex(0, 0)}, Vec{Complex(1, 0)}, Vec{Complex(1, 0)}}};
  const ConvergenceResult r = convergence_order(quad, 0.0, 1.0, QuadratureRule::simpson(),
                                                {3, 5, 9, 17});
  CHECK(r.exact);
  CHECK(r.order == 0.0);
}

TEST_CASE("convergence input validation") {
  const ComplexArcFamily fam{1.0, 0.0};
  const QuadratureRule tz = QuadratureRule::trapezoid();
  CHECK_THROWS_AS(convergence_order(fam, 0.0, 1.0, tz, {17, 33}), ArgumentError);
  CHECK_THROWS_AS(convergence_order(fam, 0.0, 1.0, tz, {17, 17, 33}), ArgumentError);
  CHECK_THROWS_AS(convergence_order(fam, 0.0, 1.0, tz, {1, 3, 5}), ArgumentError);
  CHECK_THROWS_AS(convergence_order(TwoPieceEqualityFamily{2.0}, 0.0, 1.0, tz, {17, 33, 65}),
                  ArgumentError);
}
