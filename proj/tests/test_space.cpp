/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "revtri/space.hpp"
#include "support.hpp"

using namespace revtri;

TEST_CASE("inner product matches a hand computation") {
  const Vec x{Complex(1, 1), Complex(2, 0)};
  const Vec y{Complex(0, 1), Complex(1, 0)};
  // (1+i) conj(i) + 2 * 1 = (1+i)(-i) + 2 = 3 - i
  const Complex g = inner(x, y);
  CHECK(g.real() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(g.imag() == doctest::Approx(-1.0).epsilon(1e-15));
  const Complex h = inner(y, x);
  CHECK(h == std::conj(g));
}

TEST_CASE("inner product is linear in the first, conjugate-linear in the second") {
  test::Rng rng(101);
  for (int it = 0; it < 50; ++it) {
    const Vec x = test::random_unit(rng, 3);
    const Vec y = test::random_unit(rng, 3);
    const Vec z = test::random_unit(rng, 3);
    const Complex a(0.7, -1.3);
    const Complex lhs = inner(x * a + y, z);
    const Complex rhs = a * inner(x, z) + inner(y, z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(std::abs(inner(x, y * a) - std::conj(a) * inner(x, y)) < 1e-12);
  }
}

TEST_CASE("inner product rejects dimension mismatch") {
  CHECK_THROWS_AS(inner(Vec{Complex(1, 0)}, Vec{Complex(1, 0), Complex(0, 0)}),
                  ArgumentError);
}

TEST_CASE("norm and unit validation") {
  CHECK(norm(Vec{Complex(3, 0), Complex(4, 0)}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(Vec{Complex(1, 1)}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(validate_unit(Vec{Complex(0.6, 0), Complex(0.8, 0)}, 1e-9));
  CHECK_FALSE(validate_unit(Vec{Complex(1.1, 0)}, 1e-9));
  CHECK(validate_unit(Vec{Complex(1.0 + 5e-10, 0)}, 1e-9));
}

TEST_CASE("orthonormal validation") {
  const Vec e1 = Vec::unit_axis(2, 0), e2 = Vec::unit_axis(2, 1);
  CHECK(validate_orthonormal({e1, e2}, 1e-9));
  CHECK_FALSE(validate_orthonormal({e1, e1}, 1e-9));
  CHECK_FALSE(validate_orthonormal({e1, e2 * Complex(0.9, 0)}, 1e-9));
  CHECK_FALSE(validate_orthonormal({}, 1e-9));
  // more vectors than dimensions can never be orthonormal
  CHECK_FALSE(validate_orthonormal({e1, e2, normalize(e1 + e2)}, 1e-9));
}

TEST_CASE("gram_schmidt on a simple real pair") {
  const Vec e1 = Vec::unit_axis(2, 0), e2 = Vec::unit_axis(2, 1);
  const auto out = gram_schmidt({e1, e1 + e2});
  REQUIRE(out.size() == 2);
  CHECK(norm(out[0] - e1) < 1e-15);
  CHECK(norm(out[1] - e2) < 1e-15);
}

TEST_CASE("gram_schmidt handles complex projections") {
  // <(i,1),(1,0)> = i, so the second output is (i,1) - i (1,0) = (0,1).
  const auto out = gram_schmidt({Vec{Complex(1, 0), Complex(0, 0)},
                                 Vec{Complex(0, 1), Complex(1, 0)}});
  REQUIRE(out.size() == 2);
  CHECK(norm(out[1] - Vec{Complex(0, 0), Complex(1, 0)}) < 1e-15);
}

TEST_CASE("gram_schmidt rejects rank-deficient input") {
  const Vec e1 = Vec::unit_axis(2, 0);
  CHECK_THROWS_AS(gram_schmidt({e1, e1 * Complex(2.0, 0)}), ArgumentError);
}

TEST_CASE("gram_schmidt output is orthonormal for random input") {
  test::Rng rng(202);
  for (int it = 0; it < 20; ++it) {
    std::vector<Vec> seed;
    for (int i = 0; i < 4; ++i) seed.push_back(test::random_unit(rng, 4));
    const auto out = gram_schmidt(seed);
    CHECK(validate_orthonormal(out, 1e-12));
  }
}

TEST_CASE("ball and quadrant membership tests agree on random data") {
  test::Rng rng(303);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int inside = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t dim = 1 + static_cast<std::size_t>(it % 4);
    auto draw = [&] {
      std::vector<Complex> c(dim);
      for (auto& x : c) x = Complex(u(rng), u(rng));
      return Vec(std::move(c));
    };
    const Vec x = draw(), z = draw(), Z = draw();
    const auto [quad, ball] = ball_quadrant_equiv(x, z, Z);
    CHECK(quad == ball);
    inside += quad ? 1 : 0;
  }
  CHECK(inside > 0);  // the sample hits both outcomes
  CHECK(inside < 1000);
}

TEST_CASE("ball and quadrant tests are exact on constructed members") {
  // x on the sphere of the ball with diameter [z, Z]: both tests accept.
  const Vec z{Complex(1, 0)}, Z{Complex(3, 0)};
  const auto [quad_mid, ball_mid] = ball_quadrant_equiv(Vec{Complex(2, 1)}, z, Z);
  CHECK(quad_mid);
  CHECK(ball_mid);
  const auto [quad_out, ball_out] = ball_quadrant_equiv(Vec{Complex(2, 1.5)}, z, Z);
  CHECK_FALSE(quad_out);
  CHECK_FALSE(ball_out);
}

TEST_CASE("normalize") {
  const Vec v = normalize(Vec{Complex(3, 0), Complex(4, 0)});
  CHECK(norm(v - Vec{Complex(0.6, 0), Complex(0.8, 0)}) < 1e-15);
  CHECK_THROWS_AS(normalize(Vec(2)), ArgumentError);
}

TEST_CASE("norm is invariant under a unitary change of basis") {
  test::Rng rng(404);
  for (int it = 0; it < 20; ++it) {
    const auto basis = test::random_orthonormal(rng, 3, 3);
    const Vec v = test::random_unit(rng, 3) * Complex(2.5, 0);
    // coordinates of v in the new basis have the same norm
    Vec coords{inner(v, basis[0]), inner(v, basis[1]), inner(v, basis[2])};
    CHECK(norm(coords) == doctest::Approx(norm(v)).epsilon(1e-12));
  }
}
