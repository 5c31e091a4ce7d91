/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "revtri/hypotheses.hpp"
#include "revtri/space.hpp"
#include "support.hpp"

using namespace revtri;

namespace {
constexpr double kPi = std::numbers::pi;

SampledFunction circle_orbit(double r, std::size_t nodes) {
  return sample_family(DiskOrbitFamily{Vec{Complex(1, 0)}, r, 1.0},
                       Grid::uniform(0.0, 2.0 * kPi, nodes));
}

/// Two-point step data attaining the band boundary for [m, M]: values
/// sqrt(mM) e^{+-i theta} with cos(theta) = 2 sqrt(mM)/(M+m).
SampledFunction band_boundary_data(double m, double M) {
  const double s = std::sqrt(m * M);
  const double theta = std::acos(2.0 * s / (M + m));
  return from_discrete({Vec{std::polar(s, theta)}, Vec{std::polar(s, -theta)}});
}
}  // namespace

TEST_CASE("cone check on the two-piece equality data") {
  const SampledFunction f = sample_family(TwoPieceEqualityFamily{2.0},
                                          Grid::uniform(0.0, 1.0, 3));
  const Vec e{Complex(1, 0)};

  const CheckReport ok = check(f, UnitKParams{e, 2.0});
  CHECK(ok.holds);
  CHECK(std::abs(ok.worst_margin) < 1e-15);
  CHECK(ok.per_node_margins.size() == f.counted_nodes());

  const CheckReport bad = check(f, UnitKParams{e, 1.9});
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst_margin == doctest::Approx(-0.05).epsilon(1e-12));
  CHECK(bad.worst_node == 0.0);  // equal margins resolve to the smallest t
}

TEST_CASE("cone check validation") {
  const SampledFunction f = circle_orbit(0.1, 9);
  CHECK_THROWS_AS(check(f, UnitKParams{Vec{Complex(1, 0)}, 0.5}), ArgumentError);
  CHECK_THROWS_AS(check(f, UnitKParams{Vec{Complex(2, 0)}, 2.0}), ArgumentError);
}

TEST_CASE("disk check margins are normalized by the sample norm") {
  const Vec e = Vec::unit_axis(2, 0);
  const SampledFunction f = sample_family(DiskOrbitFamily{e, 0.3, 1.0},
                                          Grid::uniform(0.0, 2.0 * kPi, 17));
  CHECK(check(f, DiskParams{e, 0.3}).holds);
  const CheckReport bad = check(f, DiskParams{e, 0.29});
  CHECK_FALSE(bad.holds);
  // every node sits at distance 0.3 and norm sqrt(1.09)
  CHECK(bad.worst_margin == doctest::Approx(-0.01 / std::sqrt(1.09)).epsilon(1e-9));
  CHECK_THROWS_AS(check(f, DiskParams{e, 1.0}), ArgumentError);
  CHECK_THROWS_AS(check(f, DiskParams{e, -0.1}), ArgumentError);
}

TEST_CASE("worst node reports the deepest violation") {
  const Vec e = Vec::unit_axis(2, 0), u = Vec::unit_axis(2, 1);
  const SampledFunction f(Grid::uniform(0.0, 1.0, 2),
                          {e + u * Complex(0.4, 0), e + u * Complex(0.5, 0)},
                          Kind::Smooth);
  const CheckReport rep = check(f, DiskParams{e, 0.3});
  CHECK_FALSE(rep.holds);
  CHECK(rep.worst_node == 1.0);
}

TEST_CASE("band check accepts the boundary and interior, rejects a shrunk band") {
  const Vec e{Complex(1, 0)};
  const SampledFunction f = band_boundary_data(1.0, 4.0);
  CHECK(check(f, BandParams{e, 1.0, 4.0}).holds);
  CHECK_FALSE(check(f, BandParams{e, 1.1, 4.0}).holds);
  CHECK_FALSE(check(f, BandParams{e, 1.0, 3.9}).holds);

  const SampledFunction mid = from_discrete({Vec{Complex(2.5, 0)}});
  const CheckReport rep = check(mid, BandParams{e, 1.0, 4.0});
  CHECK(rep.holds);
  // quadrant form 2.25, ball form 1.5; the min, scaled by the norm 2.5
  CHECK(rep.worst_margin == doctest::Approx(1.5 / 2.5).epsilon(1e-12));

  CHECK_THROWS_AS(check(f, BandParams{e, 0.0, 4.0}), ArgumentError);
  CHECK_THROWS_AS(check(f, BandParams{e, 4.0, 1.0}), ArgumentError);
}

TEST_CASE("step data excludes the final node from checks") {
  const Vec e = Vec::unit_axis(2, 0);
  const SampledFunction f(Grid::uniform(0.0, 2.0, 3), {e, e, e * Complex(-1, 0)},
                          Kind::Step);
  CHECK(check(f, UnitKParams{e, 1.0}).holds);  // the violating last node has no weight
}

TEST_CASE("orthonormal family checks") {
  const Vec e1 = Vec::unit_axis(2, 0), e2 = Vec::unit_axis(2, 1);
  const SampledFunction f = from_discrete({e1 * Complex(0.6, 0) + e2 * Complex(0.8, 0)});

  CHECK(check(f, OrthoKParams{{e1, e2}, {0.6, 0.8}}).holds);
  CHECK_FALSE(check(f, OrthoKParams{{e1, e2}, {0.7, 0.8}}).holds);
  CHECK_THROWS_AS(check(f, OrthoKParams{{e1, e2}, {0.5}}), ArgumentError);
  CHECK_THROWS_AS(check(f, OrthoKParams{{e1, e1}, {0.5, 0.5}}), ArgumentError);
  CHECK_THROWS_AS(check(f, OrthoKParams{{e1, e2}, {-0.1, 0.5}}), ArgumentError);

  const SampledFunction g = from_discrete({e1 * Complex(0.6, 0) + e2 * Complex(0.6, 0)});
  const double d = std::sqrt(0.16 + 0.36);  // distance from (0.6,0.6) to either axis
  CHECK(check(g, OrthoDiskParams{{e1, e2}, {d + 1e-6, d + 1e-6}}).holds);
  CHECK_FALSE(check(g, OrthoDiskParams{{e1, e2}, {d - 1e-6, d + 1e-6}}).holds);

  CHECK_THROWS_AS(check(g, OrthoBandParams{{e1, e2}, {1.0, 1.0}, {2.0}}), ArgumentError);
}

TEST_CASE("complex argument check") {
  const SampledFunction f = sample_family(TwoPieceEqualityFamily{2.0},
                                          Grid::uniform(0.0, 1.0, 3));
  CHECK(check(f, ComplexArgParams{kPi / 3.0 + 1e-9}).holds);
  CHECK_FALSE(check(f, ComplexArgParams{kPi / 3.0 - 1e-6}).holds);
  CHECK_THROWS_AS(check(f, ComplexArgParams{-0.1}), ArgumentError);
  CHECK_THROWS_AS(check(f, ComplexArgParams{kPi / 2.0}), ArgumentError);

  // zero values lie inside every sector
  const SampledFunction z = from_discrete({Vec{Complex(0, 0)}, Vec{Complex(1, 0.1)}});
  const CheckReport rep = check(z, ComplexArgParams{0.2});
  CHECK(rep.holds);
  CHECK(rep.per_node_margins[0] == doctest::Approx(0.2).epsilon(1e-15));

  const SampledFunction vec2 = from_discrete({Vec::unit_axis(2, 0)});
  CHECK_THROWS_AS(check(vec2, ComplexArgParams{0.2}), ArgumentError);
}

TEST_CASE("rectangle check and its band-expansion consistency") {
  const double alpha = std::sqrt(3.0) / 2.0, beta = 0.5;
  const SampledFunction in = from_discrete({Vec{Complex(1.2, 0.7)}});
  CHECK(rect_check(in, alpha, beta, 1.0, 2.0).holds);

  const SampledFunction out = from_discrete({Vec{Complex(0.5, 0.7)}});
  CHECK_FALSE(rect_check(out, alpha, beta, 1.0, 2.0).holds);

  CHECK_THROWS_AS(rect_check(in, 0.9, 0.5, 1.0, 2.0), ArgumentError);  // not unit
  CHECK_THROWS_AS(rect_check(in, alpha, beta, 0.0, 2.0), ArgumentError);

  test::Rng rng(606);
  for (int it = 0; it < 50; ++it) {
    std::uniform_real_distribution<double> psi_d(0.05, kPi / 2.0 - 0.05);
    const double psi = psi_d(rng);
    const auto xs = test::rect_samples(rng, std::cos(psi), std::sin(psi), 0.5, 2.5, 6);
    CHECK(rect_check(from_discrete(xs), std::cos(psi), std::sin(psi), 0.5, 2.5).holds);
  }
}

TEST_CASE("minimal K on equality data and its clamp") {
  const SampledFunction f = sample_family(TwoPieceEqualityFamily{2.0},
                                          Grid::uniform(0.0, 1.0, 3));
  const Vec e{Complex(1, 0)};
  CHECK(minimal_k(f, e) == doctest::Approx(2.0).epsilon(1e-12));

  // constants aligned with e have ratio exactly 1 regardless of scale
  CHECK(minimal_k(from_discrete({Vec{Complex(2, 0)}}), e) == 1.0);
  CHECK(minimal_k(from_discrete({Vec{Complex(0.5, 0)}}), e) == 1.0);

  // zero samples are skipped
  CHECK(minimal_k(from_discrete({Vec{Complex(0, 0)}, Vec{Complex(1, 0)}}), e) == 1.0);

  CHECK_THROWS_AS(minimal_k(from_discrete({Vec{Complex(0, 1)}}), e), InapplicableError);
  CHECK_THROWS_WITH_AS(minimal_k(from_discrete({Vec{Complex(-1, 0)}}), e),
                       doctest::Contains("no finite K"), InapplicableError);
  CHECK_THROWS_AS(minimal_k(f, Vec{Complex(2, 0)}), ArgumentError);
}

TEST_CASE("minimal rho is the largest node distance") {
  const Vec e = Vec::unit_axis(2, 0);
  const SampledFunction f = sample_family(DiskOrbitFamily{e, 0.35, 1.0},
                                          Grid::uniform(0.0, 2.0 * kPi, 33));
  CHECK(minimal_rho(f, e) == doctest::Approx(0.35).epsilon(1e-12));
  // values >= 1 are reported as-is
  CHECK(minimal_rho(from_discrete({Vec(2)}), e) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("band fit recovers an exact equality band") {
  const BandFit fit = band_fit(band_boundary_data(1.0, 4.0), Vec{Complex(1, 0)});
  CHECK(fit.m == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(fit.M == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(fit.factor == doctest::Approx(0.8).epsilon(1e-10));
}

TEST_CASE("band fit on the scalar circle orbit: closed form and scan oracle") {
  // f(t) = 1 + 0.5 e^{it}: the optimal band is [0.5, 1.5] with factor
  // 2 sqrt(0.75)/2 = sqrt(3)/2, which equals 1/K* for this data.
  const SampledFunction f = circle_orbit(0.5, 2049);
  const Vec e{Complex(1, 0)};
  const BandFit fit = band_fit(f, e);
  CHECK(fit.factor == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-8));
  CHECK(fit.m == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit.M == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(1.0 / minimal_k(f, e) == doctest::Approx(fit.factor).epsilon(1e-4));

  // independent oracle: dense scan over the band-sum parameter s
  std::vector<double> a, b;
  for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
    a.push_back(norm(f.value(i)) * norm(f.value(i)));
    b.push_back(inner(f.value(i), e).real());
  }
  double sigma = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sigma = std::max(sigma, a[i] / b[i]);
  double best = 0.0;
  const int scan = 200000;
  for (int k = 0; k <= scan; ++k) {
    const double s = sigma + sigma * static_cast<double>(k) / scan;
    double p = 0.25 * s * s;
    for (std::size_t i = 0; i < a.size(); ++i) p = std::min(p, s * b[i] - a[i]);
    if (p > 0.0) best = std::max(best, 2.0 * std::sqrt(p) / s);
  }
  CHECK(fit.factor == doctest::Approx(best).epsilon(1e-5));
}

TEST_CASE("band fit matches 1/K* on equal-norm orbits") {
  // dim-2 orbit: ||f|| is constant, so the cone and band bounds are tangent
  const Vec e = Vec::unit_axis(2, 0);
  const SampledFunction f = sample_family(DiskOrbitFamily{e, 0.5, 1.0},
                                          Grid::uniform(0.0, 2.0 * kPi, 129));
  const BandFit fit = band_fit(f, e);
  CHECK(fit.factor == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(fit.m * fit.M == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(fit.factor == doctest::Approx(1.0 / minimal_k(f, e)).epsilon(1e-9));
}

TEST_CASE("band fit reports infeasible data") {
  const Vec e{Complex(1, 0)};
  CHECK_THROWS_AS(band_fit(from_discrete({Vec{Complex(0, 1)}}), e), InapplicableError);
  CHECK_THROWS_WITH_AS(band_fit(from_discrete({Vec{Complex(-2, 0)}}), e),
                       doctest::Contains("band infeasible"), InapplicableError);
}

TEST_CASE("orthonormal coefficients") {
  const Vec e1 = Vec::unit_axis(2, 0), e2 = Vec::unit_axis(2, 1);
  const SampledFunction f = from_discrete({e1 * Complex(0.6, 0) + e2 * Complex(0.8, 0)});
  const auto k = ortho_coefficients(f, {e1, e2});
  REQUIRE(k.size() == 2);
  CHECK(k[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(k[1] == doctest::Approx(0.8).epsilon(1e-12));

  // negative projections clamp to zero
  const SampledFunction g = from_discrete({e1 - e2});
  const auto kg = ortho_coefficients(g, {e1, e2});
  CHECK(kg[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(kg[1] == 0.0);

  // all-zero data yields zero coefficients
  const auto kz = ortho_coefficients(from_discrete({Vec(2)}), {e1, e2});
  CHECK(kz[0] == 0.0);
  CHECK(kz[1] == 0.0);

  CHECK_THROWS_AS(ortho_coefficients(f, {e1, e1}), ArgumentError);
}

TEST_CASE("arc bound") {
  const SampledFunction f = sample_family(TwoPieceEqualityFamily{2.0},
                                          Grid::uniform(0.0, 1.0, 3));
  CHECK(arc_bound(f) == doctest::Approx(kPi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(arc_bound(from_discrete({Vec{Complex(-1, 0)}})), InapplicableError);
  CHECK_THROWS_AS(arc_bound(from_discrete({Vec{Complex(0, 1)}})), InapplicableError);
  CHECK_THROWS_AS(arc_bound(from_discrete({Vec::unit_axis(2, 0)})), ArgumentError);
}

TEST_CASE("random cone samples have minimal K equal to the target") {
  test::Rng rng(707);
  for (int it = 0; it < 40; ++it) {
    const std::size_t dim = 1 + static_cast<std::size_t>(it % 4);
    const Vec e = test::random_unit(rng, dim);
    const double K = 1.05 + 3.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto xs = test::cone_samples(rng, e, K, 7);
    const SampledFunction f = from_discrete(xs);
    CHECK(minimal_k(f, e) == doctest::Approx(K).epsilon(1e-9));
    CHECK(check(f, UnitKParams{e, K * (1.0 + 1e-9)}).holds);
  }
}
