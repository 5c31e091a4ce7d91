/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/certificates.hpp"

#include <algorithm>
#include <cmath>

namespace revtri {

const char* theorem_token(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1: return "t21";
    case TheoremId::C2_2: return "c22";
    case TheoremId::C2_3: return "c23";
    case TheoremId::T3_1: return "t31";
    case TheoremId::C3_2: return "c32";
    case TheoremId::C3_3: return "c33";
    case TheoremId::P4_1: return "p41";
    case TheoremId::Karamata: return "karamata";
    case TheoremId::P4_3: return "p43";
    case TheoremId::P4_4: return "p44";
    case TheoremId::DiazMetcalf: return "diaz_metcalf";
  }
  return "?";
}

TheoremId theorem_from_token(const std::string& token) {
  static const std::pair<const char*, TheoremId> table[] = {
      {"t21", TheoremId::T2_1},         {"c22", TheoremId::C2_2},
      {"c23", TheoremId::C2_3},         {"t31", TheoremId::T3_1},
      {"c32", TheoremId::C3_2},         {"c33", TheoremId::C3_3},
      {"p41", TheoremId::P4_1},         {"karamata", TheoremId::Karamata},
      {"p43", TheoremId::P4_3},         {"p44", TheoremId::P4_4},
      {"diaz_metcalf", TheoremId::DiazMetcalf}};
  for (const auto& [name, id] : table)
    if (token == name) return id;
  throw ArgumentError("unknown theorem '" + token + "'");
}

namespace {

constexpr double kTinyDenominator = 1e-300;

// Shared tail of every certificate: integrate, compare, and measure the
// distance from the equality configuration  integral f = lhs * weight.
Certificate finish(TheoremId id, double factor, const SampledFunction& f,
                   const QuadratureRule& rule, const Vec& weight, CheckReport hyp,
                   const ToleranceConfig& tol) {
  const VectorIntegral vi = integrate_vector(f, rule);
  const ScalarIntegral ni = integrate_norm(f, rule);

  Certificate cert;
  cert.theorem = id;
  cert.factor = factor;
  cert.lhs = ni.value;
  cert.rhs = norm(vi.value);
  cert.slack = cert.rhs - factor * cert.lhs;
  cert.tightness = factor * cert.lhs / std::max(cert.rhs, kTinyDenominator);
  cert.quad_err = vi.err + ni.err;
  cert.holds = factor * cert.lhs <=
               cert.rhs + tol.cert_abs_tol + tol.cert_rel_tol * cert.rhs +
                   factor * cert.quad_err;
  cert.equality_residual =
      norm(vi.value - weight * Complex(cert.lhs, 0.0)) / std::max(cert.rhs, kTinyDenominator);
  cert.hypothesis = std::move(hyp);
  return cert;
}

void refuse_if_failed(const CheckReport& rep, const char* what) {
  if (!rep.holds)
    throw HypothesisError(std::string(what) + " hypothesis fails: worst margin " +
                              std::to_string(rep.worst_margin) + " at t = " +
                              std::to_string(rep.worst_node),
                          rep);
}

AdditiveForm make_additive(double m, double M, double lhs, double rhs, double quad_err,
                           const ToleranceConfig& tol) {
  AdditiveForm add;
  const double root = std::sqrt(M) - std::sqrt(m);
  add.coefficient_corrected = root * root / (2.0 * std::sqrt(m * M));
  add.coefficient_printed = root * root / (M + m);
  add.lhs_minus_rhs = lhs - rhs;
  add.bound_corrected = add.coefficient_corrected * rhs;
  add.bound_printed = add.coefficient_printed * rhs;
  add.printed_holds = add.lhs_minus_rhs <=
                      add.bound_printed + tol.cert_abs_tol + tol.cert_rel_tol * rhs + quad_err;
  return add;
}

double ortho_factor_gate(const std::vector<double>& k, const ToleranceConfig& tol) {
  double sum = 0.0;
  for (double ki : k) sum += ki * ki;
  if (sum > 1.0 + tol.unit_tol)
    throw InapplicableError(
        "factor sqrt(" + std::to_string(sum) +
        ") exceeds 1: no function can satisfy this hypothesis set (it must be empty)");
  return std::sqrt(sum);
}

Vec combination(const std::vector<Vec>& family, const std::vector<double>& k) {
  Vec w(family.front().dim());
  for (std::size_t i = 0; i < family.size(); ++i) w += family[i] * Complex(k[i], 0.0);
  return w;
}

}  // namespace

Certificate certify_unit_vector(const SampledFunction& f, const Vec& e, double K,
                                const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  const CheckReport rep = check(f, UnitKParams{e, K}, tol);
  refuse_if_failed(rep, "cone");
  const double factor = 1.0 / K;
  return finish(TheoremId::T2_1, factor, f, rule, e * Complex(factor, 0.0), rep, tol);
}

Certificate certify_disk(const SampledFunction& f, const Vec& e, double rho,
                         const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  const CheckReport rep = check(f, DiskParams{e, rho}, tol);
  refuse_if_failed(rep, "disk");
  const double factor = std::sqrt(1.0 - rho * rho);
  return finish(TheoremId::C2_2, factor, f, rule, e * Complex(factor, 0.0), rep, tol);
}

Certificate certify_band(const SampledFunction& f, const Vec& e, double m, double M,
                         const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  const CheckReport rep = check(f, BandParams{e, m, M}, tol);
  refuse_if_failed(rep, "band");
  const double factor = 2.0 * std::sqrt(m * M) / (M + m);
  Certificate cert =
      finish(TheoremId::C2_3, factor, f, rule, e * Complex(factor, 0.0), rep, tol);
  cert.additive = make_additive(m, M, cert.lhs, cert.rhs, cert.quad_err, tol);
  return cert;
}

Certificate certify_ortho(const SampledFunction& f, const std::vector<Vec>& family,
                          const std::vector<double>& k, const QuadratureRule& rule,
                          const ToleranceConfig& tol) {
  tol.validate();
  if (k.size() != family.size())
    throw ArgumentError("certify_ortho: k list must match family size");
  for (double ki : k)
    if (!(ki >= 0.0) || !std::isfinite(ki))
      throw ArgumentError("certify_ortho: needs k_i >= 0");
  if (!validate_orthonormal(family, tol.ortho_tol))
    throw ArgumentError("certify_ortho: family must be orthonormal");
  // An aggregate factor above 1 would contradict the triangle inequality on
  // any non-trivial f, so the hypothesis set is vacuous: gate before the
  // pointwise check.
  const double factor = ortho_factor_gate(k, tol);
  const CheckReport rep = check(f, OrthoKParams{family, k}, tol);
  refuse_if_failed(rep, "orthonormal cone");
  return finish(TheoremId::T3_1, factor, f, rule, combination(family, k), rep, tol);
}

Certificate certify_ortho_disk(const SampledFunction& f, const std::vector<Vec>& family,
                               const std::vector<double>& rho, const QuadratureRule& rule,
                               const ToleranceConfig& tol) {
  tol.validate();
  if (rho.size() != family.size())
    throw ArgumentError("certify_ortho_disk: rho list must match family size");
  std::vector<double> k(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0.0) || !(rho[i] < 1.0))
      throw ArgumentError("certify_ortho_disk: needs rho_i in [0, 1)");
    k[i] = std::sqrt(1.0 - rho[i] * rho[i]);
  }
  if (!validate_orthonormal(family, tol.ortho_tol))
    throw ArgumentError("certify_ortho_disk: family must be orthonormal");
  ortho_factor_gate(k, tol);
  const CheckReport rep = check(f, OrthoDiskParams{family, rho}, tol);
  refuse_if_failed(rep, "orthonormal disk");
  Certificate cert = certify_ortho(f, family, k, rule, tol);
  cert.theorem = TheoremId::C3_2;
  cert.hypothesis = rep;  // report the user's hypothesis, not the delegate's
  return cert;
}

Certificate certify_ortho_band(const SampledFunction& f, const std::vector<Vec>& family,
                               const std::vector<double>& m, const std::vector<double>& M,
                               const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  if (m.size() != family.size() || M.size() != family.size())
    throw ArgumentError("certify_ortho_band: m and M lists must match family size");
  std::vector<double> k(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(m[i] > 0.0) || !(M[i] >= m[i]))
      throw ArgumentError("certify_ortho_band: needs 0 < m_i <= M_i");
    k[i] = 2.0 * std::sqrt(m[i] * M[i]) / (m[i] + M[i]);
  }
  if (!validate_orthonormal(family, tol.ortho_tol))
    throw ArgumentError("certify_ortho_band: family must be orthonormal");
  ortho_factor_gate(k, tol);
  const CheckReport rep = check(f, OrthoBandParams{family, m, M}, tol);
  refuse_if_failed(rep, "orthonormal band");
  Certificate cert = certify_ortho(f, family, k, rule, tol);
  cert.theorem = TheoremId::C3_3;
  cert.hypothesis = rep;
  return cert;
}

namespace {

struct ComplexDispatcher {
  const SampledFunction& f;
  const QuadratureRule& rule;
  const ToleranceConfig& tol;

  Certificate operator()(const UnitKParams& p) const {
    Certificate cert = certify_unit_vector(f, p.e, p.K, rule, tol);
    cert.theorem = TheoremId::P4_1;
    return cert;
  }
  Certificate operator()(const DiskParams& p) const {
    Certificate cert = certify_disk(f, p.e, p.rho, rule, tol);
    cert.theorem = TheoremId::P4_3;
    return cert;
  }
  Certificate operator()(const BandParams& p) const {
    Certificate cert = certify_band(f, p.e, p.m, p.M, rule, tol);
    cert.theorem = TheoremId::P4_4;
    return cert;
  }
  Certificate operator()(const ComplexArgParams& p) const {
    const CheckReport rep = check(f, p, tol);
    refuse_if_failed(rep, "arc");
    const double factor = std::cos(p.theta);
    const Vec e{Complex(1.0, 0.0)};
    return finish(TheoremId::Karamata, factor, f, rule, e * Complex(factor, 0.0), rep, tol);
  }
  Certificate operator()(const ComplexRectParams& p) const {
    // Rectangle bounds are the practical test; once they hold, the band
    // form with e = alpha + i beta is implied and carries the factor.
    const CheckReport rep = rect_check(f, p.alpha, p.beta, p.m, p.M, tol);
    refuse_if_failed(rep, "rectangle");
    const double factor = 2.0 * std::sqrt(p.m * p.M) / (p.M + p.m);
    const Vec e{Complex(p.alpha, p.beta)};
    Certificate cert =
        finish(TheoremId::P4_4, factor, f, rule, e * Complex(factor, 0.0), rep, tol);
    cert.additive = make_additive(p.m, p.M, cert.lhs, cert.rhs, cert.quad_err, tol);
    return cert;
  }
};

}  // namespace

Certificate certify_complex(const SampledFunction& f, const ComplexParams& params,
                            const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  if (f.dim() != 1)
    throw ArgumentError("certify_complex: needs a scalar complex function (dim 1)");
  return std::visit(ComplexDispatcher{f, rule, tol}, params);
}

Certificate certify_discrete(const std::vector<Vec>& xs, const Vec& e, double r,
                             const ToleranceConfig& tol) {
  tol.validate();
  if (!std::isfinite(r) || r < 0.0)
    throw ArgumentError("certify_discrete: needs r >= 0");
  if (!validate_unit(e, tol.unit_tol))
    throw ArgumentError("certify_discrete: e must be a unit vector");

  // r must lie below every ratio Re<x_i, e>/||x_i||.
  double worst_ratio = 1.0;
  std::size_t worst_index = 0;
  bool any = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double nx = norm(xs[i]);
    if (nx == 0.0) continue;
    const double ratio = inner(xs[i], e).real() / nx;
    if (!any || ratio < worst_ratio) {
      worst_ratio = ratio;
      worst_index = i;
      any = true;
    }
  }
  if (any && r > worst_ratio + tol.margin_tol)
    throw ArgumentError("certify_discrete: r = " + std::to_string(r) +
                        " exceeds the worst ratio " + std::to_string(worst_ratio) +
                        " (vector " + std::to_string(worst_index) + ")");

  const SampledFunction f = from_discrete(xs);
  if (r > 0.0) {
    Certificate cert = certify_unit_vector(f, e, 1.0 / r, QuadratureRule::step(), tol);
    cert.theorem = TheoremId::DiazMetcalf;
    return cert;
  }

  // r == 0 certifies trivially; build the report directly (no finite K).
  CheckReport rep;
  bool first = true;
  for (std::size_t i = 0; i + 1 < f.grid().size(); ++i) {
    const Vec& v = f.value(i);
    const double nv = norm(v);
    const double margin = (nv == 0.0 ? 0.0 : inner(v, e).real()) / std::max(1.0, nv);
    rep.per_node_margins.push_back(margin);
    if (first || margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_node = f.grid()[i];
      first = false;
    }
  }
  rep.holds = rep.worst_margin >= -tol.margin_tol;
  refuse_if_failed(rep, "discrete cone");
  return finish(TheoremId::DiazMetcalf, 0.0, f, QuadratureRule::step(), Vec(e.dim()), rep,
                tol);
}

namespace {

// min over non-zero samples of Re<f(t), e>/||f(t)||; the cone factor of e.
double cone_ratio(const SampledFunction& f, const Vec& e) {
  double worst = 1.0;
  bool first = true;
  for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
    const Vec& v = f.value(i);
    const double nv = norm(v);
    if (nv == 0.0) continue;
    const double ratio = inner(v, e).real() / nv;
    if (first || ratio < worst) {
      worst = ratio;
      first = false;
    }
  }
  if (first) throw InapplicableError("direction search: f is identically zero");
  return worst;
}

}  // namespace

DirectionSearchResult direction_search(const SampledFunction& f, const QuadratureRule& rule,
                                       const ToleranceConfig& tol) {
  tol.validate();
  const VectorIntegral vi = integrate_vector(f, rule);
  const ScalarIntegral ni = integrate_norm(f, rule);
  if (norm(vi.value) <= 1e-14 * std::max(1.0, ni.value))
    throw InapplicableError("direction search: integral of f is zero; no direction is certifiable");

  std::vector<Vec> candidates;
  candidates.push_back(normalize(vi.value));
  {
    Vec acc(f.dim());
    for (std::size_t i = 0; i < f.counted_nodes(); ++i) {
      const double nv = norm(f.value(i));
      if (nv > 0.0) acc += f.value(i) * Complex(1.0 / nv, 0.0);
    }
    if (norm(acc) > 1e-14 * static_cast<double>(f.counted_nodes()))
      candidates.push_back(normalize(acc));
  }

  Vec best = candidates.front();
  double best_phi = cone_ratio(f, best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double phi = cone_ratio(f, candidates[i]);
    if (phi > best_phi) {
      best = candidates[i];
      best_phi = phi;
    }
  }

  if (f.dim() <= 3) {
    // Projected coordinate descent over the 2n real coordinates.
    double step = 1e-2;
    int sweeps = 0;
    while (step >= 1e-6 && sweeps < 1000) {
      bool improved = false;
      for (std::size_t axis = 0; axis < 2 * f.dim(); ++axis) {
        for (double sign : {1.0, -1.0}) {
          Vec cand = best;
          const Complex delta = (axis % 2 == 0) ? Complex(sign * step, 0.0)
                                                : Complex(0.0, sign * step);
          cand[axis / 2] += delta;
          if (norm(cand) == 0.0) continue;
          cand = normalize(cand);
          const double phi = cone_ratio(f, cand);
          if (phi > best_phi) {
            best = cand;
            best_phi = phi;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
      ++sweeps;
    }
  }

  if (!(best_phi > 0.0))
    throw InapplicableError(
        "direction search: no unit direction keeps Re<f(t), e> positive on all nodes");

  const double K = minimal_k(f, best, tol);
  return {best, certify_unit_vector(f, best, K, rule, tol)};
}

std::vector<AutoEntry> auto_certify(const SampledFunction& f, const std::optional<Vec>& e_opt,
                                    const QuadratureRule& rule, const ToleranceConfig& tol) {
  tol.validate();
  std::vector<AutoEntry> entries;
  const bool scalar = (f.dim() == 1);

  std::optional<Vec> e = e_opt;
  std::string direction_failure;
  if (!e) {
    try {
      e = direction_search(f, rule, tol).e;
    } catch (const Error& err) {
      direction_failure = err.what();
    }
  }

  auto add_inapplicable = [&](TheoremId id, const std::string& reason) {
    AutoEntry entry;
    entry.theorem = id;
    entry.reason = reason;
    entries.push_back(std::move(entry));
  };
  auto run = [&](TheoremId id, auto&& attempt) {
    if (!e) {
      add_inapplicable(id, direction_failure);
      return;
    }
    try {
      attempt();
    } catch (const Error& err) {
      add_inapplicable(id, err.what());
    }
  };

  run(TheoremId::T2_1, [&] {
    const double K = minimal_k(f, *e, tol);
    AutoEntry entry;
    entry.theorem = TheoremId::T2_1;
    entry.certificate = certify_unit_vector(f, *e, K, rule, tol);
    entry.params = {{"K", K}};
    entries.push_back(std::move(entry));
  });
  run(TheoremId::C2_2, [&] {
    const double rho = minimal_rho(f, *e, tol);
    if (rho >= 1.0)
      throw InapplicableError("minimal rho = " + std::to_string(rho) + " is not below 1");
    AutoEntry entry;
    entry.theorem = TheoremId::C2_2;
    entry.certificate = certify_disk(f, *e, rho, rule, tol);
    entry.params = {{"rho", rho}};
    entries.push_back(std::move(entry));
  });
  run(TheoremId::C2_3, [&] {
    const BandFit fit = band_fit(f, *e, tol);
    AutoEntry entry;
    entry.theorem = TheoremId::C2_3;
    entry.certificate = certify_band(f, *e, fit.m, fit.M, rule, tol);
    entry.params = {{"m", fit.m}, {"M", fit.M}};
    entries.push_back(std::move(entry));
  });
  if (scalar) {
    run(TheoremId::Karamata, [&] {
      const double theta = arc_bound(f);
      AutoEntry entry;
      entry.theorem = TheoremId::Karamata;
      entry.certificate = certify_complex(f, ComplexArgParams{theta}, rule, tol);
      entry.params = {{"theta", theta}};
      entries.push_back(std::move(entry));
    });
  }

  std::stable_sort(entries.begin(), entries.end(), [](const AutoEntry& a, const AutoEntry& b) {
    if (a.applicable() != b.applicable()) return a.applicable();
    if (a.applicable() && b.applicable() &&
        a.certificate->factor != b.certificate->factor)
      return a.certificate->factor > b.certificate->factor;
    return static_cast<int>(a.theorem) < static_cast<int>(b.theorem);
  });
  return entries;
}

}  // namespace revtri
