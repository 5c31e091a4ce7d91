/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "revtri/io.hpp"

struct revtri_function {
  revtri::SampledFunction f;
};

struct revtri_report {
  revtri::io::Report rep;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
revtri_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return REVTRI_OK;
  } catch (const revtri::HypothesisError& ex) {
    set_error(ex.what());
    return REVTRI_ERR_HYPOTHESIS;
  } catch (const revtri::InapplicableError& ex) {
    set_error(ex.what());
    return REVTRI_ERR_INAPPLICABLE;
  } catch (const revtri::ParseError& ex) {
    set_error(ex.what());
    return REVTRI_ERR_PARSE;
  } catch (const revtri::IoError& ex) {
    set_error(ex.what());
    return REVTRI_ERR_IO;
  } catch (const revtri::ArgumentError& ex) {
    set_error(ex.what());
    return REVTRI_ERR_ARGUMENT;
  } catch (const std::exception& ex) {
    set_error(ex.what());
    return REVTRI_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return REVTRI_ERR_INTERNAL;
  }
}

revtri_status arg_error(const char* msg) {
  set_error(msg);
  return REVTRI_ERR_ARGUMENT;
}

revtri::Vec vec_from_interleaved(const double* data, std::size_t dim) {
  std::vector<revtri::Complex> coords(dim);
  for (std::size_t i = 0; i < dim; ++i)
    coords[i] = revtri::Complex(data[2 * i], data[2 * i + 1]);
  return revtri::Vec(std::move(coords));
}

void vec_to_interleaved(const revtri::Vec& v, double* out) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
}

std::vector<revtri::Vec> vec_list_from_interleaved(const double* data, std::size_t count,
                                                   std::size_t dim) {
  std::vector<revtri::Vec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(vec_from_interleaved(data + 2 * dim * i, dim));
  return out;
}

const revtri::io::ReportEntry* entry_at(const revtri_report* rep, std::size_t i) {
  if (!rep || i >= rep->rep.entries.size()) return nullptr;
  return &rep->rep.entries[i];
}

}  // namespace

extern "C" {

const char* revtri_version(void) { return revtri::io::kToolVersion; }

const char* revtri_last_error(void) { return g_last_error.c_str(); }

const char* revtri_status_name(revtri_status status) {
  switch (status) {
    case REVTRI_OK: return "ok";
    case REVTRI_ERR_ARGUMENT: return "argument";
    case REVTRI_ERR_PARSE: return "parse";
    case REVTRI_ERR_IO: return "io";
    case REVTRI_ERR_HYPOTHESIS: return "hypothesis";
    case REVTRI_ERR_INAPPLICABLE: return "inapplicable";
    case REVTRI_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

revtri_status revtri_function_load(const char* path, const char* format,
                                   revtri_function** out) {
  if (!path || !out) return arg_error("null pointer");
  return guarded([&] {
    *out = new revtri_function{revtri::io::load_function(path, format ? format : "")};
  });
}

revtri_status revtri_function_from_json(const char* text, revtri_function** out) {
  if (!text || !out) return arg_error("null pointer");
  return guarded([&] {
    *out = new revtri_function{revtri::io::function_from_json_text(text, "<json>")};
  });
}

revtri_status revtri_function_from_family(const char* family_spec, double a, double b,
                                          int nodes, revtri_function** out) {
  if (!family_spec || !out) return arg_error("null pointer");
  return guarded([&] {
    revtri::io::CliFamily fam = revtri::io::parse_family(family_spec);
    *out = new revtri_function{revtri::io::sample_cli_family(fam, a, b, nodes)};
  });
}

revtri_status revtri_function_from_values(const double* ts, size_t count, size_t dim,
                                          const double* values, int step_kind,
                                          revtri_function** out) {
  if (!ts || !values || !out) return arg_error("null pointer");
  return guarded([&] {
    std::vector<double> nodes(ts, ts + count);
    std::vector<revtri::Vec> vals = vec_list_from_interleaved(values, count, dim);
    *out = new revtri_function{revtri::SampledFunction(
        revtri::Grid(std::move(nodes)), std::move(vals),
        step_kind ? revtri::Kind::Step : revtri::Kind::Smooth)};
  });
}

revtri_status revtri_function_save(const revtri_function* f, const char* path) {
  if (!f || !path) return arg_error("null pointer");
  return guarded([&] { revtri::io::save_function(f->f, path); });
}

void revtri_function_free(revtri_function* f) { delete f; }

size_t revtri_function_dim(const revtri_function* f) { return f ? f->f.dim() : 0; }

size_t revtri_function_nodes(const revtri_function* f) {
  return f ? f->f.grid().size() : 0;
}

double revtri_function_a(const revtri_function* f) { return f ? f->f.grid().a() : 0.0; }

double revtri_function_b(const revtri_function* f) { return f ? f->f.grid().b() : 0.0; }

int revtri_function_is_step(const revtri_function* f) {
  return f && f->f.kind() == revtri::Kind::Step ? 1 : 0;
}

revtri_status revtri_function_node(const revtri_function* f, size_t index, double* t,
                                   double* coords) {
  if (!f) return arg_error("null pointer");
  if (index >= f->f.grid().size()) return arg_error("node index out of range");
  if (t) *t = f->f.grid()[index];
  if (coords) vec_to_interleaved(f->f.value(index), coords);
  g_last_error.clear();
  return REVTRI_OK;
}

revtri_status revtri_integrate(const revtri_function* f, const char* rule,
                               double* integral, double* norm_integral, double* err) {
  if (!f) return arg_error("null pointer");
  return guarded([&] {
    revtri::QuadratureRule r =
        revtri::io::resolve_rule_token(f->f, rule ? rule : "auto");
    revtri::VectorIntegral vi = revtri::integrate_vector(f->f, r);
    revtri::ScalarIntegral ni = revtri::integrate_norm(f->f, r);
    if (integral) vec_to_interleaved(vi.value, integral);
    if (norm_integral) *norm_integral = ni.value;
    if (err) *err = vi.err + ni.err;
  });
}

revtri_status revtri_convergence_order(const char* family_spec, double a, double b,
                                       const char* rule, const size_t* sizes,
                                       size_t n_sizes, double* order, int* exact) {
  if (!family_spec || !rule || !sizes) return arg_error("null pointer");
  return guarded([&] {
    revtri::io::CliFamily fam = revtri::io::parse_family(family_spec);
    const revtri::FamilySpec* spec = std::get_if<revtri::FamilySpec>(&fam);
    if (!spec)
      throw revtri::ArgumentError(
          "convergence studies need a smooth family, not band_equality");
    revtri::QuadratureRule r = revtri::io::parse_rule_token(rule);
    std::vector<int> ss;
    ss.reserve(n_sizes);
    for (std::size_t i = 0; i < n_sizes; ++i) ss.push_back(static_cast<int>(sizes[i]));
    revtri::ConvergenceResult res = revtri::convergence_order(*spec, a, b, r, ss);
    if (order) *order = res.order;
    if (exact) *exact = res.exact ? 1 : 0;
  });
}

revtri_status revtri_minimal_k(const revtri_function* f, const double* e, double* out) {
  if (!f || !e || !out) return arg_error("null pointer");
  return guarded(
      [&] { *out = revtri::minimal_k(f->f, vec_from_interleaved(e, f->f.dim())); });
}

revtri_status revtri_minimal_rho(const revtri_function* f, const double* e, double* out) {
  if (!f || !e || !out) return arg_error("null pointer");
  return guarded(
      [&] { *out = revtri::minimal_rho(f->f, vec_from_interleaved(e, f->f.dim())); });
}

revtri_status revtri_band_fit(const revtri_function* f, const double* e, double* m,
                              double* M, double* factor) {
  if (!f || !e) return arg_error("null pointer");
  return guarded([&] {
    revtri::BandFit bf = revtri::band_fit(f->f, vec_from_interleaved(e, f->f.dim()));
    if (m) *m = bf.m;
    if (M) *M = bf.M;
    if (factor) *factor = bf.factor;
  });
}

revtri_status revtri_arc_bound(const revtri_function* f, double* theta) {
  if (!f || !theta) return arg_error("null pointer");
  return guarded([&] { *theta = revtri::arc_bound(f->f); });
}

revtri_status revtri_ortho_coefficients(const revtri_function* f, const double* family,
                                        size_t n, double* k_out) {
  if (!f || !family || !k_out) return arg_error("null pointer");
  return guarded([&] {
    std::vector<revtri::Vec> fam = vec_list_from_interleaved(family, n, f->f.dim());
    std::vector<double> k = revtri::ortho_coefficients(f->f, fam);
    for (std::size_t i = 0; i < k.size(); ++i) k_out[i] = k[i];
  });
}

revtri_status revtri_direction_search(const revtri_function* f, const char* rule,
                                      double* e_out, double* factor) {
  if (!f || !e_out) return arg_error("null pointer");
  return guarded([&] {
    revtri::QuadratureRule r =
        revtri::io::resolve_rule_token(f->f, rule ? rule : "auto");
    revtri::DirectionSearchResult res = revtri::direction_search(f->f, r);
    vec_to_interleaved(res.e, e_out);
    if (factor) *factor = res.certificate.factor;
  });
}

void revtri_certify_request_init(revtri_certify_request* req) {
  if (!req) return;
  std::memset(req, 0, sizeof(*req));
  req->theorem = nullptr;
  req->rule = nullptr;
  req->K = req->rho = req->m = req->M = req->theta = NAN;
}

revtri_status revtri_certify(const revtri_function* f,
                             const revtri_certify_request* req, revtri_report** out) {
  if (!f || !req || !out) return arg_error("null pointer");
  return guarded([&] {
    revtri::io::CertifyRequest r;
    r.theorem = req->theorem && *req->theorem ? req->theorem : "auto";
    const std::string rule_token = req->rule && *req->rule ? req->rule : "auto";
    if (rule_token != "auto") {
      r.rule_auto = false;
      r.rule = revtri::io::parse_rule_token(rule_token);
    }
    if (req->e && req->n_e > 0)
      r.e_list = vec_list_from_interleaved(req->e, req->n_e, f->f.dim());
    auto opt = [](double v) {
      return std::isnan(v) ? std::optional<double>() : std::optional<double>(v);
    };
    r.K = opt(req->K);
    r.rho = opt(req->rho);
    r.m = opt(req->m);
    r.M = opt(req->M);
    r.theta = opt(req->theta);
    if (req->k_list) r.k_list.assign(req->k_list, req->k_list + req->n_k);
    if (req->rho_list) r.rho_list.assign(req->rho_list, req->rho_list + req->n_rho);
    if (req->m_list) r.m_list.assign(req->m_list, req->m_list + req->n_band);
    if (req->M_list) r.M_list.assign(req->M_list, req->M_list + req->n_band);
    if (req->cert_abs_tol > 0) r.tol.cert_abs_tol = req->cert_abs_tol;
    if (req->cert_rel_tol > 0) r.tol.cert_rel_tol = req->cert_rel_tol;
    if (req->margin_tol > 0) r.tol.margin_tol = req->margin_tol;
    *out = new revtri_report{revtri::io::run_certify(f->f, r)};
  });
}

revtri_status revtri_certify_discrete(const double* vectors, size_t count, size_t dim,
                                      const double* e, double r, revtri_report** out) {
  if (!vectors || !e || !out) return arg_error("null pointer");
  return guarded([&] {
    std::vector<revtri::Vec> xs = vec_list_from_interleaved(vectors, count, dim);
    revtri::Vec ev = vec_from_interleaved(e, dim);
    revtri::ToleranceConfig tol;
    revtri::Certificate cert = revtri::certify_discrete(xs, ev, r, tol);
    revtri::SampledFunction f = revtri::from_discrete(xs);
    *out = new revtri_report{revtri::io::report_for_certificate(f, cert, "step", tol)};
  });
}

revtri_status revtri_estimate(const revtri_function* f, const double* e, size_t n_e,
                              const char* rule, revtri_report** out) {
  if (!f || !out) return arg_error("null pointer");
  return guarded([&] {
    revtri::io::CertifyRequest r;
    const std::string rule_token = rule && *rule ? rule : "auto";
    if (rule_token != "auto") {
      r.rule_auto = false;
      r.rule = revtri::io::parse_rule_token(rule_token);
    }
    if (e && n_e > 0) r.e_list = vec_list_from_interleaved(e, n_e, f->f.dim());
    *out = new revtri_report{revtri::io::estimate_report(f->f, r)};
  });
}

size_t revtri_report_size(const revtri_report* rep) {
  return rep ? rep->rep.entries.size() : 0;
}

const char* revtri_report_theorem(const revtri_report* rep, size_t i) {
  const auto* e = entry_at(rep, i);
  return e ? e->theorem.c_str() : "";
}

const char* revtri_report_status(const revtri_report* rep, size_t i) {
  const auto* e = entry_at(rep, i);
  if (!e) return "";
  switch (e->status) {
    case revtri::io::EntryStatus::Certified: return "certified";
    case revtri::io::EntryStatus::Refused: return "refused";
    case revtri::io::EntryStatus::Inapplicable: return "inapplicable";
  }
  return "";
}

const char* revtri_report_reason(const revtri_report* rep, size_t i) {
  const auto* e = entry_at(rep, i);
  return e ? e->reason.c_str() : "";
}

revtri_status revtri_report_value(const revtri_report* rep, size_t i, const char* field,
                                  double* out) {
  if (!field || !out) return arg_error("null pointer");
  const auto* e = entry_at(rep, i);
  if (!e) return arg_error("report entry index out of range");
  const std::string name = field;

  const revtri::CheckReport* check = nullptr;
  if (e->certificate)
    check = &e->certificate->hypothesis;
  else if (e->failed_check)
    check = &*e->failed_check;
  if (check) {
    if (name == "worst_margin") {
      *out = check->worst_margin;
      g_last_error.clear();
      return REVTRI_OK;
    }
    if (name == "worst_node") {
      *out = check->worst_node;
      g_last_error.clear();
      return REVTRI_OK;
    }
  }

  if (e->certificate) {
    const revtri::Certificate& c = *e->certificate;
    double v = 0.0;
    bool found = true;
    if (name == "factor")
      v = c.factor;
    else if (name == "lhs")
      v = c.lhs;
    else if (name == "rhs")
      v = c.rhs;
    else if (name == "slack")
      v = c.slack;
    else if (name == "tightness")
      v = c.tightness;
    else if (name == "equality_residual")
      v = c.equality_residual;
    else if (name == "quad_err")
      v = c.quad_err;
    else if (name == "holds")
      v = c.holds ? 1.0 : 0.0;
    else
      found = false;
    if (found) {
      *out = v;
      g_last_error.clear();
      return REVTRI_OK;
    }
    if (c.additive) {
      const revtri::AdditiveForm& add = *c.additive;
      found = true;
      if (name == "coefficient_corrected")
        v = add.coefficient_corrected;
      else if (name == "coefficient_printed")
        v = add.coefficient_printed;
      else if (name == "lhs_minus_rhs")
        v = add.lhs_minus_rhs;
      else if (name == "bound_corrected")
        v = add.bound_corrected;
      else if (name == "bound_printed")
        v = add.bound_printed;
      else if (name == "printed_holds")
        v = add.printed_holds ? 1.0 : 0.0;
      else
        found = false;
      if (found) {
        *out = v;
        g_last_error.clear();
        return REVTRI_OK;
      }
    }
  }
  return arg_error(("no field '" + name + "' on this report entry").c_str());
}

revtri_status revtri_report_param(const revtri_report* rep, size_t i, const char* name,
                                  double* out) {
  if (!name || !out) return arg_error("null pointer");
  const auto* e = entry_at(rep, i);
  if (!e) return arg_error("report entry index out of range");
  for (const auto& [key, value] : e->params)
    if (key == name) {
      *out = value;
      g_last_error.clear();
      return REVTRI_OK;
    }
  return arg_error(("no parameter '" + std::string(name) + "' on this report entry").c_str());
}

int revtri_report_all_certified(const revtri_report* rep) {
  return rep && rep->rep.all_certified() ? 1 : 0;
}

size_t revtri_report_input_dim(const revtri_report* rep) {
  return rep ? static_cast<size_t>(rep->rep.input.dim) : 0;
}

revtri_status revtri_report_direction(const revtri_report* rep, double* e_out) {
  if (!rep || !e_out) return arg_error("null pointer");
  const auto& est = rep->rep.estimators;
  if (!est.e) {
    set_error(est.e_reason.empty() ? "no direction available" : est.e_reason);
    return REVTRI_ERR_INAPPLICABLE;
  }
  vec_to_interleaved(*est.e, e_out);
  g_last_error.clear();
  return REVTRI_OK;
}

revtri_status revtri_report_estimator(const revtri_report* rep, const char* name,
                                      double* out) {
  if (!rep || !name || !out) return arg_error("null pointer");
  const auto& est = rep->rep.estimators;
  const std::string key = name;

  auto simple = [&](const revtri::io::EstimatorValue& v) {
    if (!v.ok) {
      set_error(v.reason);
      return REVTRI_ERR_INAPPLICABLE;
    }
    *out = v.value;
    g_last_error.clear();
    return REVTRI_OK;
  };
  if (key == "K") return simple(est.K);
  if (key == "rho") return simple(est.rho);
  if (key == "theta") return simple(est.theta);

  if (key == "band_m" || key == "band_M" || key == "band_factor") {
    if (!est.band.ok) {
      set_error(est.band.reason);
      return REVTRI_ERR_INAPPLICABLE;
    }
    *out = key == "band_m" ? est.band.m : key == "band_M" ? est.band.M : est.band.factor;
    g_last_error.clear();
    return REVTRI_OK;
  }

  if (key == "k_count" || (key.size() > 1 && key[0] == 'k')) {
    if (!est.k.ok) {
      set_error(est.k.reason);
      return REVTRI_ERR_INAPPLICABLE;
    }
    if (key == "k_count") {
      *out = static_cast<double>(est.k.values.size());
      g_last_error.clear();
      return REVTRI_OK;
    }
    char* end = nullptr;
    long idx = std::strtol(key.c_str() + 1, &end, 10);
    if (*end != '\0' || idx < 0 ||
        static_cast<std::size_t>(idx) >= est.k.values.size())
      return arg_error(("no estimator '" + key + "'").c_str());
    *out = est.k.values[static_cast<std::size_t>(idx)];
    g_last_error.clear();
    return REVTRI_OK;
  }
  return arg_error(("no estimator '" + key + "'").c_str());
}

revtri_status revtri_report_to_json(const revtri_report* rep, char** out) {
  if (!rep || !out) return arg_error("null pointer");
  return guarded([&] {
    const std::string text = revtri::io::report_to_json(rep->rep);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void revtri_report_free(revtri_report* rep) { delete rep; }

void revtri_string_free(char* s) { delete[] s; }

}  // extern "C"
