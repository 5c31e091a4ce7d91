/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * C interface to the revtri library: numerical certificates for reverses of
 * the continuous triangle inequality,  factor * integral ||f||  <=
 * || integral f ||,  for sampled vector-valued functions.
 *
 * Conventions:
 *  - All functions returning revtri_status set a thread-local error message
 *    readable through revtri_last_error() on failure.
 *  - Vectors cross the boundary as interleaved doubles re,im per coordinate
 *    (a dim-n vector is 2n doubles); lists of vectors are concatenated.
 *  - Objects created through *_load / *_from_* / revtri_certify* are owned
 *    by the caller and released with the matching *_free.
 */

#ifndef REVTRI_H
#define REVTRI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum revtri_status {
  REVTRI_OK = 0,
  REVTRI_ERR_ARGUMENT = 1,     /* invalid parameters or malformed request */
  REVTRI_ERR_PARSE = 2,        /* malformed file or text content */
  REVTRI_ERR_IO = 3,           /* file system failure */
  REVTRI_ERR_HYPOTHESIS = 4,   /* pointwise hypothesis fails on the data */
  REVTRI_ERR_INAPPLICABLE = 5, /* theorem/estimator not applicable to the data */
  REVTRI_ERR_INTERNAL = 6
} revtri_status;

/* Opaque handles. */
typedef struct revtri_function revtri_function;
typedef struct revtri_report revtri_report;

const char* revtri_version(void);
/* Message of the most recent failure on this thread ("" if none). */
const char* revtri_last_error(void);
const char* revtri_status_name(revtri_status status);

/* --- sampled functions -------------------------------------------------- */

/* format: "json", "csv", or NULL/"" to infer from the extension. */
revtri_status revtri_function_load(const char* path, const char* format,
                                   revtri_function** out);
revtri_status revtri_function_from_json(const char* text, revtri_function** out);

/* family_spec: "name:key=value,..."; see the CLI documentation. */
revtri_status revtri_function_from_family(const char* family_spec, double a, double b,
                                          int nodes, revtri_function** out);

/* Explicit samples: ts is `count` strictly increasing nodes, values holds
 * count*dim*2 doubles (re,im per coordinate, node-major).  step_kind != 0
 * marks a piecewise-constant function. */
revtri_status revtri_function_from_values(const double* ts, size_t count, size_t dim,
                                          const double* values, int step_kind,
                                          revtri_function** out);

revtri_status revtri_function_save(const revtri_function* f, const char* path);
void revtri_function_free(revtri_function* f);

size_t revtri_function_dim(const revtri_function* f);
size_t revtri_function_nodes(const revtri_function* f);
double revtri_function_a(const revtri_function* f);
double revtri_function_b(const revtri_function* f);
int revtri_function_is_step(const revtri_function* f);
/* t may be NULL; coords (dim*2 doubles) may be NULL. */
revtri_status revtri_function_node(const revtri_function* f, size_t index, double* t,
                                   double* coords);

/* --- quadrature ---------------------------------------------------------- */

/* rule: "auto", "step", "trapezoid", "simpson", or "gauss:ORDER:PANELS"
 * (order 2..10).  "auto"/NULL picks step for step data, else simpson when
 * the node count is odd and trapezoid otherwise.
 * integral receives dim*2 doubles; norm_integral the integral of ||f||;
 * err the combined error estimate.  Output pointers may be NULL. */
revtri_status revtri_integrate(const revtri_function* f, const char* rule,
                               double* integral, double* norm_integral, double* err);

/* Empirical convergence order of the rule on a smooth family, measured
 * against the finest grid in `sizes` (>= 3 strictly increasing node
 * counts).  *exact is set when the rule integrates the family to rounding,
 * in which case *order is meaningless. */
revtri_status revtri_convergence_order(const char* family_spec, double a, double b,
                                       const char* rule, const size_t* sizes,
                                       size_t n_sizes, double* order, int* exact);

/* --- estimators ----------------------------------------------------------- */

/* e: one unit vector, dim*2 doubles. */
revtri_status revtri_minimal_k(const revtri_function* f, const double* e, double* out);
revtri_status revtri_minimal_rho(const revtri_function* f, const double* e, double* out);
revtri_status revtri_band_fit(const revtri_function* f, const double* e, double* m,
                              double* M, double* factor);
revtri_status revtri_arc_bound(const revtri_function* f, double* theta);
/* family: n orthonormal vectors; k_out receives n coefficients. */
revtri_status revtri_ortho_coefficients(const revtri_function* f, const double* family,
                                        size_t n, double* k_out);
/* Deterministic search for the unit direction maximizing the cone factor;
 * e_out receives dim*2 doubles, factor the certified 1/K*. */
revtri_status revtri_direction_search(const revtri_function* f, const char* rule,
                                      double* e_out, double* factor);

/* --- certification -------------------------------------------------------- */

typedef struct revtri_certify_request {
  const char* theorem; /* "auto", "t21", "c22", "c23", "t31", "c32", "c33",
                          "p41", "karamata", "p43", "p44"; NULL = "auto" */
  const char* rule;    /* as in revtri_integrate; NULL = "auto" */

  const double* e; /* n_e unit vectors, concatenated; NULL = search */
  size_t n_e;

  /* Scalar hypothesis parameters; NAN = estimate from the data. */
  double K, rho, m, M, theta;

  /* Per-member lists for t31/c32/c33; NULL = estimate from the data. */
  const double* k_list;
  size_t n_k;
  const double* rho_list;
  size_t n_rho;
  const double* m_list;
  const double* M_list;
  size_t n_band;

  /* Certification tolerances; values <= 0 select the defaults
   * (abs 1e-10, rel 1e-8, margin 1e-12). */
  double cert_abs_tol;
  double cert_rel_tol;
  double margin_tol;
} revtri_certify_request;

/* Fills a request with defaults (all optional fields unset). */
void revtri_certify_request_init(revtri_certify_request* req);

/* Runs a certification request.  Refused or inapplicable outcomes are data:
 * the call still returns REVTRI_OK with a report describing them.  Only
 * malformed requests and I/O problems produce error codes. */
revtri_status revtri_certify(const revtri_function* f,
                             const revtri_certify_request* req, revtri_report** out);

/* Discrete form: r * sum ||x_i|| <= ||sum x_i|| for explicit vectors
 * (count vectors of dimension dim, concatenated) when r is at most every
 * Re<x_i, e>/||x_i||.  Invalid r yields REVTRI_ERR_ARGUMENT. */
revtri_status revtri_certify_discrete(const double* vectors, size_t count, size_t dim,
                                      const double* e, double r, revtri_report** out);

/* Runs only the estimators: direction, K*, rho*, band fit, theta*, and the
 * k_i of a supplied or Gram-Schmidt-derived orthonormal family.  e: n_e
 * supplied vectors, or NULL to search for a direction.  The resulting
 * report has no certificate entries. */
revtri_status revtri_estimate(const revtri_function* f, const double* e, size_t n_e,
                              const char* rule, revtri_report** out);

/* --- reports -------------------------------------------------------------- */

size_t revtri_report_size(const revtri_report* rep);
/* Entry accessors; i < revtri_report_size().  Strings are owned by the
 * report and valid until revtri_report_free. */
const char* revtri_report_theorem(const revtri_report* rep, size_t i);
const char* revtri_report_status(const revtri_report* rep, size_t i);
const char* revtri_report_reason(const revtri_report* rep, size_t i);

/* Numeric fields: "factor", "lhs", "rhs", "slack", "tightness",
 * "equality_residual", "quad_err", "holds" (0/1), "worst_margin",
 * "worst_node", and for band certificates "coefficient_corrected",
 * "coefficient_printed", "lhs_minus_rhs", "bound_corrected",
 * "bound_printed", "printed_holds" (0/1). */
revtri_status revtri_report_value(const revtri_report* rep, size_t i, const char* field,
                                  double* out);
/* Resolved hypothesis parameters by name ("K", "rho", "m", "M", "theta"). */
revtri_status revtri_report_param(const revtri_report* rep, size_t i, const char* name,
                                  double* out);
/* 1 iff every entry is certified and its inequality holds. */
int revtri_report_all_certified(const revtri_report* rep);

/* Dimension of the input data the report was computed from. */
size_t revtri_report_input_dim(const revtri_report* rep);
/* Direction used by the estimators; e_out receives input-dim*2 doubles.
 * REVTRI_ERR_INAPPLICABLE when no direction was available. */
revtri_status revtri_report_direction(const revtri_report* rep, double* e_out);
/* Estimator values: "K", "rho", "theta", "band_m", "band_M",
 * "band_factor", "k_count", "k0".."k{n-1}".  REVTRI_ERR_INAPPLICABLE with
 * a message when the estimator has no value for this input. */
revtri_status revtri_report_estimator(const revtri_report* rep, const char* name,
                                      double* out);

/* Canonical JSON (deterministic bytes); free with revtri_string_free. */
revtri_status revtri_report_to_json(const revtri_report* rep, char** out);

void revtri_report_free(revtri_report* rep);
void revtri_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REVTRI_H */
