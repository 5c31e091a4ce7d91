/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* Compiled as plain C: proves the public header is C-clean and the shared
 * library is usable without any C++ runtime knowledge on the caller's side. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "revtri.h"

static int fail(const char* what) {
  fprintf(stderr, "c_header_check: %s (last error: %s)\n", what, revtri_last_error());
  return 1;
}

int main(void) {
  if (strcmp(revtri_version(), "0.1.0") != 0) return fail("unexpected version");
  if (strcmp(revtri_status_name(REVTRI_OK), "ok") != 0 ||
      strcmp(revtri_status_name(REVTRI_ERR_ARGUMENT), "argument") != 0)
    return fail("unexpected status names");

  /* Step function on [0, 2]: value 3 on [0, 1), value 4 on [1, 2]. */
  const double ts[3] = {0.0, 1.0, 2.0};
  const double values[6] = {3.0, 0.0, 4.0, 0.0, 4.0, 0.0};
  revtri_function* f = NULL;
  if (revtri_function_from_values(ts, 3, 1, values, 1, &f) != REVTRI_OK)
    return fail("from_values");
  if (revtri_function_dim(f) != 1 || revtri_function_nodes(f) != 3 ||
      revtri_function_a(f) != 0.0 || revtri_function_b(f) != 2.0 ||
      !revtri_function_is_step(f))
    return fail("function accessors");

  double t = -1.0, coords[2] = {0.0, 0.0};
  if (revtri_function_node(f, 1, &t, coords) != REVTRI_OK || t != 1.0 ||
      coords[0] != 4.0 || coords[1] != 0.0)
    return fail("node accessor");

  double integral[2] = {0.0, 0.0}, norm_integral = 0.0, err = -1.0;
  if (revtri_integrate(f, "auto", integral, &norm_integral, &err) != REVTRI_OK)
    return fail("integrate");
  if (fabs(integral[0] - 7.0) > 1e-15 || fabs(integral[1]) > 1e-15 ||
      fabs(norm_integral - 7.0) > 1e-15 || err != 0.0)
    return fail("integrate values");

  const double e[2] = {1.0, 0.0};
  double k_star = 0.0;
  if (revtri_minimal_k(f, e, &k_star) != REVTRI_OK || fabs(k_star - 1.0) > 1e-12)
    return fail("minimal_k");

  revtri_certify_request req;
  revtri_certify_request_init(&req);
  req.theorem = "t21";
  req.e = e;
  req.n_e = 1;
  revtri_report* rep = NULL;
  if (revtri_certify(f, &req, &rep) != REVTRI_OK) return fail("certify");
  if (revtri_report_size(rep) != 1 ||
      strcmp(revtri_report_theorem(rep, 0), "t21") != 0 ||
      strcmp(revtri_report_status(rep, 0), "certified") != 0 ||
      !revtri_report_all_certified(rep))
    return fail("report entry");

  double factor = 0.0, param_k = 0.0;
  if (revtri_report_value(rep, 0, "factor", &factor) != REVTRI_OK ||
      fabs(factor - 1.0) > 1e-12)
    return fail("report factor");
  if (revtri_report_param(rep, 0, "K", &param_k) != REVTRI_OK ||
      fabs(param_k - 1.0) > 1e-12)
    return fail("report param");

  char* json = NULL;
  if (revtri_report_to_json(rep, &json) != REVTRI_OK || json == NULL ||
      strstr(json, "\"name\": \"revtri\"") == NULL)
    return fail("report json");
  revtri_string_free(json);
  revtri_report_free(rep);

  /* Discrete finite-sum entry point. */
  const double xs[4] = {3.0, 0.0, 4.0, 0.0};
  revtri_report* drep = NULL;
  if (revtri_certify_discrete(xs, 2, 1, e, 1.0, &drep) != REVTRI_OK)
    return fail("certify_discrete");
  double rhs = 0.0;
  if (strcmp(revtri_report_theorem(drep, 0), "diaz_metcalf") != 0 ||
      revtri_report_value(drep, 0, "rhs", &rhs) != REVTRI_OK ||
      fabs(rhs - 7.0) > 1e-15)
    return fail("discrete report");
  revtri_report_free(drep);

  /* Error paths set a status and a readable message. */
  const double bad_ts[2] = {1.0, 0.0};
  revtri_function* bad = NULL;
  if (revtri_function_from_values(bad_ts, 2, 1, values, 0, &bad) !=
      REVTRI_ERR_ARGUMENT)
    return fail("non-increasing grid accepted");
  if (strlen(revtri_last_error()) == 0) return fail("empty error message");

  revtri_function_free(f);
  printf("c_header_check: ok\n");
  return 0;
}
