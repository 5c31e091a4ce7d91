// Command-line interface for the revtri library: certify, estimate, sweep,
// and convergence subcommands over sampled vector-valued functions.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "revtri.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotCertified = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double_token(const std::string& token, const std::string& what) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v))
    throw UsageError(what + ": invalid number '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const std::string& part : split(s, ','))
    out.push_back(parse_double_token(part, what));
  return out;
}

/// "re,im;re,im;..." -> interleaved doubles (im defaults to 0).
std::vector<double> parse_vector_arg(const std::string& s) {
  std::vector<double> out;
  for (const std::string& coord : split(s, ';')) {
    std::vector<std::string> parts = split(coord, ',');
    if (parts.empty() || parts.size() > 2)
      throw UsageError("--e: coordinate '" + coord + "' must be 're' or 're,im'");
    out.push_back(parse_double_token(parts[0], "--e"));
    out.push_back(parts.size() == 2 ? parse_double_token(parts[1], "--e") : 0.0);
  }
  if (out.empty()) throw UsageError("--e: empty vector");
  return out;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int exit_for_status(revtri_status st) {
  switch (st) {
    case REVTRI_OK:
      return kExitOk;
    case REVTRI_ERR_HYPOTHESIS:
    case REVTRI_ERR_INAPPLICABLE:
      return kExitNotCertified;
    default:
      return kExitUsage;
  }
}

int fail_status(revtri_status st) {
  std::cerr << "revtri: " << revtri_last_error() << "\n";
  return exit_for_status(st);
}

void note_gauss(const std::string& rule) {
  if (rule.rfind("gauss", 0) == 0)
    std::cerr << "note: gauss rules integrate the interpolant between sample nodes; "
                 "step, trapezoid, or simpson use the samples directly\n";
}

struct FunctionHandle {
  revtri_function* fn = nullptr;
  ~FunctionHandle() { revtri_function_free(fn); }
};

struct ReportHandle {
  revtri_report* rep = nullptr;
  ~ReportHandle() { revtri_report_free(rep); }
};

struct InputOpts {
  std::string input;
  std::string family;
  double a = 0.0;
  double b = 1.0;
  int nodes = 129;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  auto* file = cmd->add_option("--input", in.input,
                               "Sampled function file (.json or .csv)");
  auto* family = cmd->add_option("--family", in.family,
                                 "Closed-form family 'name:key=value,...'");
  file->excludes(family);
  family->excludes(file);
  cmd->add_option("--a", in.a, "Interval start for --family sampling")
      ->capture_default_str();
  cmd->add_option("--b", in.b, "Interval end for --family sampling")
      ->capture_default_str();
  cmd->add_option("--nodes", in.nodes, "Grid size for --family sampling")
      ->capture_default_str();
}

/// Loads the input; on failure prints the error and returns its exit code.
int open_input(const InputOpts& in, FunctionHandle& out) {
  if (in.input.empty() && in.family.empty()) {
    std::cerr << "revtri: one of --input or --family is required\n";
    return kExitUsage;
  }
  revtri_status st =
      in.input.empty()
          ? revtri_function_from_family(in.family.c_str(), in.a, in.b, in.nodes,
                                        &out.fn)
          : revtri_function_load(in.input.c_str(), nullptr, &out.fn);
  if (st != REVTRI_OK) {
    std::cerr << "revtri: " << revtri_last_error() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

/// Flattens repeatable --e arguments, enforcing the data dimension.
std::vector<double> collect_directions(const std::vector<std::string>& e_args,
                                       std::size_t dim) {
  std::vector<double> flat;
  for (const std::string& arg : e_args) {
    std::vector<double> v = parse_vector_arg(arg);
    if (v.size() != 2 * dim)
      throw UsageError("--e: vector '" + arg + "' has " +
                       std::to_string(v.size() / 2) + " coordinates, data has " +
                       std::to_string(dim));
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return flat;
}

int write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "revtri: cannot write '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --- certify ---------------------------------------------------------------

struct CertifyOpts {
  InputOpts in;
  std::string theorem = "auto";
  std::string rule = "auto";
  std::vector<std::string> e_args;
  std::string K, rho, m, M, theta, k;
  std::string out_path;
  std::string format = "text";
};

void print_certify_table(const revtri_report* rep) {
  std::printf("%-10s %-14s %-14s %-14s %-14s %-14s %-14s\n", "theorem", "factor",
              "lhs", "rhs", "slack", "tightness", "equality_resid");
  const std::size_t n = revtri_report_size(rep);
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string status = revtri_report_status(rep, i);
    const std::string theorem = revtri_report_theorem(rep, i);
    if (status == "certified") {
      double factor = 0, lhs = 0, rhs = 0, slack = 0, tight = 0, eq = 0, holds = 0;
      revtri_report_value(rep, i, "factor", &factor);
      revtri_report_value(rep, i, "lhs", &lhs);
      revtri_report_value(rep, i, "rhs", &rhs);
      revtri_report_value(rep, i, "slack", &slack);
      revtri_report_value(rep, i, "tightness", &tight);
      revtri_report_value(rep, i, "equality_residual", &eq);
      revtri_report_value(rep, i, "holds", &holds);
      std::printf("%-10s %-14.6g %-14.6g %-14.6g %-14.6g %-14.6g %-14.6g\n",
                  theorem.c_str(), factor, lhs, rhs, slack, tight, eq);
      if (holds == 0.0)
        notes.push_back(theorem + ": inequality does NOT hold within tolerance");
    } else {
      std::printf("%-10s %s\n", theorem.c_str(), status.c_str());
      notes.push_back(theorem + ": " + status + " — " + revtri_report_reason(rep, i));
    }
  }
  for (const std::string& note : notes) std::printf("%s\n", note.c_str());
  std::printf("result: %s\n", revtri_report_all_certified(rep) ? "PASS" : "FAIL");
}

int run_certify_cmd(const CertifyOpts& o, double env_rel_tol) {
  FunctionHandle fn;
  if (int rc = open_input(o.in, fn); rc != kExitOk) return rc;
  note_gauss(o.rule);

  const std::string& th = o.theorem;
  const bool ortho = th == "t31" || th == "c32" || th == "c33";

  auto reject = [&](const std::string& flag, const std::string& given) {
    if (!given.empty())
      throw UsageError(flag + " does not apply to theorem " + th);
  };
  if (th != "t21" && th != "p41") reject("--K", o.K);
  if (th != "c22" && th != "p43" && th != "c32") reject("--rho", o.rho);
  if (th != "c23" && th != "p44" && th != "c33") {
    reject("--m", o.m);
    reject("--M", o.M);
  }
  if (th != "karamata") reject("--theta", o.theta);
  if (th != "t31") reject("--k", o.k);

  revtri_certify_request req;
  revtri_certify_request_init(&req);
  req.theorem = th.c_str();
  req.rule = o.rule.c_str();
  if (env_rel_tol > 0) req.cert_rel_tol = env_rel_tol;

  std::vector<double> e_flat = collect_directions(o.e_args, revtri_function_dim(fn.fn));
  if (!e_flat.empty()) {
    req.e = e_flat.data();
    req.n_e = o.e_args.size();
  }

  auto single = [](const std::string& s, const std::string& what) {
    std::vector<double> v = parse_double_list(s, what);
    if (v.size() != 1) throw UsageError(what + " takes a single value");
    return v[0];
  };
  std::vector<double> rho_list, m_list, M_list, k_list;
  if (!o.K.empty()) req.K = single(o.K, "--K");
  if (!o.theta.empty()) req.theta = single(o.theta, "--theta");
  if (!o.rho.empty()) {
    if (th == "c32") {
      rho_list = parse_double_list(o.rho, "--rho");
      req.rho_list = rho_list.data();
      req.n_rho = rho_list.size();
    } else {
      req.rho = single(o.rho, "--rho");
    }
  }
  if (!o.m.empty() || !o.M.empty()) {
    if (o.m.empty() != o.M.empty())
      throw UsageError("--m and --M must be given together");
    if (th == "c33") {
      m_list = parse_double_list(o.m, "--m");
      M_list = parse_double_list(o.M, "--M");
      if (m_list.size() != M_list.size())
        throw UsageError("--m and --M need the same number of values");
      req.m_list = m_list.data();
      req.M_list = M_list.data();
      req.n_band = m_list.size();
    } else {
      req.m = single(o.m, "--m");
      req.M = single(o.M, "--M");
    }
  }
  if (!o.k.empty()) {
    k_list = parse_double_list(o.k, "--k");
    req.k_list = k_list.data();
    req.n_k = k_list.size();
  }
  (void)ortho;

  ReportHandle rep;
  if (revtri_status st = revtri_certify(fn.fn, &req, &rep.rep); st != REVTRI_OK)
    return fail_status(st);

  char* json = nullptr;
  if (revtri_status st = revtri_report_to_json(rep.rep, &json); st != REVTRI_OK)
    return fail_status(st);
  std::string json_text = json;
  revtri_string_free(json);

  if (!o.out_path.empty())
    if (int rc = write_text_file(o.out_path, json_text); rc != kExitOk) return rc;

  if (o.format == "json")
    std::fputs(json_text.c_str(), stdout);
  else
    print_certify_table(rep.rep);

  return revtri_report_all_certified(rep.rep) ? kExitOk : kExitNotCertified;
}

// --- estimate --------------------------------------------------------------

struct EstimateOpts {
  InputOpts in;
  std::vector<std::string> e_args;
  std::string rule = "auto";
};

int run_estimate_cmd(const EstimateOpts& o) {
  FunctionHandle fn;
  if (int rc = open_input(o.in, fn); rc != kExitOk) return rc;
  note_gauss(o.rule);

  std::vector<double> e_flat = collect_directions(o.e_args, revtri_function_dim(fn.fn));

  ReportHandle rep;
  revtri_status st =
      revtri_estimate(fn.fn, e_flat.empty() ? nullptr : e_flat.data(),
                      o.e_args.size(), o.rule.c_str(), &rep.rep);
  if (st != REVTRI_OK) return fail_status(st);

  const std::size_t dim = revtri_report_input_dim(rep.rep);
  std::vector<double> e(2 * dim, 0.0);
  if (revtri_report_direction(rep.rep, e.data()) == REVTRI_OK) {
    std::string text = "e =";
    for (std::size_t i = 0; i < dim; ++i) {
      text += " (" + fmt17(e[2 * i]) + ", " + fmt17(e[2 * i + 1]) + ")";
    }
    std::printf("%s\n", text.c_str());
  } else {
    std::printf("e: unavailable (%s)\n", revtri_last_error());
  }

  auto print_simple = [&](const char* label, const char* key) {
    double v = 0;
    if (revtri_report_estimator(rep.rep, key, &v) == REVTRI_OK)
      std::printf("%s = %s\n", label, fmt17(v).c_str());
    else
      std::printf("%s: inapplicable (%s)\n", label, revtri_last_error());
  };
  print_simple("K*", "K");
  print_simple("rho*", "rho");

  double m = 0, M = 0, factor = 0;
  if (revtri_report_estimator(rep.rep, "band_m", &m) == REVTRI_OK &&
      revtri_report_estimator(rep.rep, "band_M", &M) == REVTRI_OK &&
      revtri_report_estimator(rep.rep, "band_factor", &factor) == REVTRI_OK) {
    std::printf("band: m = %s, M = %s, factor = %s\n", fmt17(m).c_str(),
                fmt17(M).c_str(), fmt17(factor).c_str());
  } else {
    std::printf("band: inapplicable (%s)\n", revtri_last_error());
  }

  print_simple("theta*", "theta");

  double count = 0;
  if (revtri_report_estimator(rep.rep, "k_count", &count) == REVTRI_OK) {
    std::string text = "k =";
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
      double v = 0;
      revtri_report_estimator(rep.rep, ("k" + std::to_string(i)).c_str(), &v);
      text += (i ? ", " : " ") + fmt17(v);
    }
    std::printf("%s\n", text.c_str());
  } else {
    std::printf("k: inapplicable (%s)\n", revtri_last_error());
  }
  return kExitOk;
}

// --- sweep -----------------------------------------------------------------

struct SweepOpts {
  std::string family;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string theorem;
  std::string rule = "auto";
  std::string out_path;
  double a = 0.0;
  double b = 1.0;
  bool interval_given = false;
  int nodes = 129;
};

int run_sweep_cmd(const SweepOpts& o, double env_rel_tol) {
  std::string family = o.family;
  std::string theorem = o.theorem;
  std::string swept_key;
  if (o.param == "theta") {
    if (family.empty()) family = "complex_arc";
    if (theorem.empty()) theorem = "karamata";
    if (o.interval_given)
      throw UsageError("theta sweeps fix the interval to [-theta, theta]");
    if (!(o.from > 0) || !(o.to < std::acos(-1.0) / 2))
      throw UsageError("theta sweep range must lie in (0, pi/2)");
  } else if (o.param == "rho") {
    if (family.empty()) family = "disk_orbit";
    if (theorem.empty()) theorem = "c22";
    swept_key = "r";
    if (!(o.from > 0) || !(o.to < 1))
      throw UsageError("rho sweep range must lie in (0, 1)");
  } else if (o.param == "M") {
    if (family.empty()) family = "band_equality";
    if (theorem.empty()) theorem = "c23";
    swept_key = "M";
  } else if (o.param == "K") {
    if (family.empty()) family = "two_piece_equality";
    if (theorem.empty()) theorem = "t21";
    swept_key = "K";
    if (!(o.from >= 1)) throw UsageError("K sweep range must start at 1 or above");
  }
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(o.from <= o.to)) throw UsageError("--from must not exceed --to");
  if (!swept_key.empty() && family.find(swept_key + "=") != std::string::npos)
    throw UsageError("remove '" + swept_key + "=' from --family; --param " + o.param +
                     " controls it");
  note_gauss(o.rule);

  std::ostringstream csv;
  csv << "param,factor,lhs,rhs,tightness,slack\n";

  for (int i = 0; i < o.steps; ++i) {
    const double v =
        o.steps == 1 ? o.from : o.from + (o.to - o.from) * i / (o.steps - 1);
    std::string spec = family;
    if (!swept_key.empty())
      spec += (spec.find(':') == std::string::npos ? ":" : ",") + swept_key + "=" +
              fmt17(v);
    const double a = o.param == "theta" ? -v : o.a;
    const double b = o.param == "theta" ? v : o.b;

    FunctionHandle fn;
    revtri_status st =
        revtri_function_from_family(spec.c_str(), a, b, o.nodes, &fn.fn);
    if (st != REVTRI_OK) {
      std::cerr << "revtri: sweep failed at " << o.param << " = " << fmt17(v) << ": "
                << revtri_last_error() << "\n";
      return kExitUsage;
    }

    revtri_certify_request req;
    revtri_certify_request_init(&req);
    req.theorem = theorem.c_str();
    req.rule = o.rule.c_str();
    if (env_rel_tol > 0) req.cert_rel_tol = env_rel_tol;

    ReportHandle rep;
    if ((st = revtri_certify(fn.fn, &req, &rep.rep)) != REVTRI_OK) {
      std::cerr << "revtri: sweep failed at " << o.param << " = " << fmt17(v) << ": "
                << revtri_last_error() << "\n";
      return exit_for_status(st);
    }
    const std::string status = revtri_report_status(rep.rep, 0);
    if (status != "certified") {
      std::cerr << "revtri: sweep " << status << " at " << o.param << " = " << fmt17(v)
                << ": " << revtri_report_reason(rep.rep, 0) << "\n";
      return kExitNotCertified;
    }
    double factor = 0, lhs = 0, rhs = 0, tight = 0, slack = 0;
    revtri_report_value(rep.rep, 0, "factor", &factor);
    revtri_report_value(rep.rep, 0, "lhs", &lhs);
    revtri_report_value(rep.rep, 0, "rhs", &rhs);
    revtri_report_value(rep.rep, 0, "tightness", &tight);
    revtri_report_value(rep.rep, 0, "slack", &slack);
    csv << fmt17(v) << ',' << fmt17(factor) << ',' << fmt17(lhs) << ',' << fmt17(rhs)
        << ',' << fmt17(tight) << ',' << fmt17(slack) << '\n';
  }

  if (!o.out_path.empty()) return write_text_file(o.out_path, csv.str());
  std::fputs(csv.str().c_str(), stdout);
  return kExitOk;
}

// --- convergence -----------------------------------------------------------

struct ConvergenceOpts {
  std::string family;
  std::string rule;
  double a = 0.0;
  double b = 1.0;
  std::string sizes = "17,33,65,129";
};

int run_convergence_cmd(const ConvergenceOpts& o) {
  std::vector<std::size_t> sizes;
  for (const std::string& part : split(o.sizes, ',')) {
    double v = parse_double_token(part, "--sizes");
    if (v != std::floor(v) || v < 2)
      throw UsageError("--sizes: '" + part + "' is not a valid grid size");
    sizes.push_back(static_cast<std::size_t>(v));
  }

  double order = 0.0;
  int exact = 0;
  revtri_status st = revtri_convergence_order(o.family.c_str(), o.a, o.b,
                                              o.rule.c_str(), sizes.data(),
                                              sizes.size(), &order, &exact);
  if (st != REVTRI_OK) return fail_status(st);

  const double lo = o.rule == "simpson" ? 3.5 : 1.8;
  const double hi = o.rule == "simpson" ? 4.5 : 2.2;
  if (exact) {
    std::printf("order = exact (errors at rounding level)\n");
    return kExitOk;
  }
  std::printf("order = %.4f (expected [%.1f, %.1f] for %s)\n", order, lo, hi,
              o.rule.c_str());
  return order >= lo && order <= hi ? kExitOk : kExitNotCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certificates for reverses of the continuous triangle "
               "inequality"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(revtri_version()); });

  double env_rel_tol = 0.0;
  if (const char* env = std::getenv("REVTRI_TOL"); env && *env) {
    char* end = nullptr;
    env_rel_tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(env_rel_tol > 0) ||
        !std::isfinite(env_rel_tol)) {
      std::cerr << "revtri: invalid REVTRI_TOL '" << env << "'\n";
      return kExitUsage;
    }
  }

  CertifyOpts certify;
  auto* certify_cmd =
      app.add_subcommand("certify", "Certify reverse-triangle-inequality factors");
  add_input_options(certify_cmd, certify.in);
  certify_cmd
      ->add_option("--theorem", certify.theorem,
                   "auto|t21|c22|c23|t31|c32|c33|p41|karamata|p43|p44")
      ->capture_default_str();
  certify_cmd
      ->add_option("--rule", certify.rule,
                   "auto|step|trapezoid|simpson|gauss:ORDER:PANELS")
      ->capture_default_str();
  certify_cmd->add_option("--e", certify.e_args,
                          "Unit direction 're,im;re,im;...' (repeat for families)");
  certify_cmd->add_option("--K", certify.K, "Cone constant (t21/p41)");
  certify_cmd->add_option("--rho", certify.rho,
                          "Disk radius (c22/p43); comma list for c32");
  certify_cmd->add_option("--m", certify.m,
                          "Band lower bound (c23/p44); comma list for c33");
  certify_cmd->add_option("--M", certify.M,
                          "Band upper bound (c23/p44); comma list for c33");
  certify_cmd->add_option("--theta", certify.theta, "Arc half-angle (karamata)");
  certify_cmd->add_option("--k", certify.k, "Cone coefficients, comma list (t31)");
  certify_cmd->add_option("--out", certify.out_path, "Write the JSON report here");
  certify_cmd->add_option("--format", certify.format, "Stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  EstimateOpts estimate;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "Estimate optimal hypothesis parameters");
  add_input_options(estimate_cmd, estimate.in);
  estimate_cmd->add_option("--e", estimate.e_args,
                           "Unit direction(s) 're,im;re,im;...'");
  estimate_cmd->add_option("--rule", estimate.rule, "Quadrature rule")
      ->capture_default_str();

  SweepOpts sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Certify a family across a parameter range");
  sweep_cmd->add_option("--family", sweep.family,
                        "Base family (default depends on --param)");
  sweep_cmd->add_option("--param", sweep.param, "theta|rho|M|K")
      ->required()
      ->check(CLI::IsMember({"theta", "rho", "M", "K"}));
  sweep_cmd->add_option("--from", sweep.from, "First parameter value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last parameter value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of rows")->required();
  sweep_cmd->add_option("--theorem", sweep.theorem,
                        "Theorem to certify (default depends on --param)");
  sweep_cmd->add_option("--rule", sweep.rule, "Quadrature rule")
      ->capture_default_str();
  auto* sweep_a = sweep_cmd->add_option("--a", sweep.a, "Interval start");
  auto* sweep_b = sweep_cmd->add_option("--b", sweep.b, "Interval end");
  sweep_cmd->add_option("--nodes", sweep.nodes, "Grid size per row")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_path, "Write CSV here (default stdout)");

  ConvergenceOpts convergence;
  auto* convergence_cmd =
      app.add_subcommand("convergence", "Measure a rule's empirical order");
  convergence_cmd
      ->add_option("--family", convergence.family, "Smooth family to integrate")
      ->required();
  convergence_cmd->add_option("--rule", convergence.rule, "trapezoid|simpson")
      ->required()
      ->check(CLI::IsMember({"trapezoid", "simpson"}));
  convergence_cmd->add_option("--a", convergence.a, "Interval start")
      ->capture_default_str();
  convergence_cmd->add_option("--b", convergence.b, "Interval end")
      ->capture_default_str();
  convergence_cmd->add_option("--sizes", convergence.sizes, "Grid sizes, comma list")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (certify_cmd->parsed()) return run_certify_cmd(certify, env_rel_tol);
    if (estimate_cmd->parsed()) return run_estimate_cmd(estimate);
    if (sweep_cmd->parsed()) {
      sweep.interval_given = sweep_a->count() > 0 || sweep_b->count() > 0;
      return run_sweep_cmd(sweep, env_rel_tol);
    }
    if (convergence_cmd->parsed()) return run_convergence_cmd(convergence);
  } catch (const UsageError& e) {
    std::cerr << "revtri: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
