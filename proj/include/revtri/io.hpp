/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_IO_HPP
#define REVTRI_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "revtri/certificates.hpp"

namespace revtri::io {

inline constexpr const char* kToolName = "revtri";
inline constexpr const char* kToolVersion = "0.1.0";

// --- function files --------------------------------------------------------

/// Loads a sampled function from a JSON or CSV file.  `format` is "json",
/// "csv", or empty to infer from the extension.  Throws IoError when the
/// file cannot be read and ParseError (with location context) when the
/// content is malformed.
SampledFunction load_function(const std::string& path, const std::string& format = "");

/// Writes the canonical JSON representation (17-significant-digit numbers;
/// deterministic byte-for-byte).  save(load(F)) is node-for-node identical.
void save_function(const SampledFunction& f, const std::string& path);

SampledFunction function_from_json_text(const std::string& text, const std::string& name);
SampledFunction function_from_csv_text(const std::string& text, const std::string& name);
std::string function_to_json(const SampledFunction& f);

// --- family spec strings ---------------------------------------------------

/// Convenience family available on the command line only: the step function
/// taking sqrt(mM) e^{+i theta} then sqrt(mM) e^{-i theta} on the two
/// halves of [a, b], cos theta = 2 sqrt(mM)/(M+m).  It attains equality in
/// the band-form reverse inequality for the band [m, M].
struct BandEqualityFamily {
  double m = 1.0;
  double M = 1.0;
};

using CliFamily = std::variant<FamilySpec, BandEqualityFamily>;

/// Parses "name:key=value,key=value".  Vector values use ';' between
/// coordinates and 're/im' for complex parts (e.g. "e=0.6/0.8"); lists of
/// vectors use '|'.  Families: constant, complex_arc, disk_orbit,
/// two_piece_equality, ortho_mix, polynomial, band_equality.
CliFamily parse_family(const std::string& spec);

/// Samples a parsed family on a uniform grid of `nodes` points over [a, b].
SampledFunction sample_cli_family(const CliFamily& family, double a, double b, int nodes);

// --- quadrature rule tokens -------------------------------------------------

/// Parses "step" | "trapezoid" | "simpson" | "gauss:ORDER:PANELS".
QuadratureRule parse_rule_token(const std::string& token);

/// Rule named by `token`, where ""/"auto" picks step for step-kind data,
/// else simpson when the subinterval count is even and trapezoid otherwise.
QuadratureRule resolve_rule_token(const SampledFunction& f, const std::string& token);

// --- certification requests and reports ------------------------------------

struct CertifyRequest {
  std::string theorem = "auto";
  QuadratureRule rule;        ///< used when rule_auto is false
  bool rule_auto = true;      ///< pick step/simpson/trapezoid from the data
  std::vector<Vec> e_list;    ///< supplied directions (orthonormal family for t31/c32/c33)
  std::optional<double> K, rho, m, M, theta;
  std::vector<double> rho_list, m_list, M_list, k_list;
  ToleranceConfig tol;
};

enum class EntryStatus { Certified, Refused, Inapplicable };

struct ReportEntry {
  std::string theorem;
  EntryStatus status = EntryStatus::Certified;
  std::optional<Certificate> certificate;     ///< Certified
  std::optional<CheckReport> failed_check;    ///< Refused
  std::string reason;                         ///< Refused / Inapplicable
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, std::vector<double>>> list_params;
};

struct EstimatorValue {
  bool ok = false;
  double value = 0.0;
  std::string reason;
};

struct BandEstimate {
  bool ok = false;
  double m = 0.0, M = 0.0, factor = 0.0;
  std::string reason;
};

struct ListEstimate {
  bool ok = false;
  std::vector<double> values;
  std::string reason;
};

/// Estimated optimal parameters against a direction (and an orthonormal
/// family, supplied or Gram-Schmidt-derived from the integral direction).
struct EstimatorSummary {
  std::optional<Vec> e;
  std::string e_reason;  ///< why no direction is available, when empty
  EstimatorValue K, rho, theta;
  BandEstimate band;
  ListEstimate k;
};

struct InputDigest {
  double a = 0.0, b = 0.0;
  int dim = 0, nodes = 0;
  bool step = false;
};

struct Report {
  InputDigest input;
  std::string rule;
  double cert_abs_tol = 0.0, cert_rel_tol = 0.0;
  std::vector<ReportEntry> entries;
  EstimatorSummary estimators;

  bool all_certified() const {
    for (const auto& e : entries)
      if (e.status != EntryStatus::Certified || !e.certificate->holds) return false;
    return !entries.empty();
  }
};

/// Runs one certification request.  Hypothesis refusals and inapplicable
/// parameter estimates become report entries, not exceptions; malformed
/// requests (unknown theorem, partial parameter sets, bad vectors) throw
/// ArgumentError.
Report run_certify(const SampledFunction& f, const CertifyRequest& req);

/// Estimator-only summary (the `estimate` subcommand).
EstimatorSummary run_estimate(const SampledFunction& f, const CertifyRequest& req);

/// Report with no certificate entries and the estimator summary filled.
Report estimate_report(const SampledFunction& f, const CertifyRequest& req);

/// Canonical report serialization: fixed key order, 17-significant-digit
/// numbers, no timestamps; identical inputs give identical bytes.
std::string report_to_json(const Report& report);

/// Wraps a single certificate (used for the discrete finite-sum entry
/// point, which bypasses run_certify).
Report report_for_certificate(const SampledFunction& f, const Certificate& cert,
                              const std::string& rule_desc, const ToleranceConfig& tol);

}  // namespace revtri::io

#endif  // REVTRI_IO_HPP
