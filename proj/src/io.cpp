/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "revtri/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace revtri::io {

namespace {

// --- small string utilities ------------------------------------------------

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
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

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Strict full-token double parse; throws ParseError with the given context.
double parse_number(const std::string& token, const std::string& ctx) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError(ctx + ": invalid number ''");
  const char* begin = t.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + t.size()) throw ParseError(ctx + ": invalid number '" + t + "'");
  return v;
}

double parse_finite(const std::string& token, const std::string& ctx) {
  double v = parse_number(token, ctx);
  if (!std::isfinite(v)) throw ParseError(ctx + ": non-finite value");
  return v;
}

// --- deterministic JSON writer ---------------------------------------------

class JsonWriter {
 public:
  void begin_object() { open('{', '}'); }
  void end_object() { close('}'); }
  void begin_array() { open('[', ']'); }
  void end_array() { close(']'); }

  void key(const std::string& name) {
    next_item();
    quoted(name);
    out_ += ": ";
    pending_value_ = true;
  }

  void number(double v) {
    next_item();
    if (std::isfinite(v))
      out_ += fmt17(v);
    else
      out_ += "null";
  }

  void integer(long long v) {
    next_item();
    out_ += std::to_string(v);
  }

  void boolean(bool b) {
    next_item();
    out_ += b ? "true" : "false";
  }

  void string(const std::string& s) {
    next_item();
    quoted(s);
  }

  void null() {
    next_item();
    out_ += "null";
  }

  void push_inline() { ++inline_depth_; }
  void pop_inline() { --inline_depth_; }

  std::string take() {
    out_ += '\n';
    return std::move(out_);
  }

 private:
  struct Frame {
    int items = 0;
  };

  void open(char c, char) {
    next_item();
    out_ += c;
    frames_.push_back({});
  }

  void close(char c) {
    bool had_items = frames_.back().items > 0;
    frames_.pop_back();
    if (had_items && inline_depth_ == 0) newline_indent();
    out_ += c;
  }

  void next_item() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (frames_.empty()) return;
    if (frames_.back().items > 0) out_ += ',';
    ++frames_.back().items;
    if (inline_depth_ == 0)
      newline_indent_inner();
    else if (frames_.back().items > 1)
      out_ += ' ';
  }

  void newline_indent_inner() {
    out_ += '\n';
    out_.append(2 * frames_.size(), ' ');
  }

  void newline_indent() {
    out_ += '\n';
    out_.append(2 * frames_.size(), ' ');
  }

  void quoted(const std::string& s) {
    out_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += ch;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<Frame> frames_;
  int inline_depth_ = 0;
  bool pending_value_ = false;
};

void write_vec_array(JsonWriter& w, const Vec& v) {
  w.push_inline();
  w.begin_array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    w.begin_array();
    w.number(v[i].real());
    w.number(v[i].imag());
    w.end_array();
  }
  w.end_array();
  w.pop_inline();
}

// --- JSON function files ---------------------------------------------------

using nlohmann::json;

const json& need_key(const json& j, const char* key, const std::string& name) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(name + ": missing key '" + key + "'");
  return *it;
}

double need_number(const json& v, const std::string& ctx) {
  if (!v.is_number()) throw ParseError(ctx + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(ctx + ": non-finite value");
  return d;
}

}  // namespace

SampledFunction function_from_json_text(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(name + ": " + ex.what());
  }
  if (!j.is_object()) throw ParseError(name + ": top level must be an object");

  double a = need_number(need_key(j, "a", name), name + ": 'a'");
  double b = need_number(need_key(j, "b", name), name + ": 'b'");
  const json& jdim = need_key(j, "dim", name);
  if (!jdim.is_number_integer() || jdim.get<long long>() < 1 ||
      jdim.get<long long>() > 1000000)
    throw ParseError(name + ": 'dim' must be a positive integer");
  std::size_t dim = jdim.get<std::size_t>();

  const json& jfield = need_key(j, "field", name);
  if (!jfield.is_string()) throw ParseError(name + ": 'field' must be a string");
  const std::string field = jfield.get<std::string>();
  if (field != "real" && field != "complex")
    throw ParseError(name + ": 'field' must be \"real\" or \"complex\"");

  const json& jkind = need_key(j, "kind", name);
  if (!jkind.is_string()) throw ParseError(name + ": 'kind' must be a string");
  const std::string kind_s = jkind.get<std::string>();
  if (kind_s != "smooth" && kind_s != "step")
    throw ParseError(name + ": 'kind' must be \"smooth\" or \"step\"");
  Kind kind = kind_s == "step" ? Kind::Step : Kind::Smooth;

  const json& samples = need_key(j, "samples", name);
  if (!samples.is_array()) throw ParseError(name + ": 'samples' must be an array");
  if (samples.size() < 2) throw ParseError(name + ": need at least 2 samples");

  std::vector<double> ts;
  std::vector<Vec> values;
  ts.reserve(samples.size());
  values.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string ctx = name + ": samples[" + std::to_string(i) + "]";
    const json& s = samples[i];
    if (!s.is_object()) throw ParseError(ctx + " must be an object");
    double t = need_number(need_key(s, "t", ctx), ctx + ".t");
    if (!ts.empty() && t <= ts.back())
      throw ParseError(name + ": samples out of order at index " + std::to_string(i));
    ts.push_back(t);

    const json& val = need_key(s, "value", ctx);
    if (!val.is_array() || val.size() != dim)
      throw ParseError(ctx + ".value must be an array of length " + std::to_string(dim));
    std::vector<Complex> coords(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      const std::string cctx = ctx + ".value[" + std::to_string(c) + "]";
      if (field == "real") {
        coords[c] = Complex(need_number(val[c], cctx), 0.0);
      } else {
        const json& pair = val[c];
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError(cctx + " must be a [re, im] pair");
        coords[c] = Complex(need_number(pair[0], cctx + "[0]"),
                            need_number(pair[1], cctx + "[1]"));
      }
    }
    values.emplace_back(std::move(coords));
  }

  if (ts.front() != a)
    throw ParseError(name + ": first sample t (" + fmt17(ts.front()) +
                     ") must equal a (" + fmt17(a) + ")");
  if (ts.back() != b)
    throw ParseError(name + ": last sample t (" + fmt17(ts.back()) +
                     ") must equal b (" + fmt17(b) + ")");

  return SampledFunction(Grid(std::move(ts)), std::move(values), kind);
}

SampledFunction function_from_csv_text(const std::string& text, const std::string& name) {
  std::vector<std::pair<std::string, std::string>> meta;
  std::string header;
  std::vector<std::string> rows;

  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string rest = trim(t.substr(1));
      std::size_t eq = rest.find('=');
      if (eq != std::string::npos)
        meta.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
      continue;
    }
    if (header.empty())
      header = t;
    else
      rows.push_back(t);
  }
  if (header.empty()) throw ParseError(name + ": missing header row");

  std::vector<std::string> cols = split(header, ',');
  for (auto& c : cols) c = trim(c);
  if (cols.empty() || cols[0] != "t")
    throw ParseError(name + ": first header column must be 't'");
  if (cols.size() < 2) throw ParseError(name + ": no value columns in header");

  const bool complex_cols = cols[1] == "v0_re";
  std::size_t dim = 0;
  if (complex_cols) {
    if ((cols.size() - 1) % 2 != 0)
      throw ParseError(name + ": complex header needs re/im column pairs");
    dim = (cols.size() - 1) / 2;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string re = "v" + std::to_string(i) + "_re";
      const std::string im = "v" + std::to_string(i) + "_im";
      if (cols[1 + 2 * i] != re || cols[2 + 2 * i] != im)
        throw ParseError(name + ": bad header column " + std::to_string(2 + 2 * i) +
                         ": expected '" + re + "," + im + "'");
    }
  } else {
    dim = cols.size() - 1;
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string want = "v" + std::to_string(i);
      if (cols[1 + i] != want)
        throw ParseError(name + ": bad header column " + std::to_string(2 + i) +
                         ": expected '" + want + "'");
    }
  }

  Kind kind = Kind::Smooth;
  for (const auto& [key, value] : meta) {
    if (key == "kind") {
      if (value == "step")
        kind = Kind::Step;
      else if (value == "smooth")
        kind = Kind::Smooth;
      else
        throw ParseError(name + ": kind metadata must be 'smooth' or 'step'");
    } else if (key == "field") {
      const std::string want = complex_cols ? "complex" : "real";
      if (value != want)
        throw ParseError(name + ": field metadata '" + value +
                         "' conflicts with the '" + want + "' header layout");
    }
    // Unknown metadata keys are ignored.
  }

  std::vector<double> ts;
  std::vector<Vec> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rctx = name + ": row " + std::to_string(r + 1);
    std::vector<std::string> parts = split(rows[r], ',');
    if (parts.size() != cols.size())
      throw ParseError(rctx + ": expected " + std::to_string(cols.size()) +
                       " columns, found " + std::to_string(parts.size()));
    double t = parse_finite(parts[0], rctx);
    if (!ts.empty() && t <= ts.back())
      throw ParseError(name + ": non-increasing grid at row " + std::to_string(r + 1));
    ts.push_back(t);

    std::vector<Complex> coords(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      if (complex_cols)
        coords[c] = Complex(parse_finite(parts[1 + 2 * c], rctx),
                            parse_finite(parts[2 + 2 * c], rctx));
      else
        coords[c] = Complex(parse_finite(parts[1 + c], rctx), 0.0);
    }
    values.emplace_back(std::move(coords));
  }
  if (ts.size() < 2) throw ParseError(name + ": need at least 2 sample rows");

  return SampledFunction(Grid(std::move(ts)), std::move(values), kind);
}

std::string function_to_json(const SampledFunction& f) {
  bool complex_values = false;
  for (const Vec& v : f.values())
    for (std::size_t c = 0; c < v.dim(); ++c)
      if (v[c].imag() != 0.0) complex_values = true;

  JsonWriter w;
  w.begin_object();
  w.key("a");
  w.number(f.grid().a());
  w.key("b");
  w.number(f.grid().b());
  w.key("dim");
  w.integer(static_cast<long long>(f.dim()));
  w.key("field");
  w.string(complex_values ? "complex" : "real");
  w.key("kind");
  w.string(f.kind() == Kind::Step ? "step" : "smooth");
  w.key("samples");
  w.begin_array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    w.begin_object();
    w.key("t");
    w.number(f.grid()[i]);
    w.key("value");
    w.push_inline();
    w.begin_array();
    const Vec& v = f.value(i);
    for (std::size_t c = 0; c < v.dim(); ++c) {
      if (complex_values) {
        w.begin_array();
        w.number(v[c].real());
        w.number(v[c].imag());
        w.end_array();
      } else {
        w.number(v[c].real());
      }
    }
    w.end_array();
    w.pop_inline();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

namespace {

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string infer_format(const std::string& path) {
  const std::string low = lowercase(path);
  auto ends_with = [&](const char* suffix) {
    const std::size_t n = std::string(suffix).size();
    return low.size() >= n && low.compare(low.size() - n, n, suffix) == 0;
  };
  if (ends_with(".json")) return "json";
  if (ends_with(".csv")) return "csv";
  throw ArgumentError("cannot infer format of '" + path + "' (expected .json or .csv)");
}

}  // namespace

SampledFunction load_function(const std::string& path, const std::string& format) {
  std::string fmt = format.empty() ? infer_format(path) : lowercase(format);
  if (fmt != "json" && fmt != "csv")
    throw ArgumentError("unknown input format '" + format + "'");

  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  const std::string text = buf.str();

  try {
    return fmt == "json" ? function_from_json_text(text, path)
                         : function_from_csv_text(text, path);
  } catch (const ArgumentError& ex) {
    // Structural validation (grid, dims) reports as a parse failure here.
    throw ParseError(std::string(path) + ": " + ex.what());
  }
}

void save_function(const SampledFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << function_to_json(f);
  if (!out) throw IoError("cannot write '" + path + "'");
}

// --- family specs ----------------------------------------------------------

namespace {

Complex parse_coord(const std::string& token, const std::string& ctx) {
  std::vector<std::string> parts = split(token, '/');
  if (parts.size() == 1) return Complex(parse_finite(parts[0], ctx), 0.0);
  if (parts.size() == 2)
    return Complex(parse_finite(parts[0], ctx), parse_finite(parts[1], ctx));
  throw ParseError(ctx + ": coordinate '" + token + "' must be 're' or 're/im'");
}

Vec parse_vec(const std::string& token, const std::string& ctx) {
  std::vector<std::string> parts = split(token, ';');
  if (parts.empty() || (parts.size() == 1 && trim(parts[0]).empty()))
    throw ParseError(ctx + ": empty vector");
  std::vector<Complex> coords;
  coords.reserve(parts.size());
  for (const std::string& p : parts) coords.push_back(parse_coord(p, ctx));
  return Vec(std::move(coords));
}

std::vector<Vec> parse_vec_list(const std::string& token, const std::string& ctx) {
  std::vector<Vec> out;
  for (const std::string& part : split(token, '|')) out.push_back(parse_vec(part, ctx));
  return out;
}

std::vector<double> parse_scalar_list(const std::string& token, const std::string& ctx) {
  std::vector<double> out;
  for (const std::string& part : split(token, ';')) out.push_back(parse_finite(part, ctx));
  return out;
}

/// Key-value store for family parameters with used-key tracking.
class ParamBag {
 public:
  ParamBag(const std::string& family, const std::string& rest) : family_(family) {
    if (trim(rest).empty()) return;
    for (const std::string& part : split(rest, ',')) {
      std::size_t eq = part.find('=');
      if (eq == std::string::npos)
        throw ArgumentError("family parameter '" + trim(part) + "' is not key=value");
      std::string key = trim(part.substr(0, eq));
      if (key.empty()) throw ArgumentError("family parameter with empty key");
      for (const auto& [k, v] : entries_)
        if (k == key) throw ArgumentError("duplicate family parameter '" + key + "'");
      entries_.emplace_back(key, trim(part.substr(eq + 1)));
    }
  }

  std::optional<std::string> get(const std::string& key) {
    for (auto& [k, v] : entries_)
      if (k == key) {
        used_.push_back(k);
        return v;
      }
    return std::nullopt;
  }

  std::string require(const std::string& key) {
    auto v = get(key);
    if (!v)
      throw ArgumentError("family '" + family_ + "' requires parameter '" + key + "'");
    return *v;
  }

  double scalar_or(const std::string& key, double fallback) {
    auto v = get(key);
    return v ? parse_finite(*v, family_ + ":" + key) : fallback;
  }

  void finish() const {
    for (const auto& [k, v] : entries_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw ArgumentError("family '" + family_ + "' does not take parameter '" + k + "'");
  }

  const std::string& family() const { return family_; }

 private:
  std::string family_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> used_;
};

}  // namespace

CliFamily parse_family(const std::string& spec) {
  std::size_t colon = spec.find(':');
  const std::string name = trim(spec.substr(0, colon));
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  ParamBag bag(name, rest);
  CliFamily out;

  if (name == "constant") {
    out = FamilySpec(ConstantFamily{parse_vec(bag.require("v"), "constant:v")});
  } else if (name == "complex_arc") {
    ComplexArcFamily fam;
    fam.omega = bag.scalar_or("omega", 1.0);
    fam.phi0 = bag.scalar_or("phi0", 0.0);
    out = FamilySpec(fam);
  } else if (name == "disk_orbit") {
    DiskOrbitFamily fam;
    auto e = bag.get("e");
    fam.e = e ? parse_vec(*e, "disk_orbit:e") : Vec{Complex(1.0, 0.0)};
    fam.r = parse_finite(bag.require("r"), "disk_orbit:r");
    fam.omega = bag.scalar_or("omega", 1.0);
    out = FamilySpec(fam);
  } else if (name == "two_piece_equality") {
    out = FamilySpec(
        TwoPieceEqualityFamily{parse_finite(bag.require("K"), "two_piece_equality:K")});
  } else if (name == "ortho_mix") {
    OrthoMixFamily fam;
    fam.c = parse_scalar_list(bag.require("c"), "ortho_mix:c");
    fam.family = parse_vec_list(bag.require("E"), "ortho_mix:E");
    out = FamilySpec(fam);
  } else if (name == "polynomial") {
    out = FamilySpec(
        PolynomialFamily{parse_vec_list(bag.require("coeffs"), "polynomial:coeffs")});
  } else if (name == "band_equality") {
    BandEqualityFamily fam;
    fam.m = bag.scalar_or("m", 1.0);
    fam.M = parse_finite(bag.require("M"), "band_equality:M");
    out = fam;
  } else {
    throw ArgumentError("unknown family '" + name + "'");
  }
  bag.finish();
  return out;
}

namespace {

SampledFunction sample_band_equality(const BandEqualityFamily& fam, double a, double b,
                                     int nodes) {
  if (!(fam.m > 0.0) || !(fam.M >= fam.m))
    throw ArgumentError("band_equality needs 0 < m <= M");
  if (!(a < b)) throw ArgumentError("band_equality needs a < b");
  if (nodes < 2) throw ArgumentError("band_equality needs at least 2 nodes");
  const double s = std::sqrt(fam.m * fam.M);
  const double cosine = std::min(1.0, 2.0 * s / (fam.M + fam.m));
  const double theta = std::acos(cosine);
  const double mid = a + (b - a) / 2.0;
  Grid grid = Grid::uniform(a, b, static_cast<std::size_t>(nodes)).with_node(mid);
  std::vector<Vec> values;
  values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double sign = grid[i] < mid ? 1.0 : -1.0;
    values.push_back(Vec{Complex(s * std::cos(theta), s * sign * std::sin(theta))});
  }
  return SampledFunction(std::move(grid), std::move(values), Kind::Step);
}

}  // namespace

SampledFunction sample_cli_family(const CliFamily& family, double a, double b, int nodes) {
  if (const auto* band = std::get_if<BandEqualityFamily>(&family))
    return sample_band_equality(*band, a, b, nodes);
  if (nodes < 2) throw ArgumentError("need at least 2 grid nodes");
  return sample_family(std::get<FamilySpec>(family),
                       Grid::uniform(a, b, static_cast<std::size_t>(nodes)));
}

// --- rule tokens ------------------------------------------------------------

QuadratureRule parse_rule_token(const std::string& token) {
  const std::string t = trim(token);
  if (t == "step") return QuadratureRule::step();
  if (t == "trapezoid") return QuadratureRule::trapezoid();
  if (t == "simpson") return QuadratureRule::simpson();
  if (t.rfind("gauss", 0) == 0) {
    std::vector<std::string> parts = split(t, ':');
    if (parts.size() != 3 || trim(parts[0]) != "gauss")
      throw ArgumentError("gauss rule must be 'gauss:ORDER:PANELS'");
    double order = parse_finite(parts[1], "gauss order");
    double panels = parse_finite(parts[2], "gauss panels");
    if (order != std::floor(order) || panels != std::floor(panels))
      throw ArgumentError("gauss order and panel count must be integers");
    QuadratureRule rule =
        QuadratureRule::gauss(static_cast<int>(order), static_cast<int>(panels));
    rule.validate();
    return rule;
  }
  throw ArgumentError("unknown quadrature rule '" + t + "'");
}

QuadratureRule resolve_rule_token(const SampledFunction& f, const std::string& token) {
  const std::string t = trim(token);
  if (t.empty() || t == "auto") {
    if (f.kind() == Kind::Step) return QuadratureRule::step();
    return (f.grid().size() - 1) % 2 == 0 ? QuadratureRule::simpson()
                                          : QuadratureRule::trapezoid();
  }
  return parse_rule_token(t);
}

// --- orchestration ---------------------------------------------------------

namespace {

QuadratureRule resolve_rule(const SampledFunction& f, const CertifyRequest& req) {
  if (!req.rule_auto) {
    req.rule.validate();
    return req.rule;
  }
  if (f.kind() == Kind::Step) return QuadratureRule::step();
  return (f.grid().size() - 1) % 2 == 0 ? QuadratureRule::simpson()
                                        : QuadratureRule::trapezoid();
}

InputDigest digest(const SampledFunction& f) {
  InputDigest d;
  d.a = f.grid().a();
  d.b = f.grid().b();
  d.dim = static_cast<int>(f.dim());
  d.nodes = static_cast<int>(f.grid().size());
  d.step = f.kind() == Kind::Step;
  return d;
}

/// Orthonormal completion of e against the standard basis (e first).
std::vector<Vec> complete_family(const Vec& e) {
  const std::size_t n = e.dim();
  std::vector<Vec> fam{normalize(e)};
  for (std::size_t axis = 0; axis < n && fam.size() < n; ++axis) {
    Vec v = Vec::unit_axis(n, axis);
    for (const Vec& u : fam) v -= u * inner(v, u);
    for (const Vec& u : fam) v -= u * inner(v, u);
    if (norm(v) > 1e-8) fam.push_back(normalize(v));
  }
  return fam;
}

Vec resolve_direction(const SampledFunction& f, const QuadratureRule& rule,
                      const CertifyRequest& req) {
  if (!req.e_list.empty()) {
    const Vec& e = req.e_list.front();
    if (e.dim() != f.dim())
      throw ArgumentError("direction has dimension " + std::to_string(e.dim()) +
                          ", data has dimension " + std::to_string(f.dim()));
    if (!validate_unit(e, req.tol.unit_tol))
      throw ArgumentError("direction e must be a unit vector");
    return e;
  }
  return direction_search(f, rule, req.tol).e;
}

std::vector<Vec> resolve_ortho_family(const SampledFunction& f, const QuadratureRule& rule,
                                      const CertifyRequest& req) {
  if (!req.e_list.empty()) {
    for (const Vec& e : req.e_list)
      if (e.dim() != f.dim())
        throw ArgumentError("family member has dimension " + std::to_string(e.dim()) +
                            ", data has dimension " + std::to_string(f.dim()));
    if (!validate_orthonormal(req.e_list, req.tol.ortho_tol))
      throw ArgumentError("supplied directions must form an orthonormal family");
    return req.e_list;
  }
  return complete_family(direction_search(f, rule, req.tol).e);
}

EstimatorSummary estimate_with_rule(const SampledFunction& f, const CertifyRequest& req,
                                    const QuadratureRule& rule) {
  EstimatorSummary out;
  std::optional<Vec> e;
  if (!req.e_list.empty()) {
    e = resolve_direction(f, rule, req);
  } else {
    try {
      e = direction_search(f, rule, req.tol).e;
    } catch (const Error& ex) {
      out.e_reason = ex.what();
    }
  }
  out.e = e;

  if (e) {
    try {
      out.K = {true, minimal_k(f, *e, req.tol), ""};
    } catch (const Error& ex) {
      out.K = {false, 0.0, ex.what()};
    }
    out.rho = {true, minimal_rho(f, *e, req.tol), ""};
    try {
      BandFit bf = band_fit(f, *e, req.tol);
      out.band = {true, bf.m, bf.M, bf.factor, ""};
    } catch (const Error& ex) {
      out.band = {false, 0.0, 0.0, 0.0, ex.what()};
    }
    try {
      std::vector<Vec> fam;
      if (req.e_list.size() >= 2) {
        fam = resolve_ortho_family(f, rule, req);
      } else {
        fam = complete_family(*e);
      }
      out.k = {true, ortho_coefficients(f, fam, req.tol), ""};
    } catch (const Error& ex) {
      out.k = {false, {}, ex.what()};
    }
  } else {
    const std::string why = "no direction available: " + out.e_reason;
    out.K = {false, 0.0, why};
    out.rho = {false, 0.0, why};
    out.band = {false, 0.0, 0.0, 0.0, why};
    out.k = {false, {}, why};
  }

  if (f.dim() == 1) {
    try {
      out.theta = {true, arc_bound(f), ""};
    } catch (const Error& ex) {
      out.theta = {false, 0.0, ex.what()};
    }
  } else {
    out.theta = {false, 0.0, "estimating an angle needs 1-dimensional complex data"};
  }
  return out;
}

void require_scalar_data(const SampledFunction& f, const std::string& theorem) {
  if (f.dim() != 1)
    throw InapplicableError("theorem " + theorem +
                            " applies to 1-dimensional complex data (input has dim " +
                            std::to_string(f.dim()) + ")");
}

Certificate dispatch_single(const SampledFunction& f, const CertifyRequest& req,
                            const QuadratureRule& rule, TheoremId id,
                            ReportEntry& entry) {
  const ToleranceConfig& tol = req.tol;
  switch (id) {
    case TheoremId::T2_1: {
      Vec e = resolve_direction(f, rule, req);
      double K = req.K ? *req.K : minimal_k(f, e, tol);
      entry.params.emplace_back("K", K);
      return certify_unit_vector(f, e, K, rule, tol);
    }
    case TheoremId::C2_2: {
      Vec e = resolve_direction(f, rule, req);
      double rho;
      if (req.rho) {
        rho = *req.rho;
      } else {
        rho = minimal_rho(f, e, tol);
        if (rho >= 1.0)
          throw InapplicableError("no admissible disk radius: rho* = " + fmt17(rho) +
                                  " is not below 1");
      }
      entry.params.emplace_back("rho", rho);
      return certify_disk(f, e, rho, rule, tol);
    }
    case TheoremId::C2_3: {
      if (req.m.has_value() != req.M.has_value())
        throw ArgumentError("band bounds m and M must be given together");
      Vec e = resolve_direction(f, rule, req);
      double m, M;
      if (req.m) {
        m = *req.m;
        M = *req.M;
      } else {
        BandFit bf = band_fit(f, e, tol);
        m = bf.m;
        M = bf.M;
      }
      entry.params.emplace_back("m", m);
      entry.params.emplace_back("M", M);
      return certify_band(f, e, m, M, rule, tol);
    }
    case TheoremId::T3_1: {
      std::vector<Vec> fam = resolve_ortho_family(f, rule, req);
      std::vector<double> k = req.k_list;
      if (k.empty())
        k = ortho_coefficients(f, fam, tol);
      else if (k.size() != fam.size())
        throw ArgumentError("got " + std::to_string(k.size()) + " coefficients for " +
                            std::to_string(fam.size()) + " family members");
      entry.list_params.emplace_back("k", k);
      return certify_ortho(f, fam, k, rule, tol);
    }
    case TheoremId::C3_2: {
      std::vector<Vec> fam = resolve_ortho_family(f, rule, req);
      std::vector<double> rho = req.rho_list;
      if (rho.empty()) {
        for (const Vec& e : fam) {
          double r = minimal_rho(f, e, tol);
          if (r >= 1.0)
            throw InapplicableError("family member " + std::to_string(rho.size()) +
                                    " needs disk radius " + fmt17(r) +
                                    ", which is not below 1");
          rho.push_back(r);
        }
      } else if (rho.size() != fam.size()) {
        throw ArgumentError("got " + std::to_string(rho.size()) + " radii for " +
                            std::to_string(fam.size()) + " family members");
      }
      entry.list_params.emplace_back("rho", rho);
      return certify_ortho_disk(f, fam, rho, rule, tol);
    }
    case TheoremId::C3_3: {
      if (req.m_list.empty() != req.M_list.empty())
        throw ArgumentError("band bound lists m and M must be given together");
      std::vector<Vec> fam = resolve_ortho_family(f, rule, req);
      std::vector<double> m = req.m_list, M = req.M_list;
      if (m.empty()) {
        for (const Vec& e : fam) {
          BandFit bf = band_fit(f, e, tol);
          m.push_back(bf.m);
          M.push_back(bf.M);
        }
      } else if (m.size() != fam.size() || M.size() != fam.size()) {
        throw ArgumentError("band bound lists must match the family size " +
                            std::to_string(fam.size()));
      }
      entry.list_params.emplace_back("m", m);
      entry.list_params.emplace_back("M", M);
      return certify_ortho_band(f, fam, m, M, rule, tol);
    }
    case TheoremId::P4_1: {
      require_scalar_data(f, "p41");
      Vec e = resolve_direction(f, rule, req);
      double K = req.K ? *req.K : minimal_k(f, e, tol);
      entry.params.emplace_back("K", K);
      return certify_complex(f, ComplexParams(UnitKParams{e, K}), rule, tol);
    }
    case TheoremId::Karamata: {
      require_scalar_data(f, "karamata");
      double theta = req.theta ? *req.theta : arc_bound(f);
      entry.params.emplace_back("theta", theta);
      return certify_complex(f, ComplexParams(ComplexArgParams{theta}), rule, tol);
    }
    case TheoremId::P4_3: {
      require_scalar_data(f, "p43");
      Vec e = resolve_direction(f, rule, req);
      double rho;
      if (req.rho) {
        rho = *req.rho;
      } else {
        rho = minimal_rho(f, e, tol);
        if (rho >= 1.0)
          throw InapplicableError("no admissible disk radius: rho* = " + fmt17(rho) +
                                  " is not below 1");
      }
      entry.params.emplace_back("rho", rho);
      return certify_complex(f, ComplexParams(DiskParams{e, rho}), rule, tol);
    }
    case TheoremId::P4_4: {
      require_scalar_data(f, "p44");
      if (req.m.has_value() != req.M.has_value())
        throw ArgumentError("band bounds m and M must be given together");
      Vec e = resolve_direction(f, rule, req);
      double m, M;
      if (req.m) {
        m = *req.m;
        M = *req.M;
      } else {
        BandFit bf = band_fit(f, e, tol);
        m = bf.m;
        M = bf.M;
      }
      entry.params.emplace_back("m", m);
      entry.params.emplace_back("M", M);
      ComplexRectParams rect;
      rect.alpha = e[0].real();
      rect.beta = e[0].imag();
      rect.m = m;
      rect.M = M;
      return certify_complex(f, ComplexParams(rect), rule, tol);
    }
    case TheoremId::DiazMetcalf:
      throw ArgumentError(
          "theorem diaz_metcalf takes explicit vector lists; use the discrete entry "
          "point");
  }
  throw Error("unreachable theorem dispatch");
}

}  // namespace

EstimatorSummary run_estimate(const SampledFunction& f, const CertifyRequest& req) {
  return estimate_with_rule(f, req, resolve_rule(f, req));
}

Report estimate_report(const SampledFunction& f, const CertifyRequest& req) {
  req.tol.validate();
  QuadratureRule rule = resolve_rule(f, req);
  Report rep;
  rep.input = digest(f);
  rep.rule = rule.describe();
  rep.cert_abs_tol = req.tol.cert_abs_tol;
  rep.cert_rel_tol = req.tol.cert_rel_tol;
  rep.estimators = estimate_with_rule(f, req, rule);
  return rep;
}

Report run_certify(const SampledFunction& f, const CertifyRequest& req) {
  req.tol.validate();
  QuadratureRule rule = resolve_rule(f, req);

  Report rep;
  rep.input = digest(f);
  rep.rule = rule.describe();
  rep.cert_abs_tol = req.tol.cert_abs_tol;
  rep.cert_rel_tol = req.tol.cert_rel_tol;
  rep.estimators = estimate_with_rule(f, req, rule);

  if (req.theorem == "auto") {
    if (req.e_list.size() > 1)
      throw ArgumentError("auto mode takes at most one direction");
    std::optional<Vec> e;
    if (!req.e_list.empty()) e = resolve_direction(f, rule, req);
    std::vector<AutoEntry> entries = auto_certify(f, e, rule, req.tol);
    for (AutoEntry& ae : entries) {
      ReportEntry re;
      re.theorem = theorem_token(ae.theorem);
      re.params = std::move(ae.params);
      if (ae.applicable()) {
        re.status = EntryStatus::Certified;
        re.certificate = std::move(ae.certificate);
      } else {
        re.status = EntryStatus::Inapplicable;
        re.reason = std::move(ae.reason);
      }
      rep.entries.push_back(std::move(re));
    }
    return rep;
  }

  TheoremId id = theorem_from_token(req.theorem);
  ReportEntry entry;
  entry.theorem = req.theorem;
  try {
    entry.certificate = dispatch_single(f, req, rule, id, entry);
    entry.status = EntryStatus::Certified;
  } catch (const HypothesisError& ex) {
    entry.status = EntryStatus::Refused;
    entry.reason = ex.what();
    entry.failed_check = ex.report;
  } catch (const InapplicableError& ex) {
    entry.status = EntryStatus::Inapplicable;
    entry.reason = ex.what();
  }
  rep.entries.push_back(std::move(entry));
  return rep;
}

Report report_for_certificate(const SampledFunction& f, const Certificate& cert,
                              const std::string& rule_desc, const ToleranceConfig& tol) {
  Report rep;
  rep.input = digest(f);
  rep.rule = rule_desc;
  rep.cert_abs_tol = tol.cert_abs_tol;
  rep.cert_rel_tol = tol.cert_rel_tol;

  ReportEntry entry;
  entry.theorem = theorem_token(cert.theorem);
  entry.status = EntryStatus::Certified;
  entry.certificate = cert;
  rep.entries.push_back(std::move(entry));

  const std::string why = "not computed for this entry point";
  rep.estimators.e_reason = why;
  rep.estimators.K = {false, 0.0, why};
  rep.estimators.rho = {false, 0.0, why};
  rep.estimators.theta = {false, 0.0, why};
  rep.estimators.band = {false, 0.0, 0.0, 0.0, why};
  rep.estimators.k = {false, {}, why};
  return rep;
}

// --- report serialization --------------------------------------------------

namespace {

void write_check(JsonWriter& w, const CheckReport& check) {
  w.begin_object();
  w.key("holds");
  w.boolean(check.holds);
  w.key("worst_margin");
  w.number(check.worst_margin);
  w.key("worst_node");
  w.number(check.worst_node);
  w.key("checked_nodes");
  w.integer(static_cast<long long>(check.per_node_margins.size()));
  w.end_object();
}

void write_entry(JsonWriter& w, const ReportEntry& entry) {
  w.begin_object();
  w.key("theorem");
  w.string(entry.theorem);
  w.key("status");
  switch (entry.status) {
    case EntryStatus::Certified: w.string("certified"); break;
    case EntryStatus::Refused: w.string("refused"); break;
    case EntryStatus::Inapplicable: w.string("inapplicable"); break;
  }
  w.key("params");
  w.begin_object();
  for (const auto& [name, value] : entry.params) {
    w.key(name);
    w.number(value);
  }
  for (const auto& [name, values] : entry.list_params) {
    w.key(name);
    w.push_inline();
    w.begin_array();
    for (double v : values) w.number(v);
    w.end_array();
    w.pop_inline();
  }
  w.end_object();

  if (entry.status == EntryStatus::Certified) {
    const Certificate& c = *entry.certificate;
    w.key("factor");
    w.number(c.factor);
    w.key("lhs");
    w.number(c.lhs);
    w.key("rhs");
    w.number(c.rhs);
    w.key("slack");
    w.number(c.slack);
    w.key("tightness");
    w.number(c.tightness);
    w.key("equality_residual");
    w.number(c.equality_residual);
    w.key("quad_err");
    w.number(c.quad_err);
    w.key("holds");
    w.boolean(c.holds);
    w.key("hypothesis");
    write_check(w, c.hypothesis);
    if (c.additive) {
      w.key("additive");
      w.begin_object();
      w.key("coefficient_corrected");
      w.number(c.additive->coefficient_corrected);
      w.key("coefficient_printed");
      w.number(c.additive->coefficient_printed);
      w.key("lhs_minus_rhs");
      w.number(c.additive->lhs_minus_rhs);
      w.key("bound_corrected");
      w.number(c.additive->bound_corrected);
      w.key("bound_printed");
      w.number(c.additive->bound_printed);
      w.key("printed_holds");
      w.boolean(c.additive->printed_holds);
      w.end_object();
    }
  } else {
    w.key("reason");
    w.string(entry.reason);
    if (entry.failed_check) {
      w.key("hypothesis");
      write_check(w, *entry.failed_check);
    }
  }
  w.end_object();
}

void write_estimator_value(JsonWriter& w, const EstimatorValue& v) {
  w.begin_object();
  w.key("ok");
  w.boolean(v.ok);
  if (v.ok) {
    w.key("value");
    w.number(v.value);
  } else {
    w.key("reason");
    w.string(v.reason);
  }
  w.end_object();
}

}  // namespace

std::string report_to_json(const Report& report) {
  JsonWriter w;
  w.begin_object();
  w.key("tool");
  w.push_inline();
  w.begin_object();
  w.key("name");
  w.string(kToolName);
  w.key("version");
  w.string(kToolVersion);
  w.end_object();
  w.pop_inline();

  w.key("input");
  w.push_inline();
  w.begin_object();
  w.key("a");
  w.number(report.input.a);
  w.key("b");
  w.number(report.input.b);
  w.key("dim");
  w.integer(report.input.dim);
  w.key("nodes");
  w.integer(report.input.nodes);
  w.key("kind");
  w.string(report.input.step ? "step" : "smooth");
  w.end_object();
  w.pop_inline();

  w.key("rule");
  w.string(report.rule);
  w.key("tolerances");
  w.push_inline();
  w.begin_object();
  w.key("cert_abs_tol");
  w.number(report.cert_abs_tol);
  w.key("cert_rel_tol");
  w.number(report.cert_rel_tol);
  w.end_object();
  w.pop_inline();

  w.key("certificates");
  w.begin_array();
  for (const ReportEntry& entry : report.entries) write_entry(w, entry);
  w.end_array();

  const EstimatorSummary& est = report.estimators;
  w.key("estimators");
  w.begin_object();
  w.key("e");
  if (est.e)
    write_vec_array(w, *est.e);
  else
    w.null();
  w.key("K");
  write_estimator_value(w, est.K);
  w.key("rho");
  write_estimator_value(w, est.rho);
  w.key("theta");
  write_estimator_value(w, est.theta);
  w.key("band");
  w.begin_object();
  w.key("ok");
  w.boolean(est.band.ok);
  if (est.band.ok) {
    w.key("m");
    w.number(est.band.m);
    w.key("M");
    w.number(est.band.M);
    w.key("factor");
    w.number(est.band.factor);
  } else {
    w.key("reason");
    w.string(est.band.reason);
  }
  w.end_object();
  w.key("k");
  w.begin_object();
  w.key("ok");
  w.boolean(est.k.ok);
  if (est.k.ok) {
    w.key("value");
    w.push_inline();
    w.begin_array();
    for (double v : est.k.values) w.number(v);
    w.end_array();
    w.pop_inline();
  } else {
    w.key("reason");
    w.string(est.k.reason);
  }
  w.end_object();
  w.end_object();

  w.end_object();
  return w.take();
}

}  // namespace revtri::io
