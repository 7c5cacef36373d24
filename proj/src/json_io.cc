// Copyright 2026 The qsdbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsd/json_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "qsd/error.h"
#include "qsd/rational.h"

namespace qsd {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& err) {
    throw ParseError(std::string(source) + ": " + err.what());
  }
}

namespace {

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

// indent < 0 writes on one line; `spaced` adds a blank after commas there.
void write_json(const Json& j, std::string& out, int indent, int level, bool spaced) {
  const bool pretty = indent >= 0;
  const auto newline = [&](int lvl) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool inline_items =
          !pretty || std::all_of(j.begin(), j.end(), [](const Json& x) {
            return is_scalar(x) || (x.is_array() && std::all_of(x.begin(), x.end(), is_scalar));
          });
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += (pretty && inline_items) || spaced ? ", " : ",";
        first = false;
        if (!inline_items) newline(level + 1);
        write_json(item, out, inline_items ? -1 : indent, level + 1, spaced || pretty);
      }
      if (!inline_items) newline(level);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write_json(value, out, indent, level + 1, spaced);
      }
      newline(level);
      out += '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write_json(j, out, indent, 0, false);
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double json_to_real(const Json& j, std::string_view what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_exact_real(j.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string(what) + ": " + err.what());
    }
  }
  throw ParseError(std::string(what) + ": expected a number or numeric string");
}

namespace {

Complex json_to_complex(const Json& j, std::string_view what) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(std::string(what) + ": complex entry must be [re, im]");
    return {json_to_real(j[0], what), json_to_real(j[1], what)};
  }
  return {json_to_real(j, what), 0.0};
}

const Json& require(const Json& obj, std::string_view key, std::string_view what) {
  if (!obj.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(what) + ": missing field '" + std::string(key) + "'");
  }
  return *it;
}

const Json& require_array(const Json& obj, std::string_view key, std::string_view what) {
  const Json& a = require(obj, key, what);
  if (!a.is_array()) {
    throw ParseError(std::string(what) + ": field '" + std::string(key) + "' must be an array");
  }
  return a;
}

int require_dim(const Json& obj, std::string_view what) {
  const Json& d = require(obj, "dim", what);
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw ParseError(std::string(what) + ": 'dim' must be a positive integer");
  }
  return d.get<int>();
}

// Either "<list_key>": [matrix...] or "diagonal": [[value...]...].
std::vector<ComplexMatrix> read_matrix_list(const Json& j, std::string_view list_key,
                                            std::string_view what) {
  const bool has_list = j.contains(list_key);
  const bool has_diag = j.contains("diagonal");
  if (has_list == has_diag) {
    throw ParseError(std::string(what) + ": give exactly one of '" + std::string(list_key) +
                     "' or 'diagonal'");
  }
  std::vector<ComplexMatrix> out;
  if (has_list) {
    const Json& list = require_array(j, list_key, what);
    for (std::size_t k = 0; k < list.size(); ++k) {
      out.push_back(json_to_matrix(list[k], std::string(what) + " " + std::string(list_key) +
                                                "[" + std::to_string(k) + "]"));
    }
  } else {
    const Json& list = require_array(j, "diagonal", what);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Json& diag = list[k];
      const std::string label = std::string(what) + " diagonal[" + std::to_string(k) + "]";
      if (!diag.is_array() || diag.empty()) throw ParseError(label + ": expected a non-empty array");
      ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(diag.size()),
                                            static_cast<Eigen::Index>(diag.size()));
      for (std::size_t n = 0; n < diag.size(); ++n) {
        m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = json_to_real(diag[n], label);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

void check_declared_dim(const std::vector<ComplexMatrix>& ms, int dim, std::string_view what) {
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].rows() != dim || ms[k].cols() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(what) + " " + std::to_string(k) + " is " +
                      std::to_string(ms[k].rows()) + "x" + std::to_string(ms[k].cols()) +
                      " but dim is " + std::to_string(dim),
                  k);
    }
  }
}

Json real_matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd json_to_real_matrix(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(std::string(what) + ": expected a square matrix");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = json_to_real(row[static_cast<std::size_t>(k)], what);
    }
  }
  return m;
}

template <typename T>
T get_field(const Json& obj, std::string_view key, std::string_view what) {
  const Json& v = require(obj, key, what);
  try {
    return v.get<T>();
  } catch (const Json::exception& err) {
    throw ParseError(std::string(what) + "." + std::string(key) + ": " + err.what());
  }
}

}  // namespace

ComplexMatrix json_to_matrix(const Json& j, std::string_view what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string(what) + ": matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) throw ParseError(std::string(what) + ": row " + std::to_string(i) + " is not an array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols || cols == 0) throw ParseError(std::string(what) + ": ragged rows");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = json_to_complex(j[i][k], what);
    }
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      const Complex z = m(i, k);
      if (z.imag() == 0.0) row.push_back(z.real());
      else row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Ensemble ensemble_from_json(const Json& j) {
  constexpr std::string_view what = "ensemble";
  const int dim = require_dim(j, what);
  const Json& priors = require_array(j, "priors", what);
  const std::vector<ComplexMatrix> states = read_matrix_list(j, "states", what);
  if (priors.size() != states.size()) {
    throw ParseError("ensemble: " + std::to_string(priors.size()) + " priors but " +
                     std::to_string(states.size()) + " states");
  }
  check_declared_dim(states, dim, "state");
  std::vector<RawEntry> raw;
  for (std::size_t i = 0; i < states.size(); ++i) {
    raw.push_back({json_to_real(priors[i], "prior " + std::to_string(i)), states[i]});
  }
  return validate_ensemble(raw);
}

Json ensemble_to_json(const Ensemble& e) {
  Json j;
  j["dim"] = e.dim();
  Json states = Json::array();
  Json priors = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    states.push_back(matrix_to_json(e.state(i).matrix()));
    priors.push_back(e.prior(i));
  }
  j["states"] = std::move(states);
  j["priors"] = std::move(priors);
  return j;
}

Povm povm_from_json(const Json& j) {
  constexpr std::string_view what = "povm";
  const int dim = require_dim(j, what);
  const std::vector<ComplexMatrix> effects = read_matrix_list(j, "effects", what);
  check_declared_dim(effects, dim, "effect");
  return validate_povm(effects);
}

Json povm_to_json(const Povm& m) {
  Json j;
  j["dim"] = m.dim();
  Json effects = Json::array();
  for (const auto& e : m.effects()) effects.push_back(matrix_to_json(e.matrix()));
  j["effects"] = std::move(effects);
  return j;
}

Json report_to_json(const ReportFile& file) {
  const BoundsReport& r = file.report;
  Json j;
  j["tool"] = file.tool;
  j["version"] = file.version;
  j["input_digest"] = file.input_digest;
  j["tolerances"] = {
      {"zero_eigenvalue", tol::kZero},        {"hermitian", tol::kHermitian},
      {"psd", tol::kPsd},                     {"reconstruction", tol::kReconstruction},
      {"fidelity", tol::kFidelity},           {"ordering_slack", kOrderingSlack},
      {"rewrite", kRewriteTolerance},         {"equiprobable", kEquiprobableTolerance},
      {"tie", kTieTolerance},                 {"certificate", kCertificateTolerance},
  };
  j["arity"] = r.arity;
  j["dim"] = r.dim;
  j["equiprobable"] = r.equiprobable;
  j["pairwise"] = {{"trace_distance", real_matrix_to_json(r.trace_distance)},
                   {"fidelity", real_matrix_to_json(r.fidelity)},
                   {"sum_trace_distances", r.sum_trace_distances}};
  j["lower"] = {{"L1", r.lower.l1},
                {"L2", r.lower.l2},
                {"L2_clamped", r.lower.l2_clamped},
                {"L2_was_clamped", r.lower.l2_was_clamped},
                {"L3", r.lower.l3},
                {"L1_new", r.lower.l1_new},
                {"L2_new", r.lower.l2_new}};
  j["upper"] = {{"Q2", r.upper.q2},
                {"Q3", r.upper.q3},
                {"Q4", r.upper.q4},
                {"Q5", r.upper.q5},
                {"Q_new", r.upper.q_new}};
  j["bracket"] = {{"low", r.bracket.low}, {"high", r.bracket.high}, {"width", r.bracket.width()}};
  if (r.exact) {
    j["exact"] = {{"value", r.exact->value},
                  {"method", std::string(exact_method_name(r.exact->method))}};
  } else {
    j["exact"] = nullptr;
  }
  j["tie_breaks"] = {{"L1_new_argmax", r.l1_new_argmax}, {"Q4_argmin", r.q4_argmin}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"asserted", c.asserted},
                      {"holds", c.holds}});
  }
  j["checks"] = std::move(checks);
  return j;
}

ReportFile report_from_json(const Json& j) {
  constexpr std::string_view what = "report";
  ReportFile f;
  f.tool = get_field<std::string>(j, "tool", what);
  f.version = get_field<std::string>(j, "version", what);
  f.input_digest = get_field<std::string>(j, "input_digest", what);
  BoundsReport& r = f.report;
  r.arity = get_field<std::size_t>(j, "arity", what);
  r.dim = get_field<int>(j, "dim", what);
  r.equiprobable = get_field<bool>(j, "equiprobable", what);
  const Json& pw = require(j, "pairwise", what);
  r.trace_distance = json_to_real_matrix(require(pw, "trace_distance", what), "trace_distance");
  r.fidelity = json_to_real_matrix(require(pw, "fidelity", what), "fidelity");
  r.sum_trace_distances = get_field<double>(pw, "sum_trace_distances", what);
  const Json& lo = require(j, "lower", what);
  r.lower = {get_field<double>(lo, "L1", what),
             get_field<double>(lo, "L2", what),
             get_field<double>(lo, "L2_clamped", what),
             get_field<bool>(lo, "L2_was_clamped", what),
             get_field<double>(lo, "L3", what),
             get_field<double>(lo, "L1_new", what),
             get_field<double>(lo, "L2_new", what)};
  const Json& up = require(j, "upper", what);
  r.upper = {get_field<double>(up, "Q2", what), get_field<double>(up, "Q3", what),
             get_field<double>(up, "Q4", what), get_field<double>(up, "Q5", what),
             get_field<double>(up, "Q_new", what)};
  const Json& br = require(j, "bracket", what);
  r.bracket = {get_field<double>(br, "low", what), get_field<double>(br, "high", what)};
  const Json& ex = require(j, "exact", what);
  if (!ex.is_null()) {
    try {
      r.exact = ExactValue{get_field<double>(ex, "value", what),
                           parse_exact_method(get_field<std::string>(ex, "method", what))};
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string("report.exact: ") + err.what());
    }
  }
  const Json& ties = require(j, "tie_breaks", what);
  r.l1_new_argmax = get_field<std::size_t>(ties, "L1_new_argmax", what);
  r.q4_argmin = get_field<std::size_t>(ties, "Q4_argmin", what);
  for (const auto& c : require_array(j, "checks", what)) {
    r.checks.push_back({get_field<std::string>(c, "name", what), get_field<double>(c, "lhs", what),
                        get_field<double>(c, "rhs", what), get_field<bool>(c, "asserted", what),
                        get_field<bool>(c, "holds", what)});
  }
  return f;
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = cert.passed() ? "pass" : "fail";
  j["claimed_value"] = cert.claimed_value;
  j["tolerance"] = cert.tolerance;
  j["orthogonality_pass"] = cert.orthogonality_pass;
  j["domination_pass"] = cert.domination_pass;
  j["orthogonality_residuals"] = cert.orthogonality_residuals;
  j["domination_residuals"] = cert.domination_residuals;
  j["antihermitian_magnitude"] = cert.antihermitian_magnitude;
  j["lambda0"] = matrix_to_json(cert.lambda0.matrix());
  return j;
}

}  // namespace qsd
