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

#include "qsd/commands.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qsd/error.h"
#include "qsd/example.h"
#include "qsd/json_io.h"
#include "qsd/optimality.h"
#include "qsd/povm.h"
#include "qsd/sweep.h"

namespace qsd::cli {

namespace {

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kSingularNormalizer:
      return kExitNumerical;
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kSameIndex:
    case ErrorCode::kWrongArity:
    case ErrorCode::kArityMismatch:
      return kExitMismatch;
    default:
      return kExitValidation;
  }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << (exit_for(e.code()) == kExitNumerical ? "numerical failure: " : "invalid input: ")
        << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

Json load_json(const std::filesystem::path& path, std::string* raw = nullptr) {
  std::string text = read_file(path);
  Json j = parse_json_text(text, path.string());
  if (raw) *raw = std::move(text);
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

std::string value_with_rational(double x) {
  std::string s = fmt("%.12f", x);
  if (auto q = recognize_rational(x)) s += " (" + *q + ")";
  return s;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

double certificate_tolerance_from_env() {
  const char* raw = std::getenv(std::string(kTolEnv).c_str());
  if (!raw || !*raw) return kCertificateTolerance;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw ParseError(std::string(kTolEnv) + " must be a positive number, got '" + raw + "'");
  }
  return v;
}

std::optional<std::string> recognize_rational(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long den = 1; den <= 1000; ++den) {
    const double num = std::round(x * static_cast<double>(den));
    if (std::abs(x - num / static_cast<double>(den)) <= 1e-12) {
      const long n = static_cast<long>(num);
      if (std::gcd(n, den) != 1) continue;
      return den == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(den);
    }
  }
  return std::nullopt;
}

std::string render_bounds_table(const BoundsReport& r) {
  struct Row {
    const char* name;
    double value;
    const char* tag;
    const char* kind;
    std::string note;
  };
  const bool binary = r.arity == 2;
  const std::string helstrom = binary ? "Helstrom" : "";
  std::vector<Row> rows = {
      {"L1", r.lower.l1, "Eq. 28.1", "lower", ""},
      {"L2", r.lower.l2, "Eq. 28.2", "lower", r.lower.l2_was_clamped ? "negative" : ""},
      {"L3", r.lower.l3, "Eq. 28.3", "lower", ""},
      {"L1_new", r.lower.l1_new, "Eq. 15", "lower", helstrom},
      {"L2_new", r.lower.l2_new, "Eq. 17", "lower", helstrom},
      {"Q4", r.upper.q4, "Eq. 30", "upper", helstrom},
      {"Q_new", r.upper.q_new, "Eq. 32", "upper", helstrom},
      {"Q2", r.upper.q2, "Eq. 40", "upper", ""},
      {"Q3", r.upper.q3, "Eq. 41", "upper", ""},
      {"Q5", r.upper.q5, "Eq. 42", "upper", ""},
  };
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-8s %10s  %-9s %-9s %-6s %s\n", "bound", "value", "exact",
                "equation", "kind", "note");
  os << buf;
  for (const auto& row : rows) {
    std::string note = row.note;
    if (row.value == r.bracket.low && std::string(row.kind) == "lower") {
      note += note.empty() ? "best lower" : ", best lower";
    }
    if (row.value == r.bracket.high && std::string(row.kind) == "upper") {
      note += note.empty() ? "best upper" : ", best upper";
    }
    std::snprintf(buf, sizeof(buf), "%-8s %10.6f  %-9s %-9s %-6s %s", row.name, row.value,
                  recognize_rational(row.value).value_or("-").c_str(), row.tag, row.kind,
                  note.c_str());
    std::string line = buf;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  os << '\n';
  os << "states " << r.arity << ", dim " << r.dim << (r.equiprobable ? ", equiprobable" : "")
     << '\n';
  os << "sum_{i<j} ||q_i rho_i - q_j rho_j||_1 = " << fmt("%.6f", r.sum_trace_distances) << '\n';
  os << "bracket [" << fmt("%.6f", r.bracket.low) << ", " << fmt("%.6f", r.bracket.high)
     << "]  width " << fmt("%.6f", std::abs(r.bracket.width()) < 1e-12 ? 0.0 : r.bracket.width())
     << '\n';
  if (r.exact) {
    os << "exact optimum " << fmt("%.6f", r.exact->value);
    if (auto q = recognize_rational(r.exact->value)) os << " (" << *q << ")";
    os << (r.exact->method == ExactMethod::kBinary ? "  Helstrom (Eq. 6)"
                                                    : "  commuting family (Eq. 55)")
       << '\n';
  } else {
    os << "exact optimum: not available in closed form\n";
  }
  std::size_t asserted = 0;
  for (const auto& c : r.checks) asserted += c.asserted ? 1 : 0;
  const auto bad = r.violations();
  os << "checks: " << r.checks.size() << " evaluated, " << asserted << " asserted, " << bad.size()
     << " violated\n";
  for (const auto* c : bad) {
    os << "  VIOLATED " << c->name << ": " << fmt("%.12g", c->lhs) << " > "
       << fmt("%.12g", c->rhs) << '\n';
  }
  return os.str();
}

int cmd_bounds(const std::filesystem::path& ensemble_path,
               const std::optional<std::filesystem::path>& out_path, OutputFormat format,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string raw;
    const Json j = load_json(ensemble_path, &raw);
    const Ensemble e = ensemble_from_json(j);
    ReportFile file;
    file.report = bounds_report(e);
    file.input_digest = "fnv1a64:" + fnv1a64_hex(raw);
    const std::string json = dump_json(report_to_json(file)) + "\n";
    if (out_path) write_text(*out_path, json);
    if (format == OutputFormat::kJson) {
      if (!out_path) out << json;
    } else {
      out << render_bounds_table(file.report);
    }
    for (const auto* c : file.report.violations()) {
      err << "warning: asserted relation violated: " << c->name << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_certify(const std::filesystem::path& ensemble_path,
                const std::filesystem::path& povm_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double tolerance = certificate_tolerance_from_env();
    const Ensemble e = ensemble_from_json(load_json(ensemble_path));
    const Povm m = povm_from_json(load_json(povm_path));
    try {
      check_compatible(e, m);
    } catch (const Error& mismatch) {
      err << "mismatch: " << mismatch.what() << '\n';
      return static_cast<int>(kExitMismatch);
    }
    const Certificate cert = check_holevo(e, m, tolerance);
    const BoundsReport report = bounds_report(e);
    out << "tolerance " << fmt("%g", tolerance) << '\n';
    out << "orthogonality  max|(Lambda0 - q_i rho_i) M(i)|\n";
    for (std::size_t i = 0; i < cert.orthogonality_residuals.size(); ++i) {
      const double res = cert.orthogonality_residuals[i];
      out << "  i=" << i << "  " << fmt("%.3e", res) << (res <= tolerance ? "  ok" : "  FAIL")
          << '\n';
    }
    out << "domination     min(0, lambda_min(Lambda0 - q_i rho_i))\n";
    for (std::size_t i = 0; i < cert.domination_residuals.size(); ++i) {
      const double res = cert.domination_residuals[i];
      out << "  i=" << i << "  " << fmt("%.3e", res) << (res >= -tolerance ? "  ok" : "  FAIL")
          << '\n';
    }
    out << "anti-Hermitian part of Lambda0  " << fmt("%.3e", cert.antihermitian_magnitude)
        << '\n';
    out << "claimed success probability tr Lambda0 = " << value_with_rational(cert.claimed_value)
        << '\n';
    out << "bracket [" << fmt("%.12f", report.bracket.low) << ", "
        << fmt("%.12f", report.bracket.high) << "]\n";
    if (cert.passed()) {
      out << "verdict: PASS (Holevo conditions hold, measurement is optimal)\n";
      return static_cast<int>(kExitOk);
    }
    out << "verdict: FAIL";
    if (cert.claimed_value < report.bracket.low) {
      out << " (claimed value is " << fmt("%.6g", report.bracket.low - cert.claimed_value)
          << " below the best lower bound)";
    } else if (cert.claimed_value > report.bracket.high) {
      out << " (claimed value exceeds the best upper bound)";
    } else {
      out << " (claimed value lies inside the bracket)";
    }
    out << '\n';
    return static_cast<int>(kExitFailed);
  });
}

int cmd_povm(const std::filesystem::path& ensemble_path, std::optional<std::size_t> j,
             const std::optional<std::filesystem::path>& out_dir, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Ensemble e = ensemble_from_json(load_json(ensemble_path));
    std::vector<std::size_t> indices;
    if (j) {
      indices.push_back(*j);
    } else {
      indices.resize(e.size());
      std::iota(indices.begin(), indices.end(), std::size_t{0});
    }
    std::vector<Povm> povms;
    std::vector<double> achieved;
    for (std::size_t idx : indices) {
      povms.push_back(construct_mj(e, idx));
      achieved.push_back(success_probability(e, povms.back()));
    }
    const double l1_new = lower_l1_new(e);
    const std::size_t best = indices[max_with_ties(achieved).index];
    std::ostream& summary = out_dir ? out : err;
    if (out_dir) std::filesystem::create_directories(*out_dir);
    Json doc;
    doc["L1_new"] = l1_new;
    doc["argmax_j"] = best;
    doc["povms"] = Json::array();
    for (std::size_t k = 0; k < indices.size(); ++k) {
      Json p = povm_to_json(povms[k]);
      Json entry;
      entry["j"] = indices[k];
      entry["achieved"] = achieved[k];
      entry["dim"] = p["dim"];
      entry["effects"] = p["effects"];
      if (out_dir) {
        const auto path = *out_dir / ("povm_j" + std::to_string(indices[k]) + ".json");
        write_text(path, dump_json(p) + "\n");
      }
      doc["povms"].push_back(std::move(entry));
      summary << "j=" << indices[k] << "  achieved " << value_with_rational(achieved[k]);
      if (indices[k] == best) summary << "  <- argmax";
      if (e.size() == 2) summary << "  (Helstrom measurement)";
      summary << '\n';
    }
    summary << "L1_new (Eq. 15) = " << value_with_rational(l1_new) << '\n';
    if (!out_dir) out << dump_json(doc) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_example(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExampleResult result = run_example();
    for (const auto& line : render_example(result)) out << line << '\n';
    if (!result.ok()) {
      err << "example self-check failed\n";
      return static_cast<int>(kExitSelfCheck);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_sweep(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json j = load_json(config_path);
    const SweepConfig config = sweep_config_from_json(j, config_path.parent_path());
    const SweepResult result = run_sweep(config);
    write_sweep_results(result, config.output);
    out << "wrote " << result.rows.size() << " rows to " << config.output.string() << '\n';
    for (const auto& [name, count] : result.violation_counts) {
      out << "  " << name << ": " << count << " violations\n";
    }
    if (result.total_violations() != 0) {
      err << result.total_violations() << " invariant violations\n";
      return static_cast<int>(kExitFailed);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace qsd::cli
