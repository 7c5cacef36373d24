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

#include "qsd/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <thread>

#include "qsd/error.h"
#include "qsd/optimality.h"
#include "qsd/povm.h"

namespace qsd {

namespace {

inline constexpr double kRowTolerance = 1e-9;

const Json* find_key(const Json& j, std::string_view key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

template <typename T>
T get_as(const Json& v, std::string_view what) {
  try {
    return v.get<T>();
  } catch (const Json::exception& err) {
    throw ParseError(std::string(what) + ": " + err.what());
  }
}

template <typename T>
std::vector<T> get_list(const Json& v, std::string_view what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<T> out;
  for (const auto& x : v) out.push_back(get_as<T>(x, what));
  return out;
}

std::vector<double> get_reals(const Json& v, std::string_view what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(json_to_real(x, what));
  return out;
}

void check_spec(const RandomSpec& s) {
  if (s.dim < 1) throw std::invalid_argument("dim must be at least 1");
  if (s.arity < 2) throw std::invalid_argument("arity must be at least 2");
  if (s.priors == PriorMode::kFixed && s.fixed_priors.size() != s.arity) {
    throw std::invalid_argument("fixed_priors must list one prior per state (arity " +
                                std::to_string(s.arity) + ")");
  }
}

}  // namespace

Json random_spec_to_json(const RandomSpec& spec) {
  Json j;
  j["seed"] = spec.seed;
  j["dim"] = spec.dim;
  j["arity"] = spec.arity;
  j["purity"] = std::string(purity_name(spec.purity));
  j["priors"] = std::string(prior_mode_name(spec.priors));
  if (spec.priors == PriorMode::kFixed) j["fixed_priors"] = spec.fixed_priors;
  return j;
}

RandomSpec random_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spec: expected an object");
  RandomSpec s;
  if (const Json* v = find_key(j, "seed")) s.seed = get_as<std::uint64_t>(*v, "spec.seed");
  if (const Json* v = find_key(j, "dim")) s.dim = get_as<int>(*v, "spec.dim");
  if (const Json* v = find_key(j, "arity")) s.arity = get_as<std::size_t>(*v, "spec.arity");
  if (const Json* v = find_key(j, "purity")) {
    s.purity = parse_purity(get_as<std::string>(*v, "spec.purity"));
  }
  if (const Json* v = find_key(j, "priors")) {
    s.priors = parse_prior_mode(get_as<std::string>(*v, "spec.priors"));
  }
  if (const Json* v = find_key(j, "fixed_priors")) {
    s.fixed_priors = get_reals(*v, "spec.fixed_priors");
  }
  check_spec(s);
  return s;
}

SweepConfig sweep_config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("sweep config: expected a JSON object");
  SweepConfig c;
  const Json* output = find_key(j, "output");
  if (!output) throw ParseError("sweep config: missing field 'output'");
  c.output = get_as<std::string>(*output, "output");
  if (c.output.is_relative()) c.output = base_dir / c.output;
  if (const Json* v = find_key(j, "seed")) c.seed = get_as<std::uint64_t>(*v, "seed");
  if (const Json* v = find_key(j, "threads")) c.threads = get_as<unsigned>(*v, "threads");
  if (const Json* v = find_key(j, "specs")) {
    if (!v->is_array()) throw ParseError("specs: expected an array");
    for (const auto& s : *v) c.specs.push_back(random_spec_from_json(s));
    if (c.specs.empty()) throw std::invalid_argument("specs is empty");
    return c;
  }
  const Json* count = find_key(j, "count");
  if (!count) throw ParseError("sweep config: missing field 'count' (or 'specs')");
  c.count = get_as<std::size_t>(*count, "count");
  if (c.count == 0) throw std::invalid_argument("count must be positive");
  if (const Json* v = find_key(j, "dims")) c.dims = get_list<int>(*v, "dims");
  if (const Json* v = find_key(j, "arities")) c.arities = get_list<std::size_t>(*v, "arities");
  if (const Json* v = find_key(j, "purities")) {
    c.purities.clear();
    for (const auto& name : get_list<std::string>(*v, "purities")) {
      c.purities.push_back(parse_purity(name));
    }
  }
  if (const Json* v = find_key(j, "priors")) {
    c.priors.clear();
    for (const auto& name : get_list<std::string>(*v, "priors")) {
      c.priors.push_back(parse_prior_mode(name));
    }
  }
  if (const Json* v = find_key(j, "fixed_priors")) c.fixed_priors = get_reals(*v, "fixed_priors");
  if (c.dims.empty() || c.arities.empty() || c.purities.empty() || c.priors.empty()) {
    throw std::invalid_argument("dims, arities, purities and priors must be non-empty");
  }
  for (std::size_t k = 0; k < c.dims.size() * c.arities.size() * c.purities.size() *
                                  c.priors.size();
       ++k) {
    check_spec(sweep_spec(c, k));
  }
  return c;
}

std::size_t sweep_size(const SweepConfig& config) {
  return config.specs.empty() ? config.count : config.specs.size();
}

RandomSpec sweep_spec(const SweepConfig& config, std::size_t k) {
  if (!config.specs.empty()) return config.specs.at(k);
  RandomSpec s;
  std::size_t rest = k;
  s.dim = config.dims[rest % config.dims.size()];
  rest /= config.dims.size();
  s.arity = config.arities[rest % config.arities.size()];
  rest /= config.arities.size();
  s.purity = config.purities[rest % config.purities.size()];
  rest /= config.purities.size();
  s.priors = config.priors[rest % config.priors.size()];
  if (s.priors == PriorMode::kFixed) s.fixed_priors = config.fixed_priors;
  s.seed = splitmix64_mix(config.seed + static_cast<std::uint64_t>(k) * SplitMix64::kGamma);
  return s;
}

std::vector<std::string> SweepRow::violations() const {
  std::vector<std::string> out;
  for (const auto& [name, holds] : invariants) {
    if (!holds) out.push_back(name);
  }
  return out;
}

SweepRow evaluate_sweep_row(const RandomSpec& spec, std::size_t index) {
  SweepRow row;
  row.index = index;
  row.spec = spec;
  const Ensemble e = random_ensemble(spec);
  row.priors.assign(e.priors().begin(), e.priors().end());
  row.report = bounds_report(e);
  row.commuting = is_commuting_family(e).commuting;
  for (const auto& c : row.report.checks) {
    if (c.asserted) row.invariants[c.name] = c.holds;
  }

  const PairwiseTable t = pairwise_table(e);
  const std::size_t r = e.size();
  const double inv = 1.0 / static_cast<double>(r - 1);
  bool achieved_ok = true;
  for (std::size_t j = 0; j < r; ++j) {
    double formula = e.prior(j);
    for (std::size_t i = 0; i < r; ++i) {
      if (i != j) formula += inv * t.positive_norm(i, j);
    }
    row.mj_formula.push_back(formula);
    try {
      row.mj_achieved.push_back(success_probability(e, construct_mj(e, j)));
    } catch (const Error&) {
      row.mj_valid = false;
      row.mj_achieved.push_back(NAN);
    }
    achieved_ok = achieved_ok && std::abs(row.mj_achieved.back() - formula) <= kRowTolerance;
  }
  row.invariants[std::string(invariant::kMjValid)] = row.mj_valid;
  row.invariants[std::string(invariant::kMjAchieved)] = achieved_ok;
  const double best = *std::max_element(row.mj_achieved.begin(), row.mj_achieved.end());
  row.invariants[std::string(invariant::kMjMax)] =
      std::abs(best - row.report.lower.l1_new) <= kRowTolerance;

  if (row.report.exact) {
    const Povm m = row.report.exact->method == ExactMethod::kBinary ? construct_helstrom_povm(e)
                                                                     : commuting_optimum(e).povm;
    row.exact_certified = check_holevo(e, m).passed();
    row.invariants[std::string(invariant::kExactCertified)] = *row.exact_certified;
  }
  return row;
}

std::size_t SweepResult::total_violations() const {
  std::size_t n = 0;
  for (const auto& [name, count] : violation_counts) n += count;
  return n;
}

SweepResult run_sweep(const SweepConfig& config) {
  const std::size_t n = sweep_size(config);
  std::vector<std::optional<SweepRow>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        slots[k] = evaluate_sweep_row(sweep_spec(config, k), k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, n));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  SweepResult result;
  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    for (const auto& [name, holds] : slots[k]->invariants) {
      result.violation_counts[name] += holds ? 0 : 1;
    }
    result.rows.push_back(std::move(*slots[k]));
  }
  return result;
}

Json sweep_row_to_json(const SweepRow& row) {
  const BoundsReport& r = row.report;
  Json j;
  j["index"] = row.index;
  j["spec"] = random_spec_to_json(row.spec);
  j["priors"] = row.priors;
  j["equiprobable"] = r.equiprobable;
  j["commuting"] = row.commuting;
  j["sum_trace_distances"] = r.sum_trace_distances;
  j["lower"] = {{"L1", r.lower.l1},         {"L2", r.lower.l2},         {"L3", r.lower.l3},
                {"L1_new", r.lower.l1_new}, {"L2_new", r.lower.l2_new}};
  j["upper"] = {{"Q2", r.upper.q2}, {"Q3", r.upper.q3}, {"Q4", r.upper.q4},
                {"Q5", r.upper.q5}, {"Q_new", r.upper.q_new}};
  j["bracket"] = {{"low", r.bracket.low}, {"high", r.bracket.high}, {"width", r.bracket.width()}};
  if (r.exact) {
    j["exact"] = {{"value", r.exact->value},
                  {"method", std::string(exact_method_name(r.exact->method))},
                  {"certified", row.exact_certified.value_or(false)}};
  } else {
    j["exact"] = nullptr;
  }
  j["mj_achieved"] = row.mj_achieved;
  Json ordering = Json::object();
  for (const auto& c : r.checks) ordering[c.name] = c.holds;
  j["ordering"] = std::move(ordering);
  j["violations"] = row.violations();
  return j;
}

Json sweep_summary_to_json(const SweepResult& result) {
  std::map<std::string, std::size_t> evaluated;
  double width_sum = 0.0, width_min = INFINITY, width_max = 0.0;
  double low_gap = 0.0, high_gap = 0.0;
  std::size_t exact_rows = 0, l1_new_best = 0, q4_best = 0;
  for (const auto& row : result.rows) {
    for (const auto& [name, holds] : row.invariants) ++evaluated[name];
    const BoundsReport& r = row.report;
    const double w = r.bracket.width();
    width_sum += w;
    width_min = std::min(width_min, w);
    width_max = std::max(width_max, w);
    if (r.exact) {
      ++exact_rows;
      low_gap += r.exact->value - r.bracket.low;
      high_gap += r.bracket.high - r.exact->value;
    }
    if (std::abs(r.lower.l1_new - r.bracket.low) <= kTieTolerance) ++l1_new_best;
    if (std::abs(r.upper.q4 - r.bracket.high) <= kTieTolerance) ++q4_best;
  }
  const double n = static_cast<double>(std::max<std::size_t>(result.rows.size(), 1));
  const double ne = static_cast<double>(std::max<std::size_t>(exact_rows, 1));
  Json invariants = Json::object();
  for (const auto& [name, count] : result.violation_counts) {
    invariants[name] = {{"evaluated", evaluated[name]}, {"violations", count}};
  }
  Json s;
  s["rows"] = result.rows.size();
  s["total_violations"] = result.total_violations();
  s["invariants"] = std::move(invariants);
  s["tightness"] = {{"mean_bracket_width", width_sum / n},
                    {"min_bracket_width", result.rows.empty() ? 0.0 : width_min},
                    {"max_bracket_width", width_max},
                    {"rows_with_exact", exact_rows},
                    {"mean_exact_minus_low", exact_rows ? low_gap / ne : 0.0},
                    {"mean_high_minus_exact", exact_rows ? high_gap / ne : 0.0},
                    {"L1_new_is_best_lower", l1_new_best},
                    {"Q4_is_best_upper", q4_best}};
  return Json{{"summary", std::move(s)}};
}

void write_sweep_results(const SweepResult& result, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    for (const auto& row : result.rows) out << dump_json(sweep_row_to_json(row), -1) << '\n';
    out << dump_json(sweep_summary_to_json(result), -1) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qsd
