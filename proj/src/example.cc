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

#include "qsd/example.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qsd/bounds.h"
#include "qsd/operator.h"
#include "qsd/optimality.h"

namespace qsd {

Ensemble example_ensemble() {
  const auto diag = [](double a, double b) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
  };
  const std::vector<RawEntry> raw = {{1.0 / 3.0, diag(7.0 / 8.0, 1.0 / 8.0)},
                                     {1.0 / 3.0, diag(5.0 / 8.0, 3.0 / 8.0)},
                                     {1.0 / 3.0, diag(3.0 / 4.0, 1.0 / 4.0)}};
  return validate_ensemble(raw);
}

Povm example_optimal_povm() {
  std::vector<ComplexMatrix> effects(3, ComplexMatrix::Zero(2, 2));
  effects[0](0, 0) = 1.0;
  effects[1](1, 1) = 1.0;
  return validate_povm(effects);
}

bool ExampleValue::ok() const { return std::abs(computed - expected) <= kExampleTolerance; }

bool ExampleResult::ok() const {
  return optimum_certified && optimum_matches &&
         std::all_of(values.begin(), values.end(), [](const ExampleValue& v) { return v.ok(); }) &&
         std::all_of(orderings.begin(), orderings.end(),
                     [](const ExampleOrdering& o) { return o.ok; });
}

namespace {

inline constexpr double kStrictMargin = 1e-6;

ExampleOrdering descending(std::string tag, std::string text, const std::vector<double>& chain) {
  ExampleOrdering o{std::move(tag), std::move(text), INFINITY, true};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    o.min_margin = std::min(o.min_margin, chain[k - 1] - chain[k]);
  }
  o.ok = o.min_margin > kStrictMargin;
  return o;
}

}  // namespace

ExampleResult run_example() {
  const Ensemble e = example_ensemble();
  const BoundsReport r = bounds_report(e);
  ExampleResult out;
  auto& v = out.values;

  double unweighted[3][3] = {};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      unweighted[i][j] = trace_norm(e.state(i).op() - e.state(j).op());
    }
  }
  v.push_back({"‖ρ_1−ρ_2‖_1", "1/2", true, "Eq. 52", 0.5, unweighted[0][1]});
  v.push_back({"‖ρ_1−ρ_3‖_1", "1/4", true, "Eq. 52", 0.25, unweighted[0][2]});
  v.push_back({"‖ρ_2−ρ_3‖_1", "1/4", true, "Eq. 52", 0.25, unweighted[1][2]});
  double column[3] = {};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) column[j] += unweighted[i][j];
  }
  v.push_back({"Σ_{i<j}‖ρ_i−ρ_j‖_1", "1", true, "Eq. 52", 1.0,
               unweighted[0][1] + unweighted[0][2] + unweighted[1][2]});
  v.push_back({"min_j Σ_i‖ρ_i−ρ_j‖_1", "1/2", true, "Eq. 52", 0.5,
               *std::min_element(column, column + 3)});
  v.push_back({"max_j Σ_i‖ρ_i−ρ_j‖_1", "3/4", true, "Eq. 52", 0.75,
               *std::max_element(column, column + 3)});

  v.push_back({"L1_new", "19/48", true, "Eq. 53", 19.0 / 48.0, r.lower.l1_new});
  v.push_back({"L2_new", "7/18", true, "Eq. 53", 7.0 / 18.0, r.lower.l2_new});
  v.push_back({"Q_new", "4/9", true, "Eq. 53", 4.0 / 9.0, r.upper.q_new});
  v.push_back({"Q4", "5/12", true, "Eq. 54", 5.0 / 12.0, r.upper.q4});
  v.push_back({"Q2", "7/12", true, "Eq. 54", 7.0 / 12.0, r.upper.q2});
  v.push_back({"L1", "1/3", true, "Eq. 54", 1.0 / 3.0, r.lower.l1});

  const double f12 = (std::sqrt(35.0) + std::sqrt(3.0)) / 8.0;
  const double f13 = (std::sqrt(42.0) + std::sqrt(2.0)) / 8.0;
  const double f23 = (std::sqrt(30.0) + std::sqrt(6.0)) / 8.0;
  v.push_back({"F_12", "(√35+√3)/8", false, "Eq. 56", f12, r.fidelity(0, 1)});
  v.push_back({"F_13", "(√42+√2)/8", false, "Eq. 56", f13, r.fidelity(0, 2)});
  v.push_back({"F_23", "(√30+√6)/8", false, "Eq. 56", f23, r.fidelity(1, 2)});

  const double root_trace = (std::sqrt(110.0) + std::sqrt(14.0)) / 8.0;
  HermitianOperator squares = HermitianOperator::zero(2);
  for (const auto& s : e.states()) {
    squares = squares + HermitianOperator::from_matrix(s.matrix() * s.matrix());
  }
  v.push_back({"tr√Σρ_i²", "(√110+√14)/8", false, "Eq. 57", root_trace,
               sqrt_psd(squares).trace()});

  const double q3 = 1.0 - (f12 * f12 + f13 * f13 + f23 * f23) / 9.0;
  const double q5 = root_trace / 3.0;
  const double l2 = 1.0 - (f12 + f13 + f23) / 3.0;
  v.push_back({"Q3", "1−(F_12²+F_13²+F_23²)/9", false, "Eq. 58", q3, r.upper.q3});
  v.push_back({"Q5", "(√110+√14)/24", false, "Eq. 58", q5, r.upper.q5});
  v.push_back({"L2", "1−(F_12+F_13+F_23)/3", false, "Eq. 58", l2, r.lower.l2});
  v.push_back({"L3", "((√110+√14)/24)²", false, "Eq. 58", q5 * q5, r.lower.l3});

  out.optimum = r.exact ? r.exact->value : NAN;
  v.push_back({"P_opt", "5/12", true, "Eq. 55", 5.0 / 12.0, out.optimum});

  const Povm best = example_optimal_povm();
  const Certificate cert = check_holevo(e, best);
  out.optimum_certified = cert.passed();
  out.optimum_matches = std::abs(success_probability(e, best) - 5.0 / 12.0) <= kExampleTolerance &&
                        std::abs(out.optimum - r.upper.q4) <= kExampleTolerance;

  out.orderings.push_back(descending(
      "Eq. 59", "Q4 < Qnew < Q2 < Q5 < Q3",
      {r.upper.q3, r.upper.q5, r.upper.q2, r.upper.q_new, r.upper.q4}));
  out.orderings.push_back(descending(
      "Eq. 60", "P_opt > L1new > L2new > L3 > L1 > L2",
      {out.optimum, r.lower.l1_new, r.lower.l2_new, r.lower.l3, r.lower.l1, r.lower.l2}));
  return out;
}

std::vector<std::string> render_example(const ExampleResult& result) {
  std::vector<std::string> lines;
  lines.push_back("Three equiprobable qubit states diag(7/8,1/8), diag(5/8,3/8), diag(3/4,1/4) (Eq. 51)");
  char buf[256];
  for (const auto& v : result.values) {
    std::string head = v.label + " = " + v.closed;
    if (!v.rational) {
      std::snprintf(buf, sizeof(buf), " ≈ %.4f", v.expected);
      head += buf;
    }
    std::snprintf(buf, sizeof(buf), " (%s)  computed %.12f  %s", v.tag.c_str(), v.computed,
                  v.ok() ? "[ok]" : "[MISMATCH]");
    lines.push_back(head + buf);
  }
  for (const auto& o : result.orderings) {
    std::snprintf(buf, sizeof(buf), "ordering %s: %s %s  (min gap %.6f)", o.tag.c_str(),
                  o.text.c_str(), o.ok ? "✓" : "✗", o.min_margin);
    lines.push_back(buf);
  }
  std::snprintf(buf, sizeof(buf),
                "exact optimum = 5/12 = Q4 (Eq. 55)  computed %.12f  basis measurement %s",
                result.optimum, result.optimum_certified ? "certified ✓" : "not certified ✗");
  lines.push_back(buf);
  lines.push_back(result.ok() ? "self-check: all values match" : "self-check: MISMATCH");
  return lines;
}

}  // namespace qsd
