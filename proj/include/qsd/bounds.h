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

// Analytical lower and upper bounds on the optimal minimum-error success
// probability for an ensemble of r >= 2 states, and the combined report.
//
// Notation used below: T_ij = ||q_i rho_i - q_j rho_j||_1,
// P_ij = ||(q_i rho_i - q_j rho_j)^+||_1, F_ij = ||sqrt(rho_i) sqrt(rho_j)||_1.

#ifndef QSD_BOUNDS_H_
#define QSD_BOUNDS_H_

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/ensemble.h"

namespace qsd {

// Slack allowed when checking the analytical orderings between bounds.
inline constexpr double kOrderingSlack = 1e-9;
// Agreement required between algebraically equivalent forms of one bound.
inline constexpr double kRewriteTolerance = 1e-9;
// |q_i - 1/r| below this counts as equiprobable.
inline constexpr double kEquiprobableTolerance = 1e-12;
// Candidates within this of the extremum tie; the smallest index wins.
inline constexpr double kTieTolerance = 1e-12;

struct PairwiseTable {
  Eigen::MatrixXd trace_distance;  // T, symmetric, zero diagonal
  Eigen::MatrixXd positive_norm;   // P, P_ii = 0, P_ij - P_ji = q_i - q_j
  Eigen::MatrixXd fidelity;        // F, symmetric, unit diagonal

  std::size_t size() const { return static_cast<std::size_t>(trace_distance.rows()); }
  // sum_{i<j} T_ij
  double sum_trace_distances() const;
};

PairwiseTable pairwise_table(const Ensemble& e);

// 1/2 (1 + ||q_0 rho_0 - q_1 rho_1||_1); throws kWrongArity unless r = 2.
double helstrom(const Ensemble& e);

struct Extremum {
  double value = 0.0;
  std::size_t index = 0;
};

Extremum max_with_ties(std::span<const double> values);
Extremum min_with_ties(std::span<const double> values);

// Per-reference terms of the new lower bound, q_j + (1/(r-1)) sum_i P_ij, and
// the same quantity rewritten through trace distances,
// 1/(2(r-1)) + (1/(2(r-1))) (sum_i T_ij + q_j (r-2)).
std::vector<double> l1_new_terms(const Ensemble& e, const PairwiseTable& t);
std::vector<double> l1_new_terms_from_distances(const Ensemble& e, const PairwiseTable& t);

// Per-reference terms of Q4, q_j + sum_i P_ij, and the rewrite
// 1/2 + 1/2 (sum_i T_ij - q_j (r-2)).
std::vector<double> q4_terms(const Ensemble& e, const PairwiseTable& t);
std::vector<double> q4_terms_from_distances(const Ensemble& e, const PairwiseTable& t);

// max_j of l1_new_terms. Throws kNumericalFailure if the two forms disagree
// by more than kRewriteTolerance.
double lower_l1_new(const Ensemble& e, const PairwiseTable& t);
double lower_l1_new(const Ensemble& e);

// (1/r) (1 + (1/(r-1)) sum_{i<j} T_ij)
double lower_l2_new(const Ensemble& e, const PairwiseTable& t);
double lower_l2_new(const Ensemble& e);

// min_j of q4_terms, cross-checked like lower_l1_new.
double upper_q4(const Ensemble& e, const PairwiseTable& t);
double upper_q4(const Ensemble& e);

// (1/r) (1 + sum_{i<j} T_ij)
double upper_qnew(const Ensemble& e, const PairwiseTable& t);
double upper_qnew(const Ensemble& e);

// tr sqrt(sum_i q_i^2 rho_i^2)
double weighted_root_trace(const Ensemble& e);

struct KnownLowerBounds {
  double l1 = 0.0;          // max_j q_j
  double l2 = 0.0;          // 1 - sum_{i<j} sqrt(q_i q_j) F_ij, may be negative
  double l2_clamped = 0.0;  // max(l2, 0)
  bool l2_was_clamped = false;
  double l3 = 0.0;          // (tr sqrt(sum_i q_i^2 rho_i^2))^2
};

struct KnownUpperBounds {
  double q2 = 0.0;  // 1/2 (1 + (1/(r-1)) sum_{i<j} T_ij)
  double q3 = 0.0;  // 1 - sum_{i<j} q_i q_j F_ij^2
  double q5 = 0.0;  // tr sqrt(sum_i q_i^2 rho_i^2)
};

KnownLowerBounds known_lower_bounds(const Ensemble& e, const PairwiseTable& t);
KnownLowerBounds known_lower_bounds(const Ensemble& e);
KnownUpperBounds known_upper_bounds(const Ensemble& e, const PairwiseTable& t);
KnownUpperBounds known_upper_bounds(const Ensemble& e);

struct LowerBounds {
  double l1 = 0.0;
  double l2 = 0.0;
  double l2_clamped = 0.0;
  bool l2_was_clamped = false;
  double l3 = 0.0;
  double l1_new = 0.0;
  double l2_new = 0.0;

  bool operator==(const LowerBounds&) const = default;
};

struct UpperBounds {
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  double q5 = 0.0;
  double q_new = 0.0;

  bool operator==(const UpperBounds&) const = default;
};

struct Bracket {
  double low = 0.0;
  double high = 1.0;

  double width() const { return high - low; }
  bool operator==(const Bracket&) const = default;
};

enum class ExactMethod { kBinary, kCommuting };

std::string_view exact_method_name(ExactMethod m);
ExactMethod parse_exact_method(std::string_view name);

struct ExactValue {
  double value = 0.0;
  ExactMethod method = ExactMethod::kBinary;

  bool operator==(const ExactValue&) const = default;
};

// One analytical relation "lhs <= rhs", checked with kOrderingSlack.
// Relations that only hold under a side condition are recorded with
// asserted = false when the condition is not met.
struct OrderingCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool asserted = true;
  bool holds = true;

  bool operator==(const OrderingCheck&) const = default;
};

struct BoundsReport {
  std::size_t arity = 0;
  int dim = 0;
  bool equiprobable = false;
  Eigen::MatrixXd trace_distance;
  Eigen::MatrixXd fidelity;
  double sum_trace_distances = 0.0;
  LowerBounds lower;
  UpperBounds upper;
  Bracket bracket;
  std::optional<ExactValue> exact;
  std::size_t l1_new_argmax = 0;  // reference state realizing the new lower bound
  std::size_t q4_argmin = 0;
  std::vector<OrderingCheck> checks;

  // Asserted checks that fail.
  std::vector<const OrderingCheck*> violations() const;
  const OrderingCheck* find_check(std::string_view name) const;
};

bool operator==(const BoundsReport& a, const BoundsReport& b);

// Check names used in BoundsReport::checks.
namespace check {
inline constexpr std::string_view kL2NewBelowL1New = "L2_new<=L1_new";
inline constexpr std::string_view kL1NewBelowQ4 = "L1_new<=Q4";
inline constexpr std::string_view kQ4BelowQNew = "Q4<=Q_new";
inline constexpr std::string_view kQNewBelowQ2 = "Q_new<=Q2";
inline constexpr std::string_view kQ2BelowQ3Relaxed = "Q2<=1-(1-Q3)/(r-1)";
inline constexpr std::string_view kQNewBelowQ3 = "Q_new<=Q3[equiprobable]";
inline constexpr std::string_view kL1BelowL1New = "L1<=L1_new";
inline constexpr std::string_view kL2BelowL2New = "L2<=L2_new[sumT<=(r-1)^2/(r+1)]";
inline constexpr std::string_view kSumTBelowRMinus1 = "sumT<=r-1";
inline constexpr std::string_view kL1NewRewrite = "L1_new:positive-part=trace-distance-form";
inline constexpr std::string_view kQ4Rewrite = "Q4:positive-part=trace-distance-form";
inline constexpr std::string_view kExactAboveLow = "bracket.low<=exact";
inline constexpr std::string_view kExactBelowHigh = "exact<=bracket.high";
}  // namespace check

// All bounds, the bracket [max lower, min upper], the exact optimum when it is
// known in closed form (r = 2 or a commuting family) and the ordering checks.
BoundsReport bounds_report(const Ensemble& e);

}  // namespace qsd

#endif  // QSD_BOUNDS_H_
