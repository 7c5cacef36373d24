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

#include "qsd/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsd/error.h"
#include "qsd/optimality.h"

namespace qsd {

double PairwiseTable::sum_trace_distances() const {
  double s = 0.0;
  const auto r = trace_distance.rows();
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) s += trace_distance(i, j);
  }
  return s;
}

PairwiseTable pairwise_table(const Ensemble& e) {
  const auto r = static_cast<Eigen::Index>(e.size());
  PairwiseTable t{Eigen::MatrixXd::Zero(r, r), Eigen::MatrixXd::Zero(r, r),
                  Eigen::MatrixXd::Identity(r, r)};

  std::vector<HermitianOperator> roots;
  roots.reserve(e.size());
  for (const auto& rho : e.states()) roots.push_back(sqrt_psd(rho.op()));

  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const SpectralDecomposition s = hermitian_eig(pairwise_difference(e, ui, uj));
      double pos = 0.0;
      double neg = 0.0;
      double abs_sum = 0.0;
      for (double l : s.eigenvalues) {
        if (l > tol::kZero) pos += l;
        if (-l > tol::kZero) neg -= l;
        abs_sum += std::abs(l);
      }
      t.trace_distance(i, j) = t.trace_distance(j, i) = abs_sum;
      // The positive part of q_j rho_j - q_i rho_i is the negative part of
      // q_i rho_i - q_j rho_j.
      t.positive_norm(i, j) = pos;
      t.positive_norm(j, i) = neg;
      t.fidelity(i, j) = t.fidelity(j, i) = product_trace_norm(roots[ui], roots[uj]);
    }
  }
  return t;
}

double helstrom(const Ensemble& e) {
  if (e.size() != 2) {
    throw Error(ErrorCode::kWrongArity,
                "Helstrom bound needs exactly 2 states, got " + std::to_string(e.size()));
  }
  return 0.5 * (1.0 + trace_norm(pairwise_difference(e, 0, 1)));
}

Extremum max_with_ties(std::span<const double> values) {
  Extremum best{values.front(), 0};
  for (std::size_t j = 1; j < values.size(); ++j) best.value = std::max(best.value, values[j]);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] >= best.value - kTieTolerance) {
      best.index = j;
      break;
    }
  }
  return best;
}

Extremum min_with_ties(std::span<const double> values) {
  Extremum best{values.front(), 0};
  for (std::size_t j = 1; j < values.size(); ++j) best.value = std::min(best.value, values[j]);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] <= best.value + kTieTolerance) {
      best.index = j;
      break;
    }
  }
  return best;
}

namespace {

double column_sum(const Eigen::MatrixXd& m, std::size_t j) {
  return m.col(static_cast<Eigen::Index>(j)).sum();
}

void check_rewrite(std::span<const double> direct, std::span<const double> rewritten,
                   const char* what) {
  for (std::size_t j = 0; j < direct.size(); ++j) {
    const double gap = std::abs(direct[j] - rewritten[j]);
    if (gap > kRewriteTolerance) {
      throw Error(ErrorCode::kNumericalFailure,
                  std::string(what) + ": equivalent forms disagree by " + std::to_string(gap) +
                      " at reference state " + std::to_string(j));
    }
  }
}

double max_gap(std::span<const double> a, std::span<const double> b) {
  double g = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) g = std::max(g, std::abs(a[j] - b[j]));
  return g;
}

}  // namespace

std::vector<double> l1_new_terms(const Ensemble& e, const PairwiseTable& t) {
  const double inv = 1.0 / static_cast<double>(e.size() - 1);
  std::vector<double> out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[j] = e.prior(j) + inv * column_sum(t.positive_norm, j);
  }
  return out;
}

std::vector<double> l1_new_terms_from_distances(const Ensemble& e, const PairwiseTable& t) {
  const double r = static_cast<double>(e.size());
  const double half_inv = 1.0 / (2.0 * (r - 1.0));
  std::vector<double> out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[j] = half_inv + half_inv * (column_sum(t.trace_distance, j) + e.prior(j) * (r - 2.0));
  }
  return out;
}

std::vector<double> q4_terms(const Ensemble& e, const PairwiseTable& t) {
  std::vector<double> out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[j] = e.prior(j) + column_sum(t.positive_norm, j);
  }
  return out;
}

std::vector<double> q4_terms_from_distances(const Ensemble& e, const PairwiseTable& t) {
  const double r = static_cast<double>(e.size());
  std::vector<double> out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[j] = 0.5 + 0.5 * (column_sum(t.trace_distance, j) - e.prior(j) * (r - 2.0));
  }
  return out;
}

double lower_l1_new(const Ensemble& e, const PairwiseTable& t) {
  const std::vector<double> direct = l1_new_terms(e, t);
  check_rewrite(direct, l1_new_terms_from_distances(e, t), "L1_new");
  return max_with_ties(direct).value;
}

double lower_l1_new(const Ensemble& e) { return lower_l1_new(e, pairwise_table(e)); }

double lower_l2_new(const Ensemble& e, const PairwiseTable& t) {
  const double r = static_cast<double>(e.size());
  return (1.0 + t.sum_trace_distances() / (r - 1.0)) / r;
}

double lower_l2_new(const Ensemble& e) { return lower_l2_new(e, pairwise_table(e)); }

double upper_q4(const Ensemble& e, const PairwiseTable& t) {
  const std::vector<double> direct = q4_terms(e, t);
  check_rewrite(direct, q4_terms_from_distances(e, t), "Q4");
  return min_with_ties(direct).value;
}

double upper_q4(const Ensemble& e) { return upper_q4(e, pairwise_table(e)); }

double upper_qnew(const Ensemble& e, const PairwiseTable& t) {
  const double r = static_cast<double>(e.size());
  return (1.0 + t.sum_trace_distances()) / r;
}

double upper_qnew(const Ensemble& e) { return upper_qnew(e, pairwise_table(e)); }

double weighted_root_trace(const Ensemble& e) {
  HermitianOperator sum = HermitianOperator::zero(e.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const ComplexMatrix& rho = e.state(i).matrix();
    const double q2 = e.prior(i) * e.prior(i);
    sum = sum + q2 * HermitianOperator::from_matrix(rho * rho);
  }
  return sqrt_psd(sum).trace();
}

KnownLowerBounds known_lower_bounds(const Ensemble& e, const PairwiseTable& t) {
  KnownLowerBounds out;
  out.l1 = *std::max_element(e.priors().begin(), e.priors().end());
  double overlap = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      overlap += std::sqrt(e.prior(i) * e.prior(j)) *
                 t.fidelity(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  out.l2 = 1.0 - overlap;
  out.l2_was_clamped = out.l2 < 0.0;
  out.l2_clamped = std::max(out.l2, 0.0);
  const double root = weighted_root_trace(e);
  out.l3 = root * root;
  return out;
}

KnownLowerBounds known_lower_bounds(const Ensemble& e) {
  return known_lower_bounds(e, pairwise_table(e));
}

KnownUpperBounds known_upper_bounds(const Ensemble& e, const PairwiseTable& t) {
  KnownUpperBounds out;
  const double r = static_cast<double>(e.size());
  out.q2 = 0.5 * (1.0 + t.sum_trace_distances() / (r - 1.0));
  double overlap = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const double f = t.fidelity(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      overlap += e.prior(i) * e.prior(j) * f * f;
    }
  }
  out.q3 = 1.0 - overlap;
  out.q5 = weighted_root_trace(e);
  return out;
}

KnownUpperBounds known_upper_bounds(const Ensemble& e) {
  return known_upper_bounds(e, pairwise_table(e));
}

std::string_view exact_method_name(ExactMethod m) {
  return m == ExactMethod::kBinary ? "binary" : "commuting";
}

ExactMethod parse_exact_method(std::string_view name) {
  if (name == "binary") return ExactMethod::kBinary;
  if (name == "commuting") return ExactMethod::kCommuting;
  throw std::invalid_argument("unknown exact method '" + std::string(name) + "'");
}

std::vector<const OrderingCheck*> BoundsReport::violations() const {
  std::vector<const OrderingCheck*> out;
  for (const auto& c : checks) {
    if (c.asserted && !c.holds) out.push_back(&c);
  }
  return out;
}

const OrderingCheck* BoundsReport::find_check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool operator==(const BoundsReport& a, const BoundsReport& b) {
  return a.arity == b.arity && a.dim == b.dim && a.equiprobable == b.equiprobable &&
         a.trace_distance == b.trace_distance && a.fidelity == b.fidelity &&
         a.sum_trace_distances == b.sum_trace_distances && a.lower == b.lower &&
         a.upper == b.upper && a.bracket == b.bracket && a.exact == b.exact &&
         a.l1_new_argmax == b.l1_new_argmax && a.q4_argmin == b.q4_argmin &&
         a.checks == b.checks;
}

namespace {

void add_check(BoundsReport& report, std::string_view name, double lhs, double rhs,
               bool asserted = true) {
  report.checks.push_back(
      {std::string(name), lhs, rhs, asserted, lhs <= rhs + kOrderingSlack});
}

bool is_equiprobable(const Ensemble& e) {
  const double uniform = 1.0 / static_cast<double>(e.size());
  return std::all_of(e.priors().begin(), e.priors().end(), [&](double q) {
    return std::abs(q - uniform) <= kEquiprobableTolerance;
  });
}

}  // namespace

BoundsReport bounds_report(const Ensemble& e) {
  const PairwiseTable t = pairwise_table(e);
  const double r = static_cast<double>(e.size());

  BoundsReport rep;
  rep.arity = e.size();
  rep.dim = e.dim();
  rep.equiprobable = is_equiprobable(e);
  rep.trace_distance = t.trace_distance;
  rep.fidelity = t.fidelity;
  rep.sum_trace_distances = t.sum_trace_distances();

  const std::vector<double> l1_terms = l1_new_terms(e, t);
  const std::vector<double> l1_rewrite = l1_new_terms_from_distances(e, t);
  const std::vector<double> q4 = q4_terms(e, t);
  const std::vector<double> q4_rewrite = q4_terms_from_distances(e, t);
  const Extremum l1_best = max_with_ties(l1_terms);
  const Extremum q4_best = min_with_ties(q4);

  const KnownLowerBounds known_low = known_lower_bounds(e, t);
  const KnownUpperBounds known_high = known_upper_bounds(e, t);

  rep.lower = {known_low.l1,     known_low.l2, known_low.l2_clamped, known_low.l2_was_clamped,
               known_low.l3,     l1_best.value, lower_l2_new(e, t)};
  rep.upper = {known_high.q2, known_high.q3, q4_best.value, known_high.q5, upper_qnew(e, t)};
  rep.l1_new_argmax = l1_best.index;
  rep.q4_argmin = q4_best.index;

  const LowerBounds& lo = rep.lower;
  const UpperBounds& up = rep.upper;
  rep.bracket.low = std::max({lo.l1, lo.l2, lo.l3, lo.l1_new, lo.l2_new});
  rep.bracket.high = std::min({up.q2, up.q3, up.q4, up.q5, up.q_new});

  const double sum_t = rep.sum_trace_distances;
  add_check(rep, check::kL2NewBelowL1New, lo.l2_new, lo.l1_new);
  add_check(rep, check::kL1NewBelowQ4, lo.l1_new, up.q4);
  add_check(rep, check::kQ4BelowQNew, up.q4, up.q_new);
  add_check(rep, check::kQNewBelowQ2, up.q_new, up.q2);
  add_check(rep, check::kQ2BelowQ3Relaxed, up.q2, 1.0 - (1.0 - up.q3) / (r - 1.0));
  add_check(rep, check::kQNewBelowQ3, up.q_new, up.q3, rep.equiprobable);
  add_check(rep, check::kL1BelowL1New, lo.l1, lo.l1_new);
  add_check(rep, check::kL2BelowL2New, lo.l2, lo.l2_new,
            sum_t <= (r - 1.0) * (r - 1.0) / (r + 1.0));
  add_check(rep, check::kSumTBelowRMinus1, sum_t, r - 1.0);
  add_check(rep, check::kL1NewRewrite, max_gap(l1_terms, l1_rewrite), 0.0);
  add_check(rep, check::kQ4Rewrite, max_gap(q4, q4_rewrite), 0.0);

  if (e.size() == 2) {
    rep.exact = ExactValue{helstrom(e), ExactMethod::kBinary};
  } else if (is_commuting_family(e).commuting) {
    rep.exact = ExactValue{commuting_optimum(e).value, ExactMethod::kCommuting};
  }
  if (rep.exact) {
    add_check(rep, check::kExactAboveLow, rep.bracket.low, rep.exact->value);
    add_check(rep, check::kExactBelowHigh, rep.exact->value, rep.bracket.high);
  }
  return rep;
}

}  // namespace qsd
