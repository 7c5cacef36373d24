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

#include "qsd/optimality.h"

#include <algorithm>
#include <string>

#include "qsd/error.h"

namespace qsd {

Lambda0 lambda0(const Ensemble& e, const Povm& m) {
  check_compatible(e, m);
  ComplexMatrix sum = ComplexMatrix::Zero(e.dim(), e.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    sum += e.prior(i) * (e.state(i).matrix() * m.effect(i).matrix());
  }
  const double skew = max_abs(sum - sum.adjoint());
  const ComplexMatrix sym = 0.5 * (sum + sum.adjoint());
  return {HermitianOperator::from_matrix(sym), skew};
}

Certificate check_holevo(const Ensemble& e, const Povm& m, double tolerance) {
  Lambda0 l = lambda0(e, m);
  Certificate cert{l.op, l.antihermitian_magnitude, {}, {}, true, true, l.op.trace(), tolerance};
  for (std::size_t i = 0; i < e.size(); ++i) {
    const HermitianOperator gap = l.op - weighted_state(e, i);
    const double orth = max_abs(gap.matrix() * m.effect(i).matrix());
    const double dom = std::min(0.0, min_eigenvalue(gap));
    cert.orthogonality_residuals.push_back(orth);
    cert.domination_residuals.push_back(dom);
    cert.orthogonality_pass = cert.orthogonality_pass && orth <= tolerance;
    cert.domination_pass = cert.domination_pass && dom >= -tolerance;
  }
  return cert;
}

CommutingOptimum commuting_optimum(const Ensemble& e) {
  const CommutingCheck family = is_commuting_family(e);
  if (!family.commuting) {
    throw Error(ErrorCode::kNotCommuting, "states do not share a common eigenbasis");
  }
  const ComplexMatrix& basis = *family.basis;
  const int dim = e.dim();
  const std::size_t r = e.size();

  // weights(i, n) = q_i <n|rho_i|n>
  Eigen::MatrixXd weights(static_cast<Eigen::Index>(r), dim);
  for (std::size_t i = 0; i < r; ++i) {
    const ComplexMatrix d = basis.adjoint() * e.state(i).matrix() * basis;
    for (int n = 0; n < dim; ++n) {
      weights(static_cast<Eigen::Index>(i), n) = e.prior(i) * d(n, n).real();
    }
  }

  std::vector<std::size_t> assignment(static_cast<std::size_t>(dim), 0);
  std::vector<HermitianOperator> effects(r, HermitianOperator::zero(dim));
  double value = 0.0;
  for (int n = 0; n < dim; ++n) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < static_cast<Eigen::Index>(r); ++i) {
      if (weights(i, n) > weights(best, n)) best = i;
    }
    const auto winner = static_cast<std::size_t>(best);
    assignment[static_cast<std::size_t>(n)] = winner;
    value += weights(best, n);
    effects[winner] = effects[winner] + HermitianOperator::projector(basis.col(n));
  }
  return {value, make_povm(std::move(effects)), std::move(assignment), basis};
}

ExactOrBracket exact_or_bracket(const Ensemble& e) {
  if (e.size() == 2) return ExactValue{helstrom(e), ExactMethod::kBinary};
  if (is_commuting_family(e).commuting) {
    return ExactValue{commuting_optimum(e).value, ExactMethod::kCommuting};
  }
  return bounds_report(e).bracket;
}

}  // namespace qsd
