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

#ifndef QSD_ENSEMBLE_H_
#define QSD_ENSEMBLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qsd/operator.h"

namespace qsd {

// PSD, unit-trace Hermitian operator.
class DensityMatrix {
 public:
  // Throws kNotDensityMatrix when an eigenvalue is below -tol::kPsd or the
  // trace differs from one by more than 1e-9.
  static DensityMatrix from_operator(const HermitianOperator& op);
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  int dim() const { return op_.dim(); }

 private:
  explicit DensityMatrix(HermitianOperator op) : op_(std::move(op)) {}

  HermitianOperator op_;
};

// ||sqrt(rho) sqrt(sigma)||_1
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct RawEntry {
  double prior;
  ComplexMatrix state;
};

// States rho_i prepared with priors q_i > 0, sum q_i = 1, r >= 2.
class Ensemble {
 public:
  std::size_t size() const { return priors_.size(); }
  int dim() const { return states_.front().dim(); }
  double prior(std::size_t i) const { return priors_.at(i); }
  const DensityMatrix& state(std::size_t i) const { return states_.at(i); }
  std::span<const double> priors() const { return priors_; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  friend Ensemble validate_ensemble(std::span<const RawEntry> raw);

  Ensemble(std::vector<double> priors, std::vector<DensityMatrix> states)
      : priors_(std::move(priors)), states_(std::move(states)) {}

  std::vector<double> priors_;
  std::vector<DensityMatrix> states_;
};

inline constexpr double kPriorSumTolerance = 1e-9;
inline constexpr double kTraceTolerance = 1e-9;

Ensemble validate_ensemble(std::span<const RawEntry> raw);

// q_i rho_i
HermitianOperator weighted_state(const Ensemble& e, std::size_t i);

// sum_i q_i rho_i
DensityMatrix mixture(const Ensemble& e);

// q_i rho_i - q_j rho_j
HermitianOperator pairwise_difference(const Ensemble& e, std::size_t i, std::size_t j);

inline constexpr double kCommuteTolerance = 1e-8;
inline constexpr double kDiagonalTolerance = 1e-7;

struct CommutingCheck {
  bool commuting = false;
  // Unitary whose columns simultaneously diagonalize every state; set only
  // when `commuting` is true.
  std::optional<ComplexMatrix> basis;
};

CommutingCheck is_commuting_family(const Ensemble& e);

}  // namespace qsd

#endif  // QSD_ENSEMBLE_H_
