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

#ifndef QSD_POVM_H_
#define QSD_POVM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qsd/ensemble.h"
#include "qsd/operator.h"

namespace qsd {

inline constexpr double kCompletenessTolerance = 1e-8;

// Ordered list of PSD effects summing to the identity. Effect i is the
// outcome "state i was sent".
class Povm {
 public:
  std::size_t size() const { return effects_.size(); }
  int dim() const { return effects_.front().dim(); }
  const HermitianOperator& effect(std::size_t i) const { return effects_.at(i); }
  const std::vector<HermitianOperator>& effects() const { return effects_; }

 private:
  friend Povm make_povm(std::vector<HermitianOperator> effects);

  explicit Povm(std::vector<HermitianOperator> effects) : effects_(std::move(effects)) {}

  std::vector<HermitianOperator> effects_;
};

// Validates PSD-ness (kNotPsd with index), equal dimensions and completeness
// (kNotComplete).
Povm validate_povm(std::span<const ComplexMatrix> raw);
Povm make_povm(std::vector<HermitianOperator> effects);

// Throws kArityMismatch / kDimensionMismatch when `m` cannot be applied to `e`.
void check_compatible(const Ensemble& e, const Povm& m);

// sum_i q_i tr(rho_i M(i))
double success_probability(const Ensemble& e, const Povm& m);
double error_probability(const Ensemble& e, const Povm& m);

// q_j + sum_i tr((q_i rho_i - q_j rho_j) M(i))
double jth_representation(const Ensemble& e, const Povm& m, std::size_t j);

// (1/r) (1 + sum_{i,j} tr((q_i rho_i - q_j rho_j) M(i)))
double averaged_representation(const Ensemble& e, const Povm& m);

// The measurement built around reference state j: every other outcome i gets
// P_ij / (r-1), where P_ij projects onto the positive eigenspace of
// q_i rho_i - q_j rho_j, and outcome j takes the remainder. Its success
// probability is q_j + (1/(r-1)) sum_i ||(q_i rho_i - q_j rho_j)^+||_1.
Povm construct_mj(const Ensemble& e, std::size_t j);

// Two-outcome optimal measurement for r = 2. Outcome 0 is the projector onto
// the positive eigenspace of q_0 rho_0 - q_1 rho_1; the kernel goes to
// outcome 1.
Povm construct_helstrom_povm(const Ensemble& e);

}  // namespace qsd

#endif  // QSD_POVM_H_
