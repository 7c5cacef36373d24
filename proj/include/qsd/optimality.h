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

// Optimality certificates for discrimination measurements and the cases
// where the optimum is known in closed form.

#ifndef QSD_OPTIMALITY_H_
#define QSD_OPTIMALITY_H_

#include <cstddef>
#include <variant>
#include <vector>

#include "qsd/bounds.h"
#include "qsd/ensemble.h"
#include "qsd/operator.h"
#include "qsd/povm.h"

namespace qsd {

inline constexpr double kCertificateTolerance = 1e-7;

struct Lambda0 {
  HermitianOperator op;                  // Hermitian part of sum_i q_i rho_i M(i)
  double antihermitian_magnitude = 0.0;  // max |L - L^dagger| before symmetrizing
};

Lambda0 lambda0(const Ensemble& e, const Povm& m);

// A measurement M is optimal iff, with L = sum_i q_i rho_i M(i),
//   (L - q_i rho_i) M(i) = 0  and  L >= q_i rho_i  for every i,
// in which case the optimum equals tr L.
struct Certificate {
  HermitianOperator lambda0;
  double antihermitian_magnitude = 0.0;
  std::vector<double> orthogonality_residuals;  // max |(L - q_i rho_i) M(i)|
  std::vector<double> domination_residuals;     // min(0, lambda_min(L - q_i rho_i))
  bool orthogonality_pass = false;
  bool domination_pass = false;
  double claimed_value = 0.0;  // tr L
  double tolerance = kCertificateTolerance;

  bool passed() const { return orthogonality_pass && domination_pass; }
};

Certificate check_holevo(const Ensemble& e, const Povm& m,
                         double tolerance = kCertificateTolerance);

struct CommutingOptimum {
  double value = 0.0;
  Povm povm;
  // assignment[n] = state guessed on common eigenvector n.
  std::vector<std::size_t> assignment;
  ComplexMatrix basis;
};

// sum_n max_i q_i lambda_n^(i) in the common eigenbasis, with the basis
// measurement guessing an argmax state on each eigenvector (ties go to the
// smallest index). Throws kNotCommuting for non-commuting families.
CommutingOptimum commuting_optimum(const Ensemble& e);

using ExactOrBracket = std::variant<ExactValue, Bracket>;

// The exact optimum for r = 2 (binary) or a commuting family, otherwise the
// bracket from bounds_report.
ExactOrBracket exact_or_bracket(const Ensemble& e);

}  // namespace qsd

#endif  // QSD_OPTIMALITY_H_
