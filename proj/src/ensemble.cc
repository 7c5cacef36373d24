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

#include "qsd/ensemble.h"

#include <cmath>
#include <string>

#include "qsd/error.h"
#include "qsd/random.h"

namespace qsd {

DensityMatrix DensityMatrix::from_operator(const HermitianOperator& op) {
  const double tr = op.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw Error(ErrorCode::kNotDensityMatrix, "trace is " + std::to_string(tr) + ", not 1");
  }
  const double lo = min_eigenvalue(op);
  if (lo < -tol::kPsd) {
    throw Error(ErrorCode::kNotDensityMatrix,
                "smallest eigenvalue " + std::to_string(lo) + " is negative");
  }
  return DensityMatrix(op);
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  return from_operator(HermitianOperator::from_matrix(m));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "fidelity of states with different dimensions");
  }
  return product_trace_norm(sqrt_psd(rho.op()), sqrt_psd(sigma.op()));
}

Ensemble validate_ensemble(std::span<const RawEntry> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorCode::kTooFewStates,
                "need at least 2 states, got " + std::to_string(raw.size()));
  }
  std::vector<double> priors;
  std::vector<DensityMatrix> states;
  priors.reserve(raw.size());
  states.reserve(raw.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double q = raw[i].prior;
    if (!(q > 0.0) || !std::isfinite(q)) {
      throw Error(ErrorCode::kPriorNotPositive,
                  "prior " + std::to_string(i) + " is " + std::to_string(q), i);
    }
    sum += q;
    priors.push_back(q);
  }
  if (std::abs(sum - 1.0) > kPriorSumTolerance) {
    throw Error(ErrorCode::kPriorsNotNormalized, "priors sum to " + std::to_string(sum));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && raw[i].state.rows() != raw[0].state.rows()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "state " + std::to_string(i) + " has dimension " +
                      std::to_string(raw[i].state.rows()) + ", expected " +
                      std::to_string(raw[0].state.rows()),
                  i);
    }
    try {
      states.push_back(DensityMatrix::from_matrix(raw[i].state));
    } catch (const Error& err) {
      throw Error(ErrorCode::kNotDensityMatrix,
                  "state " + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return Ensemble(std::move(priors), std::move(states));
}

namespace {

void check_index(const Ensemble& e, std::size_t i) {
  if (i >= e.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(i) + " out of range for " + std::to_string(e.size()) +
                    " states",
                i);
  }
}

}  // namespace

HermitianOperator weighted_state(const Ensemble& e, std::size_t i) {
  check_index(e, i);
  return e.prior(i) * e.state(i).op();
}

DensityMatrix mixture(const Ensemble& e) {
  HermitianOperator sum = HermitianOperator::zero(e.dim());
  for (std::size_t i = 0; i < e.size(); ++i) sum = sum + weighted_state(e, i);
  return DensityMatrix::from_operator(sum);
}

HermitianOperator pairwise_difference(const Ensemble& e, std::size_t i, std::size_t j) {
  check_index(e, i);
  check_index(e, j);
  if (i == j) throw Error(ErrorCode::kSameIndex, "pairwise difference needs i != j", i);
  return weighted_state(e, i) - weighted_state(e, j);
}

CommutingCheck is_commuting_family(const Ensemble& e) {
  const std::size_t r = e.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const ComplexMatrix& a = e.state(i).matrix();
      const ComplexMatrix& b = e.state(j).matrix();
      if (max_abs(a * b - b * a) > kCommuteTolerance) return {};
    }
  }

  // Generic positive combinations of the states have non-degenerate spectra
  // wherever the family can be told apart, so their eigenbasis diagonalizes
  // every member.
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SplitMix64 rng(0xC0FFEEULL, static_cast<std::uint64_t>(attempt));
    HermitianOperator combo = HermitianOperator::zero(e.dim());
    for (std::size_t i = 0; i < r; ++i) {
      combo = combo + (0.5 + rng.uniform()) * e.state(i).op();
    }
    const ComplexMatrix v = hermitian_eig(combo).eigenvectors;
    bool diagonal = true;
    for (std::size_t i = 0; i < r && diagonal; ++i) {
      ComplexMatrix d = v.adjoint() * e.state(i).matrix() * v;
      d.diagonal().setZero();
      diagonal = max_abs(d) <= kDiagonalTolerance;
    }
    if (diagonal) return {true, v};
  }
  return {};
}

}  // namespace qsd
