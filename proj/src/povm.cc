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

#include "qsd/povm.h"

#include <string>

#include "qsd/error.h"

namespace qsd {

Povm make_povm(std::vector<HermitianOperator> effects) {
  if (effects.empty()) throw Error(ErrorCode::kNotComplete, "POVM has no effects");
  const int dim = effects.front().dim();
  HermitianOperator sum = HermitianOperator::zero(dim);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (effects[i].dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "effect " + std::to_string(i) + " has dimension " +
                      std::to_string(effects[i].dim()) + ", expected " + std::to_string(dim),
                  i);
    }
    const double lo = min_eigenvalue(effects[i]);
    if (lo < -tol::kPsd) {
      throw Error(ErrorCode::kNotPsd,
                  "effect " + std::to_string(i) + " has eigenvalue " + std::to_string(lo), i);
    }
    sum = sum + effects[i];
  }
  const double gap = max_abs(sum.matrix() - ComplexMatrix::Identity(dim, dim));
  if (gap > kCompletenessTolerance) {
    throw Error(ErrorCode::kNotComplete,
                "effects sum differs from identity by " + std::to_string(gap));
  }
  return Povm(std::move(effects));
}

Povm validate_povm(std::span<const ComplexMatrix> raw) {
  std::vector<HermitianOperator> effects;
  effects.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      effects.push_back(HermitianOperator::from_matrix(raw[i]));
    } catch (const Error& err) {
      throw Error(err.code(), "effect " + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return make_povm(std::move(effects));
}

void check_compatible(const Ensemble& e, const Povm& m) {
  if (m.size() != e.size()) {
    throw Error(ErrorCode::kArityMismatch, "POVM has " + std::to_string(m.size()) +
                                               " outcomes but ensemble has " +
                                               std::to_string(e.size()) + " states");
  }
  if (m.dim() != e.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "POVM acts on dimension " +
                                                   std::to_string(m.dim()) + ", states on " +
                                                   std::to_string(e.dim()));
  }
}

double success_probability(const Ensemble& e, const Povm& m) {
  check_compatible(e, m);
  double p = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    p += e.prior(i) * trace_product(e.state(i).op(), m.effect(i));
  }
  return p;
}

double error_probability(const Ensemble& e, const Povm& m) { return 1.0 - success_probability(e, m); }

double jth_representation(const Ensemble& e, const Povm& m, std::size_t j) {
  check_compatible(e, m);
  if (j >= e.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "reference index " + std::to_string(j), j);
  }
  double p = e.prior(j);
  const HermitianOperator ref = weighted_state(e, j);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i == j) continue;
    p += trace_product(weighted_state(e, i) - ref, m.effect(i));
  }
  return p;
}

double averaged_representation(const Ensemble& e, const Povm& m) {
  check_compatible(e, m);
  const std::size_t r = e.size();
  double s = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      s += trace_product(pairwise_difference(e, i, j), m.effect(i));
    }
  }
  return (1.0 + s) / static_cast<double>(r);
}

Povm construct_mj(const Ensemble& e, std::size_t j) {
  const std::size_t r = e.size();
  if (j >= r) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "reference index " + std::to_string(j) + " for " + std::to_string(r) + " states",
                j);
  }
  const double share = 1.0 / static_cast<double>(r - 1);
  std::vector<HermitianOperator> effects(r, HermitianOperator::zero(e.dim()));
  HermitianOperator rest = HermitianOperator::identity(e.dim());
  for (std::size_t i = 0; i < r; ++i) {
    if (i == j) continue;
    effects[i] = share * positive_projector(pairwise_difference(e, i, j));
    rest = rest - effects[i];
  }
  effects[j] = rest;
  return make_povm(std::move(effects));
}

Povm construct_helstrom_povm(const Ensemble& e) {
  if (e.size() != 2) {
    throw Error(ErrorCode::kWrongArity,
                "Helstrom measurement needs exactly 2 states, got " + std::to_string(e.size()));
  }
  HermitianOperator first = positive_projector(pairwise_difference(e, 0, 1));
  HermitianOperator second = HermitianOperator::identity(e.dim()) - first;
  return make_povm({std::move(first), std::move(second)});
}

}  // namespace qsd
