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

#include "qsd/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsd/error.h"

namespace qsd {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::gaussian() {
  if (spare_) {
    const double g = *spare_;
    spare_.reset();
    return g;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::string_view purity_name(Purity p) {
  switch (p) {
    case Purity::kPure: return "pure";
    case Purity::kMixed: return "mixed";
    case Purity::kCommuting: return "commuting";
  }
  return "mixed";
}

std::string_view prior_mode_name(PriorMode p) {
  switch (p) {
    case PriorMode::kUniform: return "uniform";
    case PriorMode::kRandomSimplex: return "random-simplex";
    case PriorMode::kFixed: return "fixed";
  }
  return "uniform";
}

Purity parse_purity(std::string_view name) {
  if (name == "pure") return Purity::kPure;
  if (name == "mixed") return Purity::kMixed;
  if (name == "commuting") return Purity::kCommuting;
  throw std::invalid_argument("unknown purity mode '" + std::string(name) + "'");
}

PriorMode parse_prior_mode(std::string_view name) {
  if (name == "uniform") return PriorMode::kUniform;
  if (name == "random-simplex") return PriorMode::kRandomSimplex;
  if (name == "fixed") return PriorMode::kFixed;
  throw std::invalid_argument("unknown prior mode '" + std::string(name) + "'");
}

ComplexMatrix ginibre(SplitMix64& rng, int rows, int cols) {
  ComplexMatrix g(rows, cols);
  // Row-major fill order is part of the reproducibility contract.
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) g(i, k) = rng.complex_gaussian();
  }
  return g;
}

ComplexMatrix random_unitary(SplitMix64& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = rmat(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

namespace {

void check_dim(const RandomSpec& spec) {
  if (spec.dim < 1) throw std::invalid_argument("random spec needs dim >= 1");
}

std::vector<double> exponential_simplex(SplitMix64& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    sum += x;
  }
  if (!(sum > 0.0)) {
    for (auto& x : w) x = 1.0;
    sum = static_cast<double>(n);
  }
  for (auto& x : w) x /= sum;
  return w;
}

}  // namespace

DensityMatrix random_pure_state(const RandomSpec& spec, std::uint64_t stream) {
  check_dim(spec);
  SplitMix64 rng(spec.seed, stream);
  ComplexVector v = ginibre(rng, spec.dim, 1).col(0);
  const double norm = v.norm();
  if (!(norm > 0.0)) v = ComplexVector::Unit(spec.dim, 0);
  else v /= norm;
  return DensityMatrix::from_operator(HermitianOperator::projector(v));
}

DensityMatrix random_mixed_state(const RandomSpec& spec, std::uint64_t stream) {
  check_dim(spec);
  SplitMix64 rng(spec.seed, stream);
  const ComplexMatrix g = ginibre(rng, spec.dim, spec.dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho);
}

std::vector<double> random_priors(const RandomSpec& spec) {
  const std::size_t r = spec.arity;
  switch (spec.priors) {
    case PriorMode::kUniform:
      return std::vector<double>(r, 1.0 / static_cast<double>(r));
    case PriorMode::kFixed:
      if (spec.fixed_priors.size() != r) {
        throw std::invalid_argument("fixed prior list has " +
                                    std::to_string(spec.fixed_priors.size()) +
                                    " entries, expected " + std::to_string(r));
      }
      return spec.fixed_priors;
    case PriorMode::kRandomSimplex: {
      SplitMix64 rng(spec.seed, kPriorStream);
      std::vector<double> q = exponential_simplex(rng, r);
      double sum = 0.0;
      for (auto& x : q) {
        x = std::max(x, kPriorFloor);
        sum += x;
      }
      for (auto& x : q) x /= sum;
      return q;
    }
  }
  return {};
}

Ensemble random_ensemble(const RandomSpec& spec) {
  check_dim(spec);
  if (spec.arity < 2) throw std::invalid_argument("random spec needs arity >= 2");
  const std::vector<double> priors = random_priors(spec);
  std::vector<RawEntry> raw;
  raw.reserve(spec.arity);

  ComplexMatrix basis;
  if (spec.purity == Purity::kCommuting) {
    SplitMix64 rng(spec.seed, kBasisStream);
    basis = random_unitary(rng, spec.dim);
  }
  for (std::size_t i = 0; i < spec.arity; ++i) {
    switch (spec.purity) {
      case Purity::kPure:
        raw.push_back({priors[i], random_pure_state(spec, i).matrix()});
        break;
      case Purity::kMixed:
        raw.push_back({priors[i], random_mixed_state(spec, i).matrix()});
        break;
      case Purity::kCommuting: {
        SplitMix64 rng(spec.seed, i);
        const std::vector<double> spectrum = exponential_simplex(rng, spec.dim);
        const RealVector lambda = Eigen::Map<const RealVector>(spectrum.data(), spec.dim);
        raw.push_back({priors[i], basis * lambda.cast<Complex>().asDiagonal() * basis.adjoint()});
        break;
      }
    }
  }
  return validate_ensemble(raw);
}

Povm random_povm(const RandomSpec& spec, std::size_t arity, std::uint64_t stream) {
  check_dim(spec);
  if (arity < 2) throw std::invalid_argument("random POVM needs arity >= 2");
  constexpr int kDraws = 3;
  constexpr double kConditionFloor = 1e-10;
  for (int attempt = 0; attempt < kDraws; ++attempt) {
    SplitMix64 rng(spec.seed, kPovmStreamBase + 4 * stream + static_cast<std::uint64_t>(attempt));
    std::vector<HermitianOperator> parts;
    parts.reserve(arity);
    HermitianOperator total = HermitianOperator::zero(spec.dim);
    for (std::size_t k = 0; k < arity; ++k) {
      const ComplexMatrix g = ginibre(rng, spec.dim, spec.dim);
      parts.push_back(HermitianOperator::from_matrix(g * g.adjoint()));
      total = total + parts.back();
    }
    try {
      const HermitianOperator norm = inverse_sqrt_pd(total, kConditionFloor);
      std::vector<HermitianOperator> effects;
      effects.reserve(arity);
      for (const auto& a : parts) {
        effects.push_back(HermitianOperator::from_matrix(norm.matrix() * a.matrix() * norm.matrix()));
      }
      return make_povm(std::move(effects));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNotPsd) throw;
    }
  }
  throw Error(ErrorCode::kSingularNormalizer,
              "normalizer stayed singular after " + std::to_string(kDraws) + " draws");
}

}  // namespace qsd
