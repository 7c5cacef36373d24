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

// Deterministic pseudorandom states, ensembles and measurements.
//
// Every draw comes from a SplitMix64 stream keyed by (seed, stream index):
//
//   state_0 = seed ^ mix(stream ^ 0x6A09E667F3BCC909)
//   next:     state += 0x9E3779B97F4A7C15; return mix(state)
//   mix(z):   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//             return z ^ (z >> 31)
//
// Uniforms are (next() >> 11) * 2^-53. Gaussians use Box-Muller on
// (u1 = 1 - uniform(), u2 = uniform()), returning r cos(2 pi u2) first and
// r sin(2 pi u2) on the following call. A complex Gaussian is two
// consecutive real Gaussians (real part first).

#ifndef QSD_RANDOM_H_
#define QSD_RANDOM_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qsd/ensemble.h"
#include "qsd/operator.h"
#include "qsd/povm.h"

namespace qsd {

std::uint64_t splitmix64_mix(std::uint64_t z);

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0x6A09E667F3BCC909ULL;

  SplitMix64(std::uint64_t seed, std::uint64_t stream)
      : state_(seed ^ splitmix64_mix(stream ^ kStreamSalt)) {}

  std::uint64_t next() {
    state_ += kGamma;
    return splitmix64_mix(state_);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double gaussian();
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

enum class Purity { kPure, kMixed, kCommuting };
enum class PriorMode { kUniform, kRandomSimplex, kFixed };

std::string_view purity_name(Purity p);
std::string_view prior_mode_name(PriorMode p);
Purity parse_purity(std::string_view name);
PriorMode parse_prior_mode(std::string_view name);

struct RandomSpec {
  std::uint64_t seed = 0;
  int dim = 2;
  std::size_t arity = 2;
  Purity purity = Purity::kMixed;
  PriorMode priors = PriorMode::kUniform;
  std::vector<double> fixed_priors;  // used with PriorMode::kFixed

  bool operator==(const RandomSpec&) const = default;
};

// Reserved stream indices. States use streams 0..arity-1.
inline constexpr std::uint64_t kPriorStream = 1ULL << 40;
inline constexpr std::uint64_t kBasisStream = (1ULL << 40) + 1;
inline constexpr std::uint64_t kPovmStreamBase = 1ULL << 41;

// Random-simplex priors are clipped below at this value and renormalized.
inline constexpr double kPriorFloor = 1e-3;

ComplexMatrix ginibre(SplitMix64& rng, int rows, int cols);
// QR of a Ginibre matrix with the phases of R's diagonal absorbed.
ComplexMatrix random_unitary(SplitMix64& rng, int dim);

DensityMatrix random_pure_state(const RandomSpec& spec, std::uint64_t stream);
DensityMatrix random_mixed_state(const RandomSpec& spec, std::uint64_t stream);
std::vector<double> random_priors(const RandomSpec& spec);
Ensemble random_ensemble(const RandomSpec& spec);

// {S^-1/2 A_k S^-1/2} with A_k = G_k G_k^dagger and S = sum_k A_k. Retries
// with fresh draws up to three times if S is near-singular, then throws
// kSingularNormalizer.
Povm random_povm(const RandomSpec& spec, std::size_t arity, std::uint64_t stream = 0);

}  // namespace qsd

#endif  // QSD_RANDOM_H_
