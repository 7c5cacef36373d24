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

#ifndef QSD_SWEEP_H_
#define QSD_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qsd/bounds.h"
#include "qsd/json_io.h"
#include "qsd/random.h"

namespace qsd {

struct SweepConfig {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<int> dims{2};
  std::vector<std::size_t> arities{3};
  std::vector<Purity> purities{Purity::kMixed};
  std::vector<PriorMode> priors{PriorMode::kUniform};
  std::vector<double> fixed_priors;
  std::vector<RandomSpec> specs;  // explicit list, replaces the grid when non-empty
  std::filesystem::path output;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

// Keys: seed, count, dims, arities, purities, priors, fixed_priors, specs,
// output, threads. A relative output is resolved against `base_dir`.
// Throws ParseError for malformed JSON values and std::invalid_argument for
// out-of-range settings.
SweepConfig sweep_config_from_json(const Json& j, const std::filesystem::path& base_dir);

std::size_t sweep_size(const SweepConfig& config);

// Grid point k cycles dims fastest, then arities, purities, priors; its seed
// is splitmix64_mix(seed + k * SplitMix64::kGamma).
RandomSpec sweep_spec(const SweepConfig& config, std::size_t k);

Json random_spec_to_json(const RandomSpec& spec);
RandomSpec random_spec_from_json(const Json& j);

namespace invariant {
inline constexpr std::string_view kMjValid = "Mj:valid-povm";
inline constexpr std::string_view kMjAchieved = "Mj:achieved=q_j+sumP/(r-1)";
inline constexpr std::string_view kMjMax = "Mj:max-achieved=L1_new";
inline constexpr std::string_view kExactCertified = "exact:holevo-certified";
}  // namespace invariant

struct SweepRow {
  std::size_t index = 0;
  RandomSpec spec;
  std::vector<double> priors;
  BoundsReport report;
  std::vector<double> mj_achieved;
  std::vector<double> mj_formula;
  bool mj_valid = true;
  bool commuting = false;
  std::optional<bool> exact_certified;
  // Every asserted invariant evaluated on this row, true when it holds.
  std::map<std::string, bool> invariants;
  std::vector<std::string> violations() const;
};

SweepRow evaluate_sweep_row(const RandomSpec& spec, std::size_t index);

struct SweepResult {
  std::vector<SweepRow> rows;
  std::map<std::string, std::size_t> violation_counts;
  std::size_t total_violations() const;
};

// Rows are computed on a worker pool; the result is in spec order and does
// not depend on the thread count.
SweepResult run_sweep(const SweepConfig& config);

Json sweep_row_to_json(const SweepRow& row);
Json sweep_summary_to_json(const SweepResult& result);

// One JSON object per line, summary last. Written to a sibling temporary
// file and renamed over `path`.
void write_sweep_results(const SweepResult& result, const std::filesystem::path& path);

}  // namespace qsd

#endif  // QSD_SWEEP_H_
