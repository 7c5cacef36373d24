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

#ifndef QSD_COMMANDS_H_
#define QSD_COMMANDS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qsd/bounds.h"

namespace qsd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,       // certificate rejected, or sweep invariant violated
  kExitParse = 2,
  kExitValidation = 3,
  kExitNumerical = 4,
  kExitMismatch = 5,     // arity/dimension mismatch, index out of range
  kExitSelfCheck = 6,
};

enum class OutputFormat { kTable, kJson };
OutputFormat parse_output_format(std::string_view name);

inline constexpr std::string_view kTolEnv = "QSD_TOL";

// Certificate tolerance, taken from QSD_TOL when set. Throws ParseError for
// an unparsable or non-positive value.
double certificate_tolerance_from_env();

// "19/48" when x is within 1e-12 of a fraction with denominator <= 1000.
std::optional<std::string> recognize_rational(double x);

std::string render_bounds_table(const BoundsReport& report);

int cmd_bounds(const std::filesystem::path& ensemble_path,
               const std::optional<std::filesystem::path>& out_path, OutputFormat format,
               std::ostream& out, std::ostream& err);

int cmd_certify(const std::filesystem::path& ensemble_path,
                const std::filesystem::path& povm_path, std::ostream& out, std::ostream& err);

// `j` empty means every reference index.
int cmd_povm(const std::filesystem::path& ensemble_path, std::optional<std::size_t> j,
             const std::optional<std::filesystem::path>& out_dir, std::ostream& out,
             std::ostream& err);

int cmd_example(std::ostream& out, std::ostream& err);

int cmd_sweep(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err);

}  // namespace qsd::cli

#endif  // QSD_COMMANDS_H_
