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

#ifndef QSD_ERROR_H_
#define QSD_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsd {

enum class ErrorCode {
  kInvalidMatrix,  // not square, empty, or non-finite entries
  kNonHermitian,
  kNumericalFailure,
  kNotPsd,
  kDimensionMismatch,
  kPriorNotPositive,
  kPriorsNotNormalized,
  kNotDensityMatrix,
  kTooFewStates,
  kIndexOutOfRange,
  kSameIndex,
  kWrongArity,
  kNotComplete,
  kArityMismatch,
  kNotCommuting,
  kSingularNormalizer,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception. `index()` names
// the offending state or effect when the failure is local to one of them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace qsd

#endif  // QSD_ERROR_H_
