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

#ifndef QSD_RATIONAL_H_
#define QSD_RATIONAL_H_

#include <string_view>

namespace qsd {

// Parses an exact decimal ("0.125", "-2", "1.5e-3") or a ratio of two such
// decimals ("1/3", "7/8") and rounds the exact value to double once.
// Throws std::invalid_argument on malformed input or a zero denominator.
double parse_exact_real(std::string_view text);

}  // namespace qsd

#endif  // QSD_RATIONAL_H_
