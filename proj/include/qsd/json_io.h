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

// JSON file formats: ensembles, measurements and bound reports.
//
// Matrices are arrays of rows. An entry is a number, an exact decimal or
// ratio string ("7/8"), or a [re, im] pair. Reals are written with 17
// significant digits so every file round-trips losslessly.

#ifndef QSD_JSON_IO_H_
#define QSD_JSON_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qsd/bounds.h"
#include "qsd/ensemble.h"
#include "qsd/optimality.h"
#include "qsd/povm.h"

namespace qsd {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "qsdbounds";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
Json parse_json_text(std::string_view text, std::string_view source);

// Serializes with reals at 17 significant digits. indent < 0 gives a single
// line; otherwise arrays of scalars stay on one line.
std::string dump_json(const Json& j, int indent = 2);

std::string fnv1a64_hex(std::string_view bytes);

double json_to_real(const Json& j, std::string_view what);
ComplexMatrix json_to_matrix(const Json& j, std::string_view what);
Json matrix_to_json(const ComplexMatrix& m);

// { "dim": int, "states": [matrix...] | "diagonal": [[lambda...]...],
//   "priors": [number-or-string...] }
// Schema problems throw ParseError; validation throws qsd::Error.
Ensemble ensemble_from_json(const Json& j);
Json ensemble_to_json(const Ensemble& e);

// { "dim": int, "effects": [matrix...] | "diagonal": [[m...]...] }
Povm povm_from_json(const Json& j);
Json povm_to_json(const Povm& m);

struct ReportFile {
  BoundsReport report;
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::string input_digest;
};

Json report_to_json(const ReportFile& file);
ReportFile report_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);

}  // namespace qsd

#endif  // QSD_JSON_IO_H_
