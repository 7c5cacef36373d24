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

#ifndef QSD_EXAMPLE_H_
#define QSD_EXAMPLE_H_

#include <string>
#include <vector>

#include "qsd/ensemble.h"
#include "qsd/povm.h"

namespace qsd {

inline constexpr double kExampleTolerance = 1e-9;

// Three equiprobable diagonal qubit states
// diag(7/8, 1/8), diag(5/8, 3/8), diag(3/4, 1/4).
Ensemble example_ensemble();

// Projective measurement onto |0>, |1> assigned to the first two states,
// nothing to the third.
Povm example_optimal_povm();

struct ExampleValue {
  std::string label;     // "Q_new"
  std::string closed;    // "4/9" or "(√35+√3)/8"
  bool rational = true;  // false prints an approximate decimal after the closed form
  std::string tag;       // label printed after the value
  double expected = 0.0;
  double computed = 0.0;
  bool ok() const;
};

struct ExampleOrdering {
  std::string tag;
  std::string text;  // "Q4 < Qnew < Q2 < Q5 < Q3"
  double min_margin = 0.0;
  bool ok = false;
};

struct ExampleResult {
  std::vector<ExampleValue> values;
  std::vector<ExampleOrdering> orderings;
  double optimum = 0.0;
  bool optimum_certified = false;
  bool optimum_matches = false;
  bool ok() const;
};

// Recomputes every published value of the example through the library and
// compares with the hard-coded closed forms.
ExampleResult run_example();

std::vector<std::string> render_example(const ExampleResult& result);

}  // namespace qsd

#endif  // QSD_EXAMPLE_H_
