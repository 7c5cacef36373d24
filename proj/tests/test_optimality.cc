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

#include <gtest/gtest.h>

#include <variant>

#include "oracles.h"
#include "qsd/error.h"
#include "qsd/example.h"
#include "qsd/optimality.h"
#include "qsd/random.h"

namespace qsd {
namespace {

TEST(Lambda0, ExampleOptimum) {
  const Lambda0 l = lambda0(example_ensemble(), example_optimal_povm());
  EXPECT_NEAR(l.op.matrix()(0, 0).real(), 7.0 / 24.0, 1e-15);
  EXPECT_NEAR(l.op.matrix()(1, 1).real(), 1.0 / 8.0, 1e-15);
  EXPECT_NEAR(std::abs(l.op.matrix()(0, 1)), 0.0, 1e-15);
  EXPECT_LT(l.antihermitian_magnitude, 1e-15);
}

TEST(Holevo, ExampleOptimumPasses) {
  const Certificate c = check_holevo(example_ensemble(), example_optimal_povm());
  EXPECT_TRUE(c.passed());
  EXPECT_NEAR(c.claimed_value, 5.0 / 12.0, 1e-15);
  EXPECT_EQ(c.orthogonality_residuals.size(), 3u);
  EXPECT_EQ(c.domination_residuals.size(), 3u);
}

TEST(Holevo, TrivialMeasurementFails) {
  std::vector<ComplexMatrix> effects(3, ComplexMatrix::Identity(2, 2) / 3.0);
  const Certificate c = check_holevo(example_ensemble(), validate_povm(effects));
  EXPECT_FALSE(c.passed());
  EXPECT_FALSE(c.domination_pass);
  EXPECT_NEAR(c.claimed_value, 1.0 / 3.0, 1e-15);
  EXPECT_GT(c.orthogonality_residuals[0], 1e-3);
  EXPECT_LT(c.domination_residuals[0], -1e-3);
}

TEST(Holevo, HelstromPassesAndRandomFails) {
  oracle::Gen g(51);
  int random_failures = 0;
  for (int t = 0; t < 40; ++t) {
    const int dim = g.integer(2, 3);
    const Ensemble e = g.ensemble(dim, 2, t % 2 == 0, false);
    const Certificate c = check_holevo(e, construct_helstrom_povm(e));
    EXPECT_TRUE(c.passed());
    EXPECT_NEAR(c.claimed_value, oracle::helstrom(e), 1e-10);
    RandomSpec spec;
    spec.seed = static_cast<std::uint64_t>(t);
    spec.dim = dim;
    random_failures += check_holevo(e, random_povm(spec, 2)).passed() ? 0 : 1;
  }
  EXPECT_EQ(random_failures, 40);
}

TEST(Holevo, ToleranceControlsVerdict) {
  const Ensemble e = example_ensemble();
  std::vector<ComplexMatrix> effects(3, ComplexMatrix::Zero(2, 2));
  effects[0](0, 0) = 1.0 - 1e-5;
  effects[2](0, 0) = 1e-5;
  effects[1](1, 1) = 1.0;
  const Povm m = validate_povm(effects);
  EXPECT_FALSE(check_holevo(e, m, 1e-9).passed());
  EXPECT_TRUE(check_holevo(e, m, 1e-3).passed());
}

TEST(CommutingOptimum, ExampleAssignment) {
  const CommutingOptimum opt = commuting_optimum(example_ensemble());
  EXPECT_NEAR(opt.value, 5.0 / 12.0, 1e-12);
  ASSERT_EQ(opt.assignment.size(), 2u);
  EXPECT_TRUE(check_holevo(example_ensemble(), opt.povm).passed());
}

TEST(CommutingOptimum, MatchesBruteForce) {
  oracle::Gen g(52);
  for (int t = 0; t < 100; ++t) {
    const auto c = oracle::commuting_case(g, g.integer(1, 3), static_cast<std::size_t>(g.integer(2, 4)),
                                          t % 2 == 0);
    const Ensemble e = c.ensemble();
    const CommutingOptimum opt = commuting_optimum(e);
    EXPECT_NEAR(opt.value, oracle::brute_force_assignment(c), 1e-9);
    EXPECT_NEAR(oracle::success(e, oracle::effects(opt.povm)), opt.value, 1e-9);
    EXPECT_TRUE(check_holevo(e, opt.povm).passed());
  }
}

TEST(CommutingOptimum, TiesPickSmallestIndex) {
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  const std::vector<RawEntry> raw = {{0.5, half}, {0.5, half}};
  const CommutingOptimum opt = commuting_optimum(validate_ensemble(raw));
  for (std::size_t a : opt.assignment) EXPECT_EQ(a, 0u);
  EXPECT_NEAR(opt.value, 0.5, 1e-15);
}

TEST(CommutingOptimum, RejectsNonCommuting) {
  oracle::Gen g(53);
  try {
    commuting_optimum(g.ensemble(2, 3, false, true));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCommuting);
  }
}

TEST(ExactOrBracket, PicksClosedFormWhenAvailable) {
  oracle::Gen g(54);
  const auto binary = exact_or_bracket(g.ensemble(2, 2, false, false));
  ASSERT_TRUE(std::holds_alternative<ExactValue>(binary));
  EXPECT_EQ(std::get<ExactValue>(binary).method, ExactMethod::kBinary);
  const auto commuting = exact_or_bracket(example_ensemble());
  ASSERT_TRUE(std::holds_alternative<ExactValue>(commuting));
  EXPECT_NEAR(std::get<ExactValue>(commuting).value, 5.0 / 12.0, 1e-12);
  const auto general = exact_or_bracket(g.ensemble(3, 3, false, false));
  ASSERT_TRUE(std::holds_alternative<Bracket>(general));
  EXPECT_LE(std::get<Bracket>(general).low, std::get<Bracket>(general).high);
}

}  // namespace
}  // namespace qsd
