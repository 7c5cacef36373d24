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

#include <cmath>
#include <numeric>

#include "oracles.h"
#include "qsd/random.h"

namespace qsd {
namespace {

TEST(SplitMix, MixMatchesReferenceOutput) {
  // First output of the reference generator seeded with zero.
  EXPECT_EQ(splitmix64_mix(0x9E3779B97F4A7C15ULL), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix, StreamsAreReproducibleAndDistinct) {
  SplitMix64 a(7, 3), b(7, 3), c(7, 4);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(SplitMix, UniformAndGaussianMoments) {
  SplitMix64 rng(99, 0);
  double su = 0.0, sg = 0.0, sg2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.gaussian();
    sg += z;
    sg2 += z * z;
  }
  EXPECT_NEAR(su / n, 0.5, 0.01);
  EXPECT_NEAR(sg / n, 0.0, 0.01);
  EXPECT_NEAR(sg2 / n, 1.0, 0.02);
}

TEST(Names, RoundTrip) {
  for (auto p : {Purity::kPure, Purity::kMixed, Purity::kCommuting}) {
    EXPECT_EQ(parse_purity(purity_name(p)), p);
  }
  for (auto p : {PriorMode::kUniform, PriorMode::kRandomSimplex, PriorMode::kFixed}) {
    EXPECT_EQ(parse_prior_mode(prior_mode_name(p)), p);
  }
  EXPECT_THROW(parse_purity("haar"), std::invalid_argument);
  EXPECT_THROW(parse_prior_mode("dirichlet"), std::invalid_argument);
}

TEST(States, PureStatesAreRankOne) {
  RandomSpec spec;
  spec.seed = 5;
  for (int dim = 1; dim <= 5; ++dim) {
    spec.dim = dim;
    const ComplexMatrix rho = random_pure_state(spec, 0).matrix();
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-9);
  }
  spec.dim = 3;
  int distinct = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto a = random_pure_state(spec, 2 * s);
    const auto b = random_pure_state(spec, 2 * s + 1);
    distinct += fidelity(a, b) < 1.0 - 1e-6 ? 1 : 0;
  }
  EXPECT_EQ(distinct, 50);
}

TEST(States, MixedStatesAreFullRank) {
  RandomSpec spec;
  spec.seed = 6;
  spec.dim = 1;
  EXPECT_NEAR(random_mixed_state(spec, 0).matrix()(0, 0).real(), 1.0, 1e-15);
  for (int dim = 2; dim <= 5; ++dim) {
    spec.dim = dim;
    const auto rho = random_mixed_state(spec, 1);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GT(min_eigenvalue(rho.op()), 0.0);
    EXPECT_LT((rho.matrix() * rho.matrix()).trace().real(), 1.0);
  }
}

TEST(Priors, Modes) {
  RandomSpec spec;
  spec.seed = 8;
  spec.arity = 4;
  for (double q : random_priors(spec)) EXPECT_DOUBLE_EQ(q, 0.25);
  spec.priors = PriorMode::kRandomSimplex;
  for (std::uint64_t s = 0; s < 200; ++s) {
    spec.seed = s;
    const auto q = random_priors(spec);
    EXPECT_NEAR(std::accumulate(q.begin(), q.end(), 0.0), 1.0, 1e-12);
    for (double x : q) EXPECT_GE(x, kPriorFloor / 2.0);
  }
  spec.priors = PriorMode::kFixed;
  spec.fixed_priors = {0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(random_priors(spec), spec.fixed_priors);
}

TEST(Ensembles, ReproducibleAndValid) {
  for (auto purity : {Purity::kPure, Purity::kMixed, Purity::kCommuting}) {
    RandomSpec spec;
    spec.seed = 1;
    spec.dim = 3;
    spec.arity = 4;
    spec.purity = purity;
    spec.priors = PriorMode::kRandomSimplex;
    const Ensemble a = random_ensemble(spec);
    const Ensemble b = random_ensemble(spec);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a.prior(i), b.prior(i));
      EXPECT_EQ(a.state(i).matrix(), b.state(i).matrix());
    }
    EXPECT_EQ(is_commuting_family(a).commuting, purity == Purity::kCommuting);
  }
}

TEST(Ensembles, ExampleSpec) {
  RandomSpec spec;
  spec.seed = 1;
  spec.dim = 2;
  spec.arity = 3;
  const Ensemble e = random_ensemble(spec);
  EXPECT_EQ(e.dim(), 2);
  for (double q : e.priors()) EXPECT_DOUBLE_EQ(q, 1.0 / 3.0);
}

TEST(Povms, ValidAndSensible) {
  oracle::Gen g(61);
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomSpec spec;
    spec.seed = s;
    spec.dim = 2 + static_cast<int>(s % 3);
    const std::size_t arity = 2 + s % 4;
    const Povm m = random_povm(spec, arity, s);
    EXPECT_EQ(m.size(), arity);
    EXPECT_TRUE(oracle::is_povm(oracle::effects(m), 1e-8));
    const Ensemble e = g.ensemble(spec.dim, arity, false, false);
    const double p = success_probability(e, m);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

}  // namespace
}  // namespace qsd
