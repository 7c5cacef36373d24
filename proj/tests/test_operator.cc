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
#include <limits>

#include "oracles.h"
#include "qsd/error.h"
#include "qsd/operator.h"

namespace qsd {
namespace {

ComplexMatrix random_hermitian(oracle::Gen& g, int dim) {
  const ComplexMatrix a = g.gaussian(dim, dim);
  return 0.5 * (a + a.adjoint());
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kNumericalFailure;
}

TEST(HermitianOperator, RejectsMalformedMatrices) {
  EXPECT_EQ(code_of([] { HermitianOperator::from_matrix(ComplexMatrix(2, 3)); }),
            ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code_of([] { HermitianOperator::from_matrix(ComplexMatrix(0, 0)); }),
            ErrorCode::kInvalidMatrix);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2);
  nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of([&] { HermitianOperator::from_matrix(nan); }), ErrorCode::kInvalidMatrix);
  ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { HermitianOperator::from_matrix(skew); }), ErrorCode::kNonHermitian);
}

TEST(HermitianOperator, SymmetrizesWithinTolerance) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = Complex(0.25, 1e-12);
  m(1, 0) = Complex(0.25, 0.0);
  const auto a = HermitianOperator::from_matrix(m);
  EXPECT_EQ(a.matrix(), a.matrix().adjoint());
  EXPECT_NEAR(a.matrix()(0, 1).imag(), 5e-13, 1e-15);
}

TEST(HermitianOperator, ArithmeticChecksDimensions) {
  const auto a = HermitianOperator::identity(2);
  const auto b = HermitianOperator::identity(3);
  EXPECT_EQ(code_of([&] { (void)(a + b); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { (void)(a - b); }), ErrorCode::kDimensionMismatch);
  EXPECT_DOUBLE_EQ((2.0 * a - a).trace(), 2.0);
  EXPECT_DOUBLE_EQ((-a).trace(), -2.0);
}

TEST(Spectral, ReconstructsRandomHermitian) {
  oracle::Gen g(11);
  for (int dim = 1; dim <= 6; ++dim) {
    const auto a = HermitianOperator::from_matrix(random_hermitian(g, dim));
    const auto s = hermitian_eig(a);
    for (int k = 1; k < dim; ++k) EXPECT_LE(s.eigenvalues(k - 1), s.eigenvalues(k));
    const ComplexMatrix back = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
                               s.eigenvectors.adjoint();
    EXPECT_LT((back - a.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Jordan, PartsArePsdOrthogonalAndSumBack) {
  oracle::Gen g(12);
  for (int t = 0; t < 50; ++t) {
    const int dim = g.integer(1, 5);
    const auto x = HermitianOperator::from_matrix(random_hermitian(g, dim));
    const auto [p, n] = jordan_parts(x);
    EXPECT_LT((p.matrix() - n.matrix() - x.matrix()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_GE(min_eigenvalue(p), -1e-12);
    EXPECT_GE(min_eigenvalue(n), -1e-12);
    EXPECT_LT((p.matrix() * n.matrix()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(trace_norm(x), p.trace() + n.trace(), 1e-10);
    EXPECT_NEAR(trace_norm(x), oracle::trace_norm(x.matrix()), 1e-10);
    EXPECT_NEAR(positive_part_norm(x), oracle::positive_part_norm(x.matrix()), 1e-10);
  }
}

TEST(Jordan, ZeroEigenvaluesGoToNegativeSide) {
  RealVector v(3);
  v << 1.0, 0.0, -2.0;
  const auto x = HermitianOperator::diagonal(v);
  EXPECT_DOUBLE_EQ(positive_part_norm(x), 1.0);
  EXPECT_DOUBLE_EQ(positive_projector(x).trace(), 1.0);
  EXPECT_DOUBLE_EQ(trace_norm(x), 3.0);
  EXPECT_DOUBLE_EQ(operator_norm(x), 2.0);
  EXPECT_DOUBLE_EQ(min_eigenvalue(x), -2.0);
}

TEST(Jordan, PositiveProjectorIsIdempotent) {
  oracle::Gen g(13);
  const auto x = HermitianOperator::from_matrix(random_hermitian(g, 4));
  const ComplexMatrix p = positive_projector(x).matrix();
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(trace_product(positive_projector(x), x), positive_part_norm(x), 1e-12);
}

TEST(SquareRoot, SquaresBackAndMatchesSchurRoute) {
  oracle::Gen g(14);
  for (int dim = 1; dim <= 5; ++dim) {
    const auto rho = HermitianOperator::from_matrix(g.mixed_state(dim));
    const ComplexMatrix r = sqrt_psd(rho).matrix();
    EXPECT_LT((r * r - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r - oracle::sqrtm(rho.matrix())).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SquareRoot, RankDeficientInputHasExactZeros) {
  oracle::Gen g(15);
  const auto p = HermitianOperator::from_matrix(g.pure_state(3));
  EXPECT_NEAR(sqrt_psd(p).trace(), 1.0, 1e-12);
  RealVector v(2);
  v << 1.0, -1e-3;
  EXPECT_EQ(code_of([&] { sqrt_psd(HermitianOperator::diagonal(v)); }), ErrorCode::kNotPsd);
}

TEST(SquareRoot, InverseRootRejectsSingular) {
  RealVector v(2);
  v << 4.0, 1.0;
  const auto inv = inverse_sqrt_pd(HermitianOperator::diagonal(v), 1e-10);
  EXPECT_NEAR(inv.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(inv.matrix()(1, 1).real(), 1.0, 1e-15);
  v << 1.0, 0.0;
  EXPECT_EQ(code_of([&] { inverse_sqrt_pd(HermitianOperator::diagonal(v), 1e-10); }),
            ErrorCode::kNotPsd);
}

TEST(ProductTraceNorm, MatchesOracle) {
  oracle::Gen g(16);
  for (int t = 0; t < 20; ++t) {
    const int dim = g.integer(2, 4);
    const auto a = HermitianOperator::from_matrix(random_hermitian(g, dim));
    const auto b = HermitianOperator::from_matrix(random_hermitian(g, dim));
    EXPECT_NEAR(product_trace_norm(a, b), oracle::trace_norm(a.matrix() * b.matrix()), 1e-10);
    EXPECT_NEAR(trace_product(a, b), (a.matrix() * b.matrix()).trace().real(), 1e-12);
  }
}

TEST(Covariance, TraceNormIsUnitarilyInvariant) {
  oracle::Gen g(17);
  for (int t = 0; t < 20; ++t) {
    const int dim = g.integer(2, 5);
    const auto x = HermitianOperator::from_matrix(random_hermitian(g, dim));
    const auto y = x.conjugated(g.unitary(dim));
    EXPECT_NEAR(trace_norm(x), trace_norm(y), 1e-8);
    EXPECT_NEAR(positive_part_norm(x), positive_part_norm(y), 1e-8);
  }
}

TEST(Projector, IsRankOne) {
  ComplexVector v(2);
  v << Complex(0.6, 0.0), Complex(0.0, 0.8);
  const auto p = HermitianOperator::projector(v);
  EXPECT_NEAR(p.trace(), 1.0, 1e-15);
  EXPECT_LT((p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

}  // namespace
}  // namespace qsd
