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

// Dense complex Hermitian linear algebra: spectral decomposition, Jordan
// (positive/negative) parts, trace and operator norms, PSD square roots and
// the fidelity between density matrices.

#ifndef QSD_OPERATOR_H_
#define QSD_OPERATOR_H_

#include <Eigen/Dense>
#include <complex>

namespace qsd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Eigenvalues with |lambda| <= kZero are treated as non-positive.
inline constexpr double kZero = 1e-10;
// Relative Hermiticity tolerance on max-entry of A - A^dagger.
inline constexpr double kHermitian = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kReconstruction = 1e-8;
inline constexpr double kFidelity = 1e-9;
}  // namespace tol

// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

// An exactly Hermitian complex matrix. Construction checks the symmetry
// tolerance and then stores (A + A^dagger) / 2.
class HermitianOperator {
 public:
  static HermitianOperator from_matrix(const ComplexMatrix& m);
  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);
  static HermitianOperator diagonal(const RealVector& values);
  // |v><v|
  static HermitianOperator projector(const ComplexVector& v);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator-() const;
  HermitianOperator operator*(double s) const;

  // U A U^dagger
  HermitianOperator conjugated(const ComplexMatrix& unitary) const;

 private:
  explicit HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

struct SpectralDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

struct JordanParts {
  HermitianOperator positive;
  HermitianOperator negative;
};

SpectralDecomposition hermitian_eig(const HermitianOperator& a);

// A = positive - negative, both PSD with orthogonal supports. Eigenvalues
// above tol::kZero form the positive part; the rest (absolute values) the
// negative part.
JordanParts jordan_parts(const HermitianOperator& a);

// Trace of the positive part, i.e. the sum of eigenvalues above tol::kZero.
double positive_part_norm(const HermitianOperator& a);

// Orthogonal projector onto the span of eigenvectors with eigenvalue
// strictly above tol::kZero.
HermitianOperator positive_projector(const HermitianOperator& a);

double trace_norm(const HermitianOperator& a);
double operator_norm(const HermitianOperator& a);
double min_eigenvalue(const HermitianOperator& a);

// Throws kNotPsd if an eigenvalue is below -tol::kPsd; eigenvalues in
// [-tol::kPsd, tol::kZero] are treated as exactly zero.
HermitianOperator sqrt_psd(const HermitianOperator& a);

// Inverse square root of a positive definite operator. Throws kNotPsd if the
// smallest eigenvalue is not above `floor` times the largest.
HermitianOperator inverse_sqrt_pd(const HermitianOperator& a, double floor);

// Trace norm ||A B||_1 of a product of two Hermitian operators, computed
// from singular values.
double product_trace_norm(const HermitianOperator& a, const HermitianOperator& b);

// tr(A B), real for Hermitian A, B.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace qsd

#endif  // QSD_OPERATOR_H_
