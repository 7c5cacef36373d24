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

#include "qsd/operator.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "qsd/error.h"

namespace qsd {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidMatrix: return "InvalidMatrix";
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kPriorNotPositive: return "PriorNotPositive";
    case ErrorCode::kPriorsNotNormalized: return "PriorsNotNormalized";
    case ErrorCode::kNotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::kTooFewStates: return "TooFewStates";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSameIndex: return "SameIndex";
    case ErrorCode::kWrongArity: return "WrongArity";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kNotCommuting: return "NotCommuting";
    case ErrorCode::kSingularNormalizer: return "SingularNormalizer";
  }
  return "Unknown";
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianOperator HermitianOperator::from_matrix(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidMatrix,
                "matrix must be square and non-empty, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidMatrix, "matrix has non-finite entries");
  }
  const double asym = max_abs(m - m.adjoint());
  const double scale = std::max(1.0, max_abs(m));
  if (asym > tol::kHermitian * scale) {
    throw Error(ErrorCode::kNonHermitian,
                "max |A - A^dagger| = " + std::to_string(asym) + " exceeds tolerance");
  }
  return HermitianOperator(0.5 * (m + m.adjoint()));
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& values) {
  if (values.size() == 0 || !values.allFinite()) {
    throw Error(ErrorCode::kInvalidMatrix, "diagonal must be non-empty and finite");
  }
  return HermitianOperator(values.cast<Complex>().asDiagonal());
}

HermitianOperator HermitianOperator::projector(const ComplexVector& v) {
  ComplexMatrix p = v * v.adjoint();
  return HermitianOperator(0.5 * (p + p.adjoint()));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw Error(ErrorCode::kDimensionMismatch, "operator sum");
  return HermitianOperator(m_ + other.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw Error(ErrorCode::kDimensionMismatch, "operator difference");
  return HermitianOperator(m_ - other.m_);
}

HermitianOperator HermitianOperator::operator-() const { return HermitianOperator(-m_); }

HermitianOperator HermitianOperator::operator*(double s) const { return HermitianOperator(s * m_); }

HermitianOperator HermitianOperator::conjugated(const ComplexMatrix& unitary) const {
  if (unitary.rows() != m_.rows() || unitary.cols() != m_.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "conjugating unitary has wrong shape");
  }
  ComplexMatrix c = unitary * m_ * unitary.adjoint();
  return HermitianOperator(0.5 * (c + c.adjoint()));
}

SpectralDecomposition hermitian_eig(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericalFailure, "Hermitian eigensolver did not converge");
  }
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  const ComplexMatrix& v = out.eigenvectors;
  const double scale = std::max(1.0, max_abs(a.matrix()));
  const ComplexMatrix recon = v * out.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
  const double recon_err = max_abs(recon - a.matrix());
  const double unitarity_err =
      max_abs(v.adjoint() * v - ComplexMatrix::Identity(a.dim(), a.dim()));
  if (recon_err > tol::kReconstruction * scale || unitarity_err > tol::kReconstruction) {
    throw Error(ErrorCode::kNumericalFailure,
                "spectral decomposition failed reconstruction check (error " +
                    std::to_string(std::max(recon_err, unitarity_err)) + ")");
  }
  return out;
}

namespace {

// V diag(f(lambda)) V^dagger
template <typename F>
ComplexMatrix spectral_map(const SpectralDecomposition& s, F f) {
  RealVector mapped = s.eigenvalues.unaryExpr(f);
  return s.eigenvectors * mapped.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace

JordanParts jordan_parts(const HermitianOperator& a) {
  const SpectralDecomposition s = hermitian_eig(a);
  ComplexMatrix pos = spectral_map(s, [](double l) { return l > tol::kZero ? l : 0.0; });
  ComplexMatrix neg = spectral_map(s, [](double l) { return l > tol::kZero ? 0.0 : -l; });
  return {HermitianOperator::from_matrix(0.5 * (pos + pos.adjoint())),
          HermitianOperator::from_matrix(0.5 * (neg + neg.adjoint()))};
}

double positive_part_norm(const HermitianOperator& a) {
  const RealVector ev = hermitian_eig(a).eigenvalues;
  double sum = 0.0;
  for (double l : ev) {
    if (l > tol::kZero) sum += l;
  }
  return sum;
}

HermitianOperator positive_projector(const HermitianOperator& a) {
  const SpectralDecomposition s = hermitian_eig(a);
  ComplexMatrix p = spectral_map(s, [](double l) { return l > tol::kZero ? 1.0 : 0.0; });
  return HermitianOperator::from_matrix(0.5 * (p + p.adjoint()));
}

double trace_norm(const HermitianOperator& a) {
  return hermitian_eig(a).eigenvalues.cwiseAbs().sum();
}

double operator_norm(const HermitianOperator& a) {
  return hermitian_eig(a).eigenvalues.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const HermitianOperator& a) {
  return hermitian_eig(a).eigenvalues(0);
}

HermitianOperator sqrt_psd(const HermitianOperator& a) {
  const SpectralDecomposition s = hermitian_eig(a);
  if (s.eigenvalues(0) < -tol::kPsd) {
    throw Error(ErrorCode::kNotPsd,
                "smallest eigenvalue " + std::to_string(s.eigenvalues(0)) + " is negative");
  }
  ComplexMatrix r = spectral_map(s, [](double l) { return l > tol::kZero ? std::sqrt(l) : 0.0; });
  return HermitianOperator::from_matrix(0.5 * (r + r.adjoint()));
}

HermitianOperator inverse_sqrt_pd(const HermitianOperator& a, double floor) {
  const SpectralDecomposition s = hermitian_eig(a);
  const double top = s.eigenvalues.cwiseAbs().maxCoeff();
  if (!(s.eigenvalues(0) > floor * top)) {
    throw Error(ErrorCode::kNotPsd, "operator is not safely positive definite");
  }
  ComplexMatrix r = spectral_map(s, [](double l) { return 1.0 / std::sqrt(l); });
  return HermitianOperator::from_matrix(0.5 * (r + r.adjoint()));
}

double product_trace_norm(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "product trace norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(a.matrix() * b.matrix());
  return svd.singularValues().sum();
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "trace product");
  // tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return a.matrix().cwiseProduct(b.matrix().conjugate()).sum().real();
}

}  // namespace qsd
