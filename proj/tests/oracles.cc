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

#include "oracles.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numeric>

namespace oracle {

double trace_norm(const Mat& x) {
  Eigen::BDCSVD<Mat> svd(x);
  return svd.singularValues().sum();
}

double positive_part_norm(const Mat& x) { return 0.5 * (trace_norm(x) + x.trace().real()); }

Mat sqrtm(const Mat& a) { return a.sqrt(); }

double fidelity(const Mat& rho, const Mat& sigma) {
  const Mat r = sqrtm(rho);
  return sqrtm(r * sigma * r).trace().real();
}

double pure_fidelity(const Mat& rho, const Mat& sigma) {
  return std::sqrt(std::max(0.0, (rho * sigma).trace().real()));
}

std::vector<Mat> effects(const qsd::Povm& m) {
  std::vector<Mat> out;
  for (const auto& e : m.effects()) out.push_back(e.matrix());
  return out;
}

bool is_povm(const std::vector<Mat>& effects, double tol) {
  if (effects.empty()) return false;
  const auto d = effects.front().rows();
  Mat sum = Mat::Zero(d, d);
  for (const auto& e : effects) {
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    // PSD through Cholesky of a slightly shifted copy.
    Eigen::LLT<Mat> llt(e + tol * Mat::Identity(d, d));
    if (llt.info() != Eigen::Success) return false;
    sum += e;
  }
  return (sum - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

double success(const qsd::Ensemble& e, const std::vector<Mat>& effects) {
  double p = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    p += e.prior(i) * (e.state(i).matrix() * effects[i]).trace().real();
  }
  return p;
}

Mat weighted_difference(const qsd::Ensemble& e, std::size_t i, std::size_t j) {
  return e.prior(i) * e.state(i).matrix() - e.prior(j) * e.state(j).matrix();
}

double helstrom(const qsd::Ensemble& e) {
  return 0.5 * (1.0 + trace_norm(weighted_difference(e, 0, 1)));
}

double sum_trace_distances(const qsd::Ensemble& e) {
  double s = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) s += trace_norm(weighted_difference(e, i, j));
  }
  return s;
}

Mat Gen::gaussian(int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) g(i, k) = {n(rng_), n(rng_)};
  }
  return g;
}

Mat Gen::unitary(int dim) {
  const Mat a = gaussian(dim, dim);
  const Mat h = 0.5 * (a + a.adjoint());
  const Mat id = Mat::Identity(dim, dim);
  const std::complex<double> i1(0.0, 1.0);
  return (id - i1 * h) * (id + i1 * h).inverse();
}

Mat Gen::mixed_state(int dim) {
  const Mat g = gaussian(dim, dim);
  const Mat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Mat Gen::pure_state(int dim) {
  Eigen::VectorXcd v = gaussian(dim, 1).col(0);
  v.normalize();
  return v * v.adjoint();
}

std::vector<double> Gen::priors(std::size_t r, bool equal) {
  std::vector<double> q(r, 1.0 / static_cast<double>(r));
  if (equal) return q;
  for (auto& x : q) x = 0.05 + uniform();
  const double s = std::accumulate(q.begin(), q.end(), 0.0);
  for (auto& x : q) x /= s;
  return q;
}

qsd::Ensemble Gen::ensemble(int dim, std::size_t r, bool pure, bool equal) {
  const auto q = priors(r, equal);
  std::vector<qsd::RawEntry> raw;
  for (std::size_t i = 0; i < r; ++i) raw.push_back({q[i], pure ? pure_state(dim) : mixed_state(dim)});
  return qsd::validate_ensemble(raw);
}

qsd::Ensemble CommutingCase::ensemble() const {
  std::vector<qsd::RawEntry> raw;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    Eigen::VectorXcd l(static_cast<Eigen::Index>(spectra[i].size()));
    for (std::size_t n = 0; n < spectra[i].size(); ++n) l(static_cast<Eigen::Index>(n)) = spectra[i][n];
    raw.push_back({priors[i], basis * l.asDiagonal() * basis.adjoint()});
  }
  return qsd::validate_ensemble(raw);
}

CommutingCase commuting_case(Gen& g, int dim, std::size_t r, bool equal) {
  CommutingCase c;
  c.basis = g.unitary(dim);
  c.priors = g.priors(r, equal);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<double> s(static_cast<std::size_t>(dim));
    for (auto& x : s) x = g.uniform();
    // Occasionally repeat a spectrum to create exact ties.
    if (i > 0 && g.uniform() < 0.1) s = c.spectra[i - 1];
    const double total = std::accumulate(s.begin(), s.end(), 0.0);
    for (auto& x : s) x /= total;
    c.spectra.push_back(std::move(s));
  }
  return c;
}

double brute_force_assignment(const CommutingCase& c) {
  const std::size_t r = c.spectra.size();
  const std::size_t d = c.spectra.front().size();
  std::size_t combos = 1;
  for (std::size_t n = 0; n < d; ++n) combos *= r;
  double best = -1.0;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t rest = code;
    double v = 0.0;
    for (std::size_t n = 0; n < d; ++n) {
      const std::size_t i = rest % r;
      rest /= r;
      v += c.priors[i] * c.spectra[i][n];
    }
    best = std::max(best, v);
  }
  return best;
}

}  // namespace oracle
