// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extractorlab/weighted.hpp"

#include <cmath>

namespace extractorlab {

namespace {

void check_weight(const Mat& sigma) {
  if (sigma.rows() != sigma.cols() || !is_hermitian(sigma, 1e-10)) {
    throw std::invalid_argument("weight must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(sigma),
                                            Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (lo < -1e-10 * std::max(1.0, hi)) {
    throw std::invalid_argument("weight must be positive semidefinite");
  }
}

}  // namespace

Complex weighted_inner(const Mat& x, const Mat& y, const Mat& sigma) {
  check_weight(sigma);
  const Mat s = psd_power(sigma, 0.25);
  return hs_inner(s * x * s, s * y * s);
}

double weighted_norm(const Mat& x, const WeightedNormParams& params) {
  check_weight(params.sigma);
  if (!(params.alpha >= 1.0)) {
    throw std::invalid_argument("alpha must be >= 1");
  }
  if (std::isinf(params.alpha)) {
    // Limit alpha -> inf: sigma^{1/2a} tends to the support projector.
    const Mat proj = psd_power(params.sigma, 0.0);
    return operator_norm(proj * x * proj);
  }
  const Mat s = psd_power(params.sigma, 1.0 / (2.0 * params.alpha));
  const RVec sing = (s * x * s).jacobiSvd().singularValues();
  if (params.alpha == 1.0) return sing.sum();
  if (params.alpha == 2.0) return std::sqrt(sing.squaredNorm());
  double acc = 0.0;
  for (Index i = 0; i < sing.size(); ++i) acc += std::pow(sing[i], params.alpha);
  return std::pow(acc, 1.0 / params.alpha);
}

}  // namespace extractorlab
