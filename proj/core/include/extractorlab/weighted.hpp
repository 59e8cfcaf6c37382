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

#ifndef EXTRACTORLAB_WEIGHTED_HPP
#define EXTRACTORLAB_WEIGHTED_HPP

#include <limits>

#include "extractorlab/matrix.hpp"

namespace extractorlab {

/// Weight and exponent for the sigma-weighted alpha-norm
///   ||X||_{alpha,sigma} = (tr |sigma^{1/2a} X sigma^{1/2a}|^alpha)^{1/alpha}.
/// alpha = +infinity selects the operator norm on the support of sigma.
struct WeightedNormParams {
  Mat sigma;     // Hermitian PSD weight
  double alpha;  // >= 1, may be +infinity

  static constexpr double inf = std::numeric_limits<double>::infinity();
};

/// Weighted Hilbert-Schmidt inner product
///   <X|Y>_sigma = tr[(s X s)^dagger (s Y s)]  with  s = sigma^{1/4}.
Complex weighted_inner(const Mat& x, const Mat& y, const Mat& sigma);

/// The alpha-norm above. Throws when sigma is not PSD or alpha < 1.
double weighted_norm(const Mat& x, const WeightedNormParams& params);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_WEIGHTED_HPP
