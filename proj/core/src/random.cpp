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

#include "extractorlab/random.hpp"

#include <cmath>
#include <numbers>

namespace extractorlab {

namespace {

// SplitMix64 finalizer; used for seeding and stream derivation.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

Rng Rng::split(std::uint64_t i) const {
  return Rng(mix64(seed_ ^ mix64(i + 0x6a09e667f3bcc909ULL)));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::gaussian_complex() {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
}

Mat ginibre(Index rows, Index cols, Rng& rng) {
  Mat g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.gaussian_complex();
  }
  return g;
}

Mat haar_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  const Mat a = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

Mat random_density(Index dim, Rng& rng, Index rank) {
  if (rank < 0 || rank > dim) rank = dim;
  const Mat g = ginibre(dim, rank, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

Vec random_pure(Index dim, Rng& rng) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = rng.gaussian_complex();
  v.normalize();
  return v;
}

RVec random_probabilities(Index n, Rng& rng) {
  RVec p(n);
  for (Index i = 0; i < n; ++i) p[i] = std::abs(rng.gaussian());
  p /= p.sum();
  return p;
}

}  // namespace extractorlab
