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

#ifndef EXTRACTORLAB_RANDOM_HPP
#define EXTRACTORLAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "extractorlab/matrix.hpp"

namespace extractorlab {

/// Deterministic, splittable random generator. A 64-bit seed fully determines
/// the stream; `split(i)` derives an independent child stream so that
/// per-trial work can run in any order (or on any worker) and still be
/// bit-reproducible. The core engine is std::mt19937_64, which the standard
/// pins down exactly; uniform and Gaussian variates are derived from raw
/// 64-bit draws rather than std::*_distribution so the byte stream does not
/// depend on the standard-library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Independent child generator for stream index `i`.
  Rng split(std::uint64_t i) const;

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound), bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound);

  /// Standard normal (Box-Muller; the spare variate is cached).
  double gaussian();

  /// Standard complex normal: variance 1/2 per component.
  Complex gaussian_complex();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with each column
/// rescaled by the phase of the matching diagonal entry of R. The phase fix
/// makes the factorization unique, which is what makes the output exactly
/// Haar rather than merely unitary.
Mat haar_unitary(Index dim, Rng& rng);

/// Matrix of iid standard complex Gaussians.
Mat ginibre(Index rows, Index cols, Rng& rng);

/// Random density operator GG^dagger / tr (full rank almost surely); `rank`
/// limits the Ginibre columns for rank-deficient samples.
Mat random_density(Index dim, Rng& rng, Index rank = -1);

/// Haar-random pure state vector.
Vec random_pure(Index dim, Rng& rng);

/// Random probability vector (normalized absolute Gaussians).
RVec random_probabilities(Index n, Rng& rng);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_RANDOM_HPP
