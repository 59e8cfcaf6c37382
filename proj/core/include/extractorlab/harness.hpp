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

#ifndef EXTRACTORLAB_HARNESS_HPP
#define EXTRACTORLAB_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "extractorlab/classical.hpp"
#include "extractorlab/entropy.hpp"
#include "extractorlab/quantum.hpp"

namespace extractorlab {

/// Runs fn(0..count-1) across a small worker pool. Work items must be
/// independent; results keyed by index stay deterministic regardless of
/// scheduling.
void parallel_for(Index count, const std::function<void(Index)>& fn);

/// A sampled state whose conditional min-entropy is certified by the SDP dual
/// witness: -log2(dual value) >= k up to a 1e-9 relative cushion.
struct CertifiedState {
  BipartiteState state;
  double certified_hmin = 0.0;
  int attempts = 0;
};

/// Rejection-samples a cq state on N (x) R with certified H_min(N|R) >= k.
/// The proposal mixture is biased toward flat sources so useful k values
/// keep a workable acceptance rate; the certificate alone decides acceptance.
std::optional<CertifiedState> sample_cq_with_hmin(Index dim_n, Index dim_r,
                                                  double k, Rng rng,
                                                  int max_attempts = 400);

/// Same for fully quantum states; proposals include (nearly) maximally
/// entangled states so negative k is reachable.
std::optional<CertifiedState> sample_qq_with_hmin(Index dim_n, Index dim_r,
                                                  double k, Rng rng,
                                                  int max_attempts = 400);

/// Monte-Carlo soundness sweep: for `trials` certified states, the measured
/// extraction error must stay within the certificate bound 2 sqrt(epsilon).
struct SoundnessReport {
  SpectralCertificate certificate;
  double epsilon = 0.0;
  double bound = 0.0;  // 2 sqrt(epsilon)
  std::vector<double> trial_errors;
  std::vector<double> trial_hmins;
  std::int64_t violations = 0;
  double worst_error = 0.0;
};

/// Classical family against cq states with quantum side information.
SoundnessReport quantum_proof_soundness(const FunctionFamily& fam, double k,
                                        Index dim_r, int trials,
                                        std::uint64_t seed);

/// Unitary family against bipartite quantum states (k may be negative).
SoundnessReport decoupling_soundness(const UnitaryFamily& fam, double k,
                                     Index dim_r, int trials,
                                     std::uint64_t seed);

/// Classical-only soundness: flat k-sources against the sqrt(epsilon) bound,
/// which needs no side information and no factor 2.
SoundnessReport classical_soundness(const FunctionFamily& fam, int k,
                                    int trials, std::uint64_t seed);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_HARNESS_HPP
