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

#ifndef EXTRACTORLAB_ENTROPY_HPP
#define EXTRACTORLAB_ENTROPY_HPP

#include <optional>
#include <vector>

#include "extractorlab/matrix.hpp"
#include "extractorlab/random.hpp"
#include "extractorlab/sdp.hpp"

namespace extractorlab {

/// Probability vector on a finite alphabet.
struct ClassicalState {
  RVec probs;

  ClassicalState() = default;
  explicit ClassicalState(RVec p);

  Index size() const { return probs.size(); }
};

enum class StateKind { ClassicalClassical, ClassicalQuantum, QuantumQuantum };

/// Trace-one PSD operator on N (x) R (N on the slow index). For the
/// classical-quantum kind the operator is block diagonal in the N basis;
/// classical-classical is fully diagonal.
struct BipartiteState {
  Mat rho;
  Index dim_n = 0;
  Index dim_r = 0;
  StateKind kind = StateKind::QuantumQuantum;

  BipartiteState() = default;
  BipartiteState(Mat rho, Index dim_n, Index dim_r, StateKind kind);

  Mat marginal_n() const;
  Mat marginal_r() const;

  /// N-diagonal block <x| . |x> on R (meaningful for cq states).
  Mat conditional_block(Index x) const;
};

/// Min-entropy of a classical source: -log2 of the largest probability.
double hmin(const ClassicalState& p);

/// Min-entropy of a quantum source: -log2 of the largest eigenvalue.
double hmin_q(const Mat& rho);

/// Conditional min-entropy via the guessing-probability SDP, with the
/// primal/dual certificate attached.
struct HminCondResult {
  double value = 0.0;
  SdpCertificate certificate;
};
HminCondResult hmin_cond(const BipartiteState& state, double gap_tol = 1e-8);

/// Closed form for classical-classical states:
/// -log2 sum_r max_n rho(n,r).
double hmin_cond_classical(const BipartiteState& state);

/// Binary-hypothesis closed form for a two-symbol cq state:
/// p_guess = (1 + || p0 rho0 - p1 rho1 ||_1) / 2.
double pguess_helstrom(double p0, const Mat& rho0, double p1, const Mat& rho1);

/// Conditional Renyi-2 entropy -log2 ||tilde rho||_2^2 together with the
/// tilted operators used by the extractor analyses. Inverse powers of the
/// R-marginal are taken on its support.
struct H2CondResult {
  double value = 0.0;
  Mat tilde;  // (1 (x) rho_R^{-1/4}) rho (1 (x) rho_R^{-1/4})
  Mat hat;    // (1 (x) rho_R^{-1/2}) rho (1 (x) rho_R^{-1/2})
};
H2CondResult h2_cond(const BipartiteState& state);

/// Renyi-2 entropy of an unconditioned source: -log2 tr[rho^2].
double h2_q(const Mat& rho);

/// Flat k-source on 2^n symbols: exactly 2^k entries equal to 2^-k.
/// The support is either supplied or sampled.
ClassicalState flat_source_classical(int n, int k, Rng& rng);
ClassicalState flat_source_classical(int n, int k,
                                     std::span<const Index> support);

/// Quantum flat k-source: 2^k eigenvalues 2^-k in a Haar-random (or given)
/// eigenbasis.
Mat flat_source_quantum(int n, int k, Rng& rng);
Mat flat_source_quantum(int n, int k, const Mat& eigenbasis);

/// Decomposition of a min-entropy >= k distribution into a convex mixture of
/// flat k-sources.
struct FlatComponent {
  double weight;
  ClassicalState source;
};
std::vector<FlatComponent> flat_decomposition(const ClassicalState& p, int k);

/// Builders for test and harness states.
BipartiteState product_state(const Mat& rho_n, const Mat& rho_r,
                             StateKind kind = StateKind::QuantumQuantum);
BipartiteState cq_state(const RVec& probs, const std::vector<Mat>& conditionals);
BipartiteState cc_state(const Eigen::MatrixXd& joint);
BipartiteState maximally_entangled(Index dim);
BipartiteState random_bipartite(Index dim_n, Index dim_r, StateKind kind,
                                Rng& rng);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_ENTROPY_HPP
