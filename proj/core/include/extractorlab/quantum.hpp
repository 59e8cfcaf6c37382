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

#ifndef EXTRACTORLAB_QUANTUM_HPP
#define EXTRACTORLAB_QUANTUM_HPP

#include <string>
#include <vector>

#include "extractorlab/certificate.hpp"
#include "extractorlab/classical.hpp"
#include "extractorlab/entropy.hpp"
#include "extractorlab/matrix.hpp"
#include "extractorlab/random.hpp"

namespace extractorlab {

/// Seeded family of unitaries on n qubits extracting to the first m qubits.
/// The member count need not be a power of two (group constructions);
/// `seed_bits()` reports log2 of it.
struct UnitaryFamily {
  int n = 0;
  int m = 0;
  std::vector<Mat> unitaries;
  Mode mode = Mode::Strong;

  Index dim_n() const { return Index{1} << n; }
  Index dim_m() const { return Index{1} << m; }
  Index dim_traced() const { return Index{1} << (n - m); }
  Index count() const { return static_cast<Index>(unitaries.size()); }
  double seed_bits() const;

  /// Checks shapes and unitarity of every member to 1e-10.
  void validate() const;
};

/// Matrix realization (column-stacking vectorization) of the extractor
/// channel rho -> (1/|D|) sum_i tr_{N\M}[U_i rho U_i^dagger] (x) |i><i|,
/// shape (|M||D|)^2 x |N|^2. Guarded against oversized outputs; the Gram
/// path below never materializes this.
struct SuperopMatrix {
  Mat matrix;
  std::string source;
  Index dim_in = 0;   // |N|
  Index dim_out = 0;  // |M| * |D|
};
SuperopMatrix superop(const UnitaryFamily& fam);

/// Per-member map tr_{N\M}[U rho U^dagger] as an |M|^2 x |N|^2 matrix.
Mat single_unitary_superop(const Mat& u, Index dim_m);

/// Gram operator psi^dagger psi on vectorized N-operators, accumulated
/// member by member (the seed blocks are orthogonal). |N|^2 x |N|^2.
Mat psi_gram_q(const UnitaryFamily& fam);

/// Gram operator of the ideal map tau(rho) = tr[rho] u_M (x) u_D: the rank-one
/// projector (1/(|M||D|)) vec(1_N) vec(1_N)^dagger.
Mat tau_gram_q(Index dim_n, Index dim_m, Index count_d);

/// Spectral certificate of a unitary family; requires n <= 4.
SpectralCertificate q_spectral_certificate(const UnitaryFamily& fam);

/// Full Clifford group on n qubits (n <= 2) up to global phase: 24 members
/// for one qubit, 11520 for two, generated by breadth-first closure over
/// {H, S} (x 1-qubit slots) and CNOT with canonical phase fixing. Results are
/// memoized per process and, when the EXTRACTORLAB_CACHE environment variable
/// names a directory, persisted there in the family file format.
UnitaryFamily clifford_family(int n, int m);

/// Maximum operator-norm deviation between the family's 2-fold twirl and the
/// Haar 2-fold twirl over a complete basis of matrix units. Zero (to 1e-10)
/// exactly for unitary 2-designs. Requires n <= 2.
double two_design_check(const UnitaryFamily& fam);

/// Closed form of the Haar average of (U^dagger (x) U^dagger) K (U (x) U)
/// for K = (swap on the two M prefixes) (x) identity. Acts on N (x) N'.
Mat haar_moment_operator(int n, int m);

/// The K operator above (swap restricted to the M factors of N and N').
Mat prefix_swap_operator(int n, int m);

/// Empirical mean and per-entry standard error of the same average under
/// `samples` Haar draws.
struct MomentEstimate {
  Mat mean;
  Eigen::MatrixXd standard_error;  // entrywise, combining re/im parts
};
MomentEstimate haar_moment_monte_carlo(int n, int m, int samples, Rng& rng);

/// Trace-norm distance between the extractor output on rho_NR and
/// 1_M/|M| (x) rho_R (x) 1_D/|D| (strong) or its seed-averaged version
/// (weak). rho_nr lives on N (x) R with N on the slow index; dim_r = 1 gives
/// the unconditioned distance to uniform.
double decoupling_error(const UnitaryFamily& fam, const Mat& rho_nr,
                        Index dim_r, Mode mode);
double decoupling_error(const UnitaryFamily& fam, const BipartiteState& rho,
                        Mode mode);

/// Flat state of min-entropy n-1 built from the first member's worst half of
/// the output space; a single seed provably cannot extract from it (error
/// exactly 1).
struct SingleSeedWitness {
  Mat state;                        // gamma_N
  double single_seed_error = 0.0;   // distance under the first member alone
  double family_error = 0.0;        // strong-mode distance under the family
  double hmin = 0.0;
};
SingleSeedWitness single_seed_witness(const UnitaryFamily& fam);

/// Quantum analogue of the classical spectral lower-bound witness: a flat
/// state routed through the first member with image support
/// |S| = ceil(2^k |M| / |N|); the formula value
/// (2^k / |D|^2) |S| (1/|S| - 1/|M|)^2 lower-bounds lambda1_diff.
struct QSpectralLowerBoundWitness {
  Mat state;
  Index image_support = 0;
  double formula_bound = 0.0;
  double h2 = 0.0;
};
QSpectralLowerBoundWitness spectral_lower_bound_witness(
    const UnitaryFamily& fam, int k);

/// Samples t Haar unitaries and measures the average extraction error over
/// random flat k-sources; the sampled-family surrogate for short-seed
/// extraction. Everything is derived from `seed` so reports are
/// byte-reproducible.
struct ShortSeedReport {
  int n = 0, k = 0, m = 0, t = 0, trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> trial_errors;
  double max_error = 0.0;
  double mean_error = 0.0;
  double reference_epsilon = 0.0;    // |M|^2 2^-k / |N|
  double reference_mean_error = 0.0; // |M| / sqrt(|N| 2^k)
};
ShortSeedReport shortseed_experiment(int n, int k, int m, int t, int trials,
                                     std::uint64_t seed);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_QUANTUM_HPP
