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

#ifndef EXTRACTORLAB_CLASSICAL_HPP
#define EXTRACTORLAB_CLASSICAL_HPP

#include <cstdint>
#include <vector>

#include "extractorlab/certificate.hpp"
#include "extractorlab/entropy.hpp"
#include "extractorlab/matrix.hpp"

namespace extractorlab {

/// Strong extractors keep the seed register in the output; weak ones average
/// it out before taking the distance to uniform.
enum class Mode { Strong, Weak };

/// Seeded family of functions from n-bit inputs to m-bit outputs, stored as
/// explicit tables (tables[i][x] = i-th function applied to x). The family
/// size need not be a power of two; `seed_bits()` reports log2 of it.
struct FunctionFamily {
  int n = 0;
  int m = 0;
  std::vector<std::vector<std::uint16_t>> tables;
  Mode mode = Mode::Strong;
  bool permutation_based = false;

  Index dim_n() const { return Index{1} << n; }
  Index dim_m() const { return Index{1} << m; }
  Index count() const { return static_cast<Index>(tables.size()); }
  double seed_bits() const;

  /// Checks table shape, output range, and (when flagged) bijectivity of the
  /// underlying maps for m = n families.
  void validate() const;
};

/// Matrix of the extractor map on distributions: shape (|M|*|D|) x |N| with
/// entry 1/|D| at ((f_i(x), i), x); columns sum to one. Output index is
/// y * |D| + i (output symbol on the slow axis).
Eigen::MatrixXd psi_matrix(const FunctionFamily& fam);

/// Matrix of the ideal map P -> (sum_j P_j) u_M (x) u_D: every entry equals
/// 1 / (|M| |D|).
Eigen::MatrixXd tau_matrix(Index dim_n, Index dim_m, Index count_d);

/// Gram operator psi^T psi as an |N| x |N| matrix, assembled from collision
/// counts without materializing psi. Entry (x, x') equals
/// #{i : f_i(x) = f_i(x')} / |D|^2.
Eigen::MatrixXd psi_gram(const FunctionFamily& fam);

/// Spectral certificate: lambda_1(psi^T psi - tau^T tau), lambda_2(psi^T psi)
/// and exact balancedness (every function's preimage sizes all equal
/// |N| / |M|). Requires 2^n <= 2^10.
SpectralCertificate spectral_certificate(const FunctionFamily& fam);

/// Two-universal family over GF(2^n): f_a(x) = top m bits of a*x, one
/// function per field element a (the zero map included, ordered last so the
/// first member is the truncated identity). d = n.
FunctionFamily hash_family(int n, int m);

/// All affine bijections x -> a*x + b of GF(2^n) with a != 0; pairwise
/// independent, |D| = |N|(|N|-1), output size m = n.
FunctionFamily pairwise_permutations(int n);

/// Same family with outputs truncated to the top m bits.
FunctionFamily restrict_output(const FunctionFamily& fam, int m);

/// Exact collision statistics over all input pairs j != k. The bound check
/// is integer arithmetic: worst_count * |M| <= |D|. Requires 2^n <= 2^12.
struct CollisionStats {
  std::int64_t worst_count = 0;
  std::int64_t family_size = 0;
  Index worst_j = 0;
  Index worst_k = 0;

  double max_frequency() const {
    return static_cast<double>(worst_count) / static_cast<double>(family_size);
  }
  bool within_bound(Index dim_m) const {
    return worst_count * static_cast<std::int64_t>(dim_m) <= family_size;
  }
};
CollisionStats two_universal_check(const FunctionFamily& fam);

/// Distance of the extractor output from uniform on a classical input
/// (the unnormalized 1-norm of the displayed difference).
double extraction_error(const FunctionFamily& fam, const ClassicalState& p,
                        Mode mode);

/// Same distance when the source carries quantum side information; the input
/// must be classical on N. Exploits the block structure, so no operator of
/// size |M||D||R| is ever formed.
double quantum_proof_error(const FunctionFamily& fam,
                           const BipartiteState& rho, Mode mode);

/// Flat k-source routed through the first family member so that its image
/// has support of exactly ceil(2^k |M| / |N|) symbols; the resulting
/// quadratic-form value lower-bounds lambda1_diff by
/// (2^k / |D|^2) |S| (1/|S| - 1/|M|)^2.
struct SpectralLowerBoundWitness {
  ClassicalState source;
  Index image_support = 0;
  double formula_bound = 0.0;
  double quadratic_form = 0.0;  // 2^k <Q|(psi^T psi - tau^T tau)|Q>
};
SpectralLowerBoundWitness spectral_lower_bound_witness(
    const FunctionFamily& fam, int k);

/// Thrown when no flat k-source with the required image support exists for
/// the first family member.
struct InfeasibleWitness : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace extractorlab

#endif  // EXTRACTORLAB_CLASSICAL_HPP
