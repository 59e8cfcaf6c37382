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

#ifndef EXTRACTORLAB_CERTIFICATE_HPP
#define EXTRACTORLAB_CERTIFICATE_HPP

#include <cmath>

namespace extractorlab {

/// Spectral data certifying an extractor family. `lambda1_diff` is the top
/// eigenvalue of the Hermitian difference between the extractor map's Gram
/// operator and the ideal (uniformizing) map's Gram operator; it drives every
/// (k, epsilon) guarantee. `lambda2_psi` is the second-largest eigenvalue of
/// the extractor Gram operator alone, reported because for balanced families
/// the two coincide.
struct SpectralCertificate {
  double lambda1_diff = 0.0;
  double lambda2_psi = 0.0;
  bool balanced = false;
};

/// (k, epsilon) trade-off read off a certificate value:
///   epsilon = lambda * |M| * |D| / 2^k,
/// plus the error bound 2*sqrt(epsilon) that survives quantum side
/// information / quantum correlations.
struct ErrorBound {
  double epsilon = 0.0;
  double quantum_proof_bound = 0.0;
};

inline ErrorBound epsilon_for_k(double lambda1_diff, double k, double dim_m,
                                double count_d) {
  ErrorBound b;
  b.epsilon = lambda1_diff * dim_m * count_d * std::exp2(-k);
  b.quantum_proof_bound = 2.0 * std::sqrt(std::max(b.epsilon, 0.0));
  return b;
}

inline ErrorBound epsilon_for_k(const SpectralCertificate& cert, double k,
                                double dim_m, double count_d) {
  return epsilon_for_k(cert.lambda1_diff, k, dim_m, count_d);
}

}  // namespace extractorlab

#endif  // EXTRACTORLAB_CERTIFICATE_HPP
