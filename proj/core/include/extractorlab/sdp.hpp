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

#ifndef EXTRACTORLAB_SDP_HPP
#define EXTRACTORLAB_SDP_HPP

#include "extractorlab/matrix.hpp"

namespace extractorlab {

/// Primal-dual certificate for the guessing-probability program
///   maximize  tr[rho E]   s.t.  tr_N E = 1_R, E >= 0        (primal)
///   minimize  tr[sigma]   s.t.  1_N (x) sigma >= rho_NR     (dual).
/// Both witnesses ship with the value so every answer can be re-verified
/// without re-running the solver.
struct SdpCertificate {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;            // dual - primal
  Mat dual_witness;            // sigma_R
  Mat primal_witness;          // E_NR
  double dual_slack_min_eig = 0.0;    // min eig of 1 (x) sigma - rho
  double primal_min_eig = 0.0;        // min eig of E
  double primal_marginal_residual = 0.0;  // || tr_N E - 1_R ||_inf
  int newton_iterations = 0;
};

/// Thrown when the barrier method fails to reach the requested gap; carries
/// the residuals at the point of failure.
struct SdpError : std::runtime_error {
  SdpError(const std::string& what, double gap, int iterations)
      : std::runtime_error(what), gap(gap), iterations(iterations) {}
  double gap;
  int iterations;
};

/// Solves the guessing-probability SDP for rho on N (x) R (slow factor N).
/// Log-barrier Newton on the dual; the primal witness is recovered from the
/// barrier optimality conditions, so the returned gap is a genuine
/// certificate. Requires dim_n * dim_r <= 64.
SdpCertificate solve_guessing_sdp(const Mat& rho, Index dim_n, Index dim_r,
                                  double gap_tol = 1e-8);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_SDP_HPP
