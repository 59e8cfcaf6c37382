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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <extractorlab/classical.hpp>
#include <extractorlab/harness.hpp>

using namespace extractorlab;

namespace {

FunctionFamily random_family(int n, int m, int count, Rng& rng) {
  FunctionFamily fam;
  fam.n = n;
  fam.m = m;
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint16_t> t(size_t{1} << n);
    for (auto& y : t) {
      y = static_cast<std::uint16_t>(rng.uniform_int(std::uint64_t{1} << m));
    }
    fam.tables.push_back(std::move(t));
  }
  return fam;
}

FunctionFamily identity_family(int n) {
  FunctionFamily fam;
  fam.n = n;
  fam.m = n;
  std::vector<std::uint16_t> t(size_t{1} << n);
  for (size_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint16_t>(x);
  fam.tables.push_back(std::move(t));
  fam.permutation_based = true;
  return fam;
}

}  // namespace

TEST_CASE("psi_matrix: degenerate families and stochasticity") {
  // m = 0: every function hits the single output symbol, psi == tau.
  const FunctionFamily zero = hash_family(3, 0);
  CHECK((psi_matrix(zero) - tau_matrix(8, 1, 8)).cwiseAbs().maxCoeff() == 0.0);

  // Single identity function: psi is the identity matrix.
  const FunctionFamily id = identity_family(3);
  CHECK((psi_matrix(id) - Eigen::MatrixXd::Identity(8, 8)).norm() == 0.0);

  Rng rng(3);
  const FunctionFamily fam = random_family(4, 2, 9, rng);
  const Eigen::MatrixXd psi = psi_matrix(fam);
  for (Index x = 0; x < 16; ++x) {
    CHECK(std::abs(psi.col(x).sum() - 1.0) < 1e-12);
  }
  // psi applied to a basis vector is the empirical (f_i(x), i) distribution.
  const Eigen::VectorXd image = psi * Eigen::VectorXd::Unit(16, 5);
  for (Index i = 0; i < fam.count(); ++i) {
    const Index y = fam.tables[static_cast<size_t>(i)][5];
    CHECK(image[y * fam.count() + i] == doctest::Approx(1.0 / 9.0));
  }
  // Gram assembled from collision counts agrees with the dense route.
  CHECK((psi_gram(fam) - psi.transpose() * psi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral_certificate: forced values") {
  CHECK(spectral_certificate(hash_family(4, 0)).lambda1_diff == 0.0);

  const SpectralCertificate id = spectral_certificate(identity_family(3));
  CHECK(id.lambda1_diff == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.balanced);

  const SpectralCertificate hash = spectral_certificate(hash_family(4, 2));
  CHECK(hash.lambda1_diff <= 1.0 / 16.0 + 1e-9);
  CHECK(hash.lambda1_diff == doctest::Approx((1.0 - 0.25) / 16.0).epsilon(1e-12));
  CHECK_FALSE(hash.balanced);  // the zero map is in the family

  CHECK_THROWS_AS((void)spectral_certificate(hash_family(11, 2)),
                  DimensionError);
}

TEST_CASE("epsilon_for_k: boundary and monotonicity") {
  SpectralCertificate zero;
  CHECK(epsilon_for_k(zero, 4.0, 8, 16).epsilon == 0.0);

  // Hash families sit at lambda1 <= 1/|D|, reproducing m = k - log2(1/eps).
  for (int n : {3, 4}) {
    for (int m = 0; m < n; ++m) {
      const double dim_m = std::exp2(m);
      const double count = std::exp2(n);
      for (double k : {1.0, 2.0, static_cast<double>(n)}) {
        const ErrorBound at_bound =
            epsilon_for_k(1.0 / count, k, dim_m, count);
        CHECK(static_cast<double>(m) ==
              doctest::Approx(k - std::log2(1.0 / at_bound.epsilon))
                  .epsilon(1e-12));
      }
    }
  }

  const SpectralCertificate cert = spectral_certificate(hash_family(4, 2));
  double prev = 1e300;
  for (double k = 0.0; k <= 4.0; k += 1.0) {
    const double eps = epsilon_for_k(cert, k, 4, 16).epsilon;
    CHECK(eps < prev);
    prev = eps;
  }
}

TEST_CASE("hash_family: exact two-universality and adversarial failure") {
  for (int n : {2, 4}) {
    for (int m = 1; m <= n; ++m) {
      const auto stats = two_universal_check(hash_family(n, m));
      CHECK(stats.within_bound(Index{1} << m));
      // The GF construction meets the bound with equality.
      CHECK(stats.worst_count * (std::int64_t{1} << m) == stats.family_size);
    }
  }

  // Two distinct constant functions collide on every pair.
  FunctionFamily constants;
  constants.n = 2;
  constants.m = 1;
  constants.tables = {{0, 0, 0, 0}, {1, 1, 1, 1}};
  const auto stats = two_universal_check(constants);
  CHECK(stats.max_frequency() == 1.0);
  CHECK_FALSE(stats.within_bound(2));

  // A single injective function never collides.
  const auto none = two_universal_check(identity_family(3));
  CHECK(none.worst_count == 0);
}

TEST_CASE("pairwise_permutations: exhaustive independence at n=2") {
  const FunctionFamily fam = pairwise_permutations(2);
  CHECK(fam.count() == 12);
  fam.validate();  // bijection check via the permutation flag

  // For distinct (x,x') and (y,y'), exactly one member maps x->y, x'->y'.
  for (int x = 0; x < 4; ++x) {
    for (int xp = 0; xp < 4; ++xp) {
      if (x == xp) continue;
      for (int y = 0; y < 4; ++y) {
        for (int yp = 0; yp < 4; ++yp) {
          if (y == yp) continue;
          int hits = 0;
          for (const auto& t : fam.tables) {
            hits += t[static_cast<size_t>(x)] == y &&
                    t[static_cast<size_t>(xp)] == yp;
          }
          CHECK(hits == 1);
        }
      }
    }
  }

  const SpectralCertificate cert = spectral_certificate(fam);
  CHECK(cert.lambda1_diff <= 1.0 / 12.0 + 1e-9);
  CHECK(cert.balanced);
  // Balanced permutation families: lambda1(diff) == lambda2(psi^T psi).
  CHECK(std::abs(cert.lambda1_diff - cert.lambda2_psi) <= 1e-9);

  const SpectralCertificate restricted =
      spectral_certificate(restrict_output(fam, 1));
  CHECK(restricted.balanced);
  CHECK(std::abs(restricted.lambda1_diff - restricted.lambda2_psi) <= 1e-9);
}

TEST_CASE("quadratic form identity: <P|(G - T)P> equals ||(psi-tau)P||^2") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const FunctionFamily fam = random_family(4, 2, 5, rng);
    const Eigen::MatrixXd psi = psi_matrix(fam);
    const Eigen::MatrixXd tau = tau_matrix(16, 4, 5);
    const Eigen::VectorXd p = random_probabilities(16, rng);
    const double lhs =
        p.dot(psi_gram(fam) * p) - p.dot(tau.transpose() * (tau * p));
    const double rhs = ((psi - tau) * p).squaredNorm();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("extraction_error: uniform input through balanced families") {
  const FunctionFamily perm = restrict_output(pairwise_permutations(2), 1);
  const ClassicalState uniform(RVec::Constant(4, 0.25));
  CHECK(extraction_error(perm, uniform, Mode::Strong) < 1e-10);
  CHECK(extraction_error(perm, uniform, Mode::Weak) < 1e-10);

  // m = 0 collapses everything to the uniform point.
  const FunctionFamily zero = hash_family(3, 0);
  Rng rng(21);
  const ClassicalState p = flat_source_classical(3, 1, rng);
  CHECK(extraction_error(zero, p, Mode::Strong) < 1e-12);

  // Weak error never exceeds strong error.
  for (int trial = 0; trial < 20; ++trial) {
    const FunctionFamily fam = random_family(4, 2, 6, rng);
    const ClassicalState q = flat_source_classical(4, 2, rng);
    CHECK(extraction_error(fam, q, Mode::Weak) <=
          extraction_error(fam, q, Mode::Strong) + 1e-12);
  }
}

TEST_CASE("classical soundness: flat sources against sqrt(epsilon)") {
  const FunctionFamily fam = hash_family(4, 1);
  const auto rep = classical_soundness(fam, 3, 200, 777);
  CHECK(rep.violations == 0);
  CHECK(rep.trial_errors.size() == 200);
  CHECK(rep.worst_error <= rep.bound + 1e-10);
}

TEST_CASE("quantum_proof_error: structural zero cases") {
  Rng rng(31);
  const FunctionFamily perm = restrict_output(pairwise_permutations(2), 1);
  // Uniform classical source with arbitrary side information, balanced
  // family: the output is exactly uniform and independent.
  std::vector<Mat> cond(4, random_density(3, rng));
  const auto rho = cq_state(RVec::Constant(4, 0.25), cond);
  CHECK(quantum_proof_error(perm, rho, Mode::Strong) < 1e-10);

  const FunctionFamily zero = hash_family(2, 0);
  std::vector<Mat> cond2;
  for (int i = 0; i < 4; ++i) cond2.push_back(random_density(3, rng));
  const auto rho2 = cq_state(random_probabilities(4, rng), cond2);
  CHECK(quantum_proof_error(zero, rho2, Mode::Strong) < 1e-10);

  CHECK_THROWS_AS(
      (void)quantum_proof_error(
          perm, random_bipartite(4, 2, StateKind::QuantumQuantum, rng),
          Mode::Strong),
      std::invalid_argument);
}

TEST_CASE("quantum_proof_error: blockwise equals the dense trace norm") {
  Rng rng(37);
  const FunctionFamily fam = random_family(2, 1, 3, rng);
  const auto rho = random_bipartite(4, 2, StateKind::ClassicalQuantum, rng);

  // Dense route: assemble the full operator on M (x) R (x) D.
  const Index dm = 2, dr = 2, d = 3;
  Mat dense = Mat::Zero(dm * dr * d, dm * dr * d);
  for (Index i = 0; i < d; ++i) {
    Mat out_i = Mat::Zero(dm * dr, dm * dr);
    for (Index x = 0; x < 4; ++x) {
      const Index y = fam.tables[static_cast<size_t>(i)][static_cast<size_t>(x)];
      out_i.block(y * dr, y * dr, dr, dr) += rho.conditional_block(x);
    }
    Mat seed = Mat::Zero(d, d);
    seed(i, i) = 1.0;
    dense += kron(out_i / static_cast<double>(d), seed);
  }
  const Mat target = kron(kron(Mat::Identity(dm, dm) / 2.0, rho.marginal_r()),
                          Mat::Identity(d, d) / 3.0);
  const double dense_err = trace_norm(dense - target);
  CHECK(quantum_proof_error(fam, rho, Mode::Strong) ==
        doctest::Approx(dense_err).epsilon(1e-10));
}

TEST_CASE("quantum_proof_error: product side information adds nothing") {
  Rng rng(41);
  const FunctionFamily fam = hash_family(3, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const RVec p = random_probabilities(8, rng);
    const Mat side = random_density(2, rng);
    std::vector<Mat> cond(8, side);
    const auto rho = cq_state(p, cond);
    const double with_r = quantum_proof_error(fam, rho, Mode::Strong);
    const double without = extraction_error(fam, ClassicalState(p), Mode::Strong);
    CHECK(with_r <= without + 1e-9);
    CHECK(with_r == doctest::Approx(without).epsilon(1e-9));
  }
}

TEST_CASE("lower-bound witness: forced and derived cases") {
  // Identity function, k = m = n-1: |S| = 2^{n-1}, bound = 1/4.
  const FunctionFamily id = identity_family(3);
  const auto w = spectral_lower_bound_witness(id, 2);
  CHECK(w.image_support == 4);
  CHECK(w.formula_bound == doctest::Approx(0.25).epsilon(1e-12));
  const double lambda1 = spectral_certificate(id).lambda1_diff;
  CHECK(w.formula_bound <= lambda1 + 1e-9);
  CHECK(hmin(w.source) == 2.0);
  // The witness's own quadratic form also certifies the bound chain.
  CHECK(w.formula_bound <= w.quadratic_form + 1e-9);
  CHECK(w.quadratic_form <= lambda1 + 1e-9);

  const FunctionFamily hash = hash_family(4, 2);
  const auto wh = spectral_lower_bound_witness(hash, 1);
  CHECK(wh.image_support == 1);
  CHECK(wh.formula_bound <= spectral_certificate(hash).lambda1_diff + 1e-9);

  // k = n on a balanced first member: the bound degenerates to ~0.
  const auto wn = spectral_lower_bound_witness(hash, 4);
  CHECK(wn.image_support == 4);
  CHECK(wn.formula_bound == doctest::Approx(0.0));

  // Constant-only family: image support 2 is infeasible.
  FunctionFamily constant;
  constant.n = 2;
  constant.m = 2;
  constant.tables = {{0, 0, 0, 0}};
  CHECK_THROWS_AS((void)spectral_lower_bound_witness(constant, 2),
                  InfeasibleWitness);
}

TEST_CASE("theorem-1 style soundness, small run") {
  const FunctionFamily fam = hash_family(3, 1);
  const auto rep = quantum_proof_soundness(fam, 2.0, 2, 25, 4242);
  CHECK(rep.violations == 0);
  CHECK(rep.trial_errors.size() == 25);
  for (double h : rep.trial_hmins) CHECK(h >= 2.0 - 1e-7);
}
