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

#include <extractorlab/harness.hpp>
#include <extractorlab/quantum.hpp>

using namespace extractorlab;

namespace {

UnitaryFamily haar_family(int n, int m, int count, Rng& rng) {
  UnitaryFamily fam;
  fam.n = n;
  fam.m = m;
  const Index dn = Index{1} << n;
  for (int i = 0; i < count; ++i) fam.unitaries.push_back(haar_unitary(dn, rng));
  return fam;
}

UnitaryFamily identity_family_q(int n, int m) {
  UnitaryFamily fam;
  fam.n = n;
  fam.m = m;
  fam.unitaries = {Mat::Identity(Index{1} << n, Index{1} << n)};
  return fam;
}

// Reference channel application for validating the matrix realization.
Mat apply_family(const UnitaryFamily& fam, const Mat& rho) {
  const Index dm = fam.dim_m();
  const Index dt = fam.dim_traced();
  const Index d = fam.count();
  Mat out = Mat::Zero(dm * d, dm * d);
  for (Index i = 0; i < d; ++i) {
    const Mat& u = fam.unitaries[static_cast<size_t>(i)];
    const Mat moved = u * rho * u.adjoint();
    const std::array<Index, 2> dims{dm, dt};
    const std::array<int, 1> keep{0};
    const Mat reduced = partial_trace(moved, dims, keep);
    for (Index a = 0; a < dm; ++a) {
      for (Index b = 0; b < dm; ++b) {
        out(a * d + i, b * d + i) += reduced(a, b) / static_cast<double>(d);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("superop: identity family is the identity map") {
  const auto s = superop(identity_family_q(2, 2));
  CHECK((s.matrix - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("superop: matrix matches direct channel application") {
  Rng rng(5);
  const UnitaryFamily fam = haar_family(2, 1, 3, rng);
  const auto s = superop(fam);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat rho = random_density(4, rng);
    const Mat via_matrix =
        devectorize(s.matrix * vectorize(rho), s.dim_out, s.dim_out);
    CHECK((via_matrix - apply_family(fam, rho)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("superop: m = 0 collapses to the ideal map") {
  Rng rng(7);
  const UnitaryFamily fam = haar_family(2, 0, 4, rng);
  const auto s = superop(fam);
  for (int trial = 0; trial < 5; ++trial) {
    const Mat rho = random_density(4, rng);
    const Mat out = devectorize(s.matrix * vectorize(rho), 4, 4);
    CHECK((out - Mat::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("superop: adjoint pairing and trace preservation") {
  Rng rng(9);
  const UnitaryFamily fam = haar_family(2, 1, 3, rng);
  const auto s = superop(fam);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat y = ginibre(4, 4, rng);
    const Mat x = ginibre(s.dim_out, s.dim_out, rng);
    const Complex lhs = vectorize(x).adjoint() * (s.matrix * vectorize(y));
    const Complex rhs =
        (s.matrix.adjoint() * vectorize(x)).adjoint() * vectorize(y);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Mat rho = random_density(4, rng);
    const Mat out = devectorize(s.matrix * vectorize(rho), s.dim_out, s.dim_out);
    CHECK(std::abs(out.trace() - rho.trace()) < 1e-10);
  }
  CHECK_THROWS_AS((void)superop(clifford_family(2, 1)), DimensionError);
}

TEST_CASE("psi_gram_q agrees with the explicit superoperator") {
  Rng rng(11);
  const UnitaryFamily fam = haar_family(2, 1, 4, rng);
  const auto s = superop(fam);
  const Mat direct = s.matrix.adjoint() * s.matrix;
  CHECK((psi_gram_q(fam) - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("q_spectral_certificate: forced values") {
  Rng rng(13);
  CHECK(q_spectral_certificate(haar_family(2, 0, 3, rng)).lambda1_diff <
        1e-12);

  // Single identity unitary with m = n: gram is the identity, the ideal part
  // removes only the vec(1) direction, so lambda1 = 1.
  const auto id_cert = q_spectral_certificate(identity_family_q(2, 2));
  CHECK(id_cert.lambda1_diff >= 0.5);
  CHECK(id_cert.lambda1_diff == doctest::Approx(1.0).epsilon(1e-12));

  const auto cf = clifford_family(1, 1);
  const auto cert = q_spectral_certificate(cf);
  CHECK(cert.lambda1_diff <= 2.0 / (2.0 * 24.0) + 1e-9);
  CHECK(cert.balanced);
}

TEST_CASE("clifford_family: enumeration and 2-design moments") {
  const auto cf = clifford_family(1, 1);
  CHECK(cf.count() == 24);
  cf.validate();

  CHECK(two_design_check(cf) <= 1e-10);

  // Every Pauli is in the group up to phase: the four canonical forms appear.
  // (Spot check: X as a canonicalized member.)
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  bool found = false;
  for (const auto& u : cf.unitaries) {
    if ((u - x).cwiseAbs().maxCoeff() < 1e-9) found = true;
  }
  CHECK(found);
}

TEST_CASE("two_design_check: non-designs give positive deviation") {
  // Pauli family: a 1-design but not a 2-design.
  UnitaryFamily pauli;
  pauli.n = 1;
  pauli.m = 1;
  Mat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  pauli.unitaries = {Mat::Identity(2, 2), x, y, z};
  CHECK(two_design_check(pauli) > 1e-3);

  CHECK(two_design_check(identity_family_q(1, 1)) > 1e-3);
}

TEST_CASE("haar_moment_operator: closed form against group averaging") {
  // m = n: the operator is exactly the swap.
  CHECK((haar_moment_operator(1, 1) - swap_operator(2)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((haar_moment_operator(2, 2) - swap_operator(4)).cwiseAbs().maxCoeff() <
        1e-12);

  // n=2, m=1: both coefficients are (1/|M|) * 48/60 = 2/5.
  const Mat op = haar_moment_operator(2, 1);
  const Mat expect = 0.4 * Mat::Identity(16, 16) + 0.4 * swap_operator(4);
  CHECK((op - expect).cwiseAbs().maxCoeff() < 1e-12);

  // Clifford group average reproduces the closed form (1-qubit here; the
  // 2-qubit configurations run in the acceptance suite).
  const auto cf = clifford_family(1, 1);
  const Mat k = prefix_swap_operator(1, 1);
  Mat avg = Mat::Zero(4, 4);
  for (const auto& u : cf.unitaries) {
    const Mat v = kron(u, u);
    avg += v.adjoint() * k * v;
  }
  avg /= static_cast<double>(cf.count());
  CHECK((avg - haar_moment_operator(1, 1)).cwiseAbs().maxCoeff() <= 1e-10);

  CHECK_THROWS_AS((void)haar_moment_operator(0, 0), std::invalid_argument);
}

TEST_CASE("haar_moment_operator: Monte-Carlo agreement at modest samples") {
  Rng rng(17);
  const auto est = haar_moment_monte_carlo(1, 1, 20000, rng);
  const Mat exact = haar_moment_operator(1, 1);
  for (Index r = 0; r < 4; ++r) {
    for (Index c = 0; c < 4; ++c) {
      const double dev = std::abs(est.mean(r, c) - exact(r, c));
      CHECK(dev <= std::max(3.0 * est.standard_error(r, c), 1e-12));
    }
  }
}

TEST_CASE("2-design quadratic form bound on random operators") {
  const auto cf = clifford_family(1, 1);
  const Mat gram = psi_gram_q(cf);
  const Mat diff = gram - tau_gram_q(2, 2, cf.count());
  const double bound = 2.0 / (2.0 * 24.0);
  Rng rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec x = vectorize(ginibre(2, 2, rng));
    const double num = (x.adjoint() * diff * x).real()(0, 0);
    const double den = x.squaredNorm();
    CHECK(num <= bound * den * (1.0 + 1e-9));
  }
}

TEST_CASE("decoupling_error: structural zeros and weak/strong relation") {
  Rng rng(23);
  const UnitaryFamily fam = haar_family(2, 1, 4, rng);

  // Maximally mixed product input decouples exactly.
  const Mat rho_r = random_density(3, rng);
  const Mat prod = kron(Mat::Identity(4, 4) / 4.0, rho_r);
  CHECK(decoupling_error(fam, prod, 3, Mode::Strong) < 1e-10);
  CHECK(decoupling_error(fam, prod, 3, Mode::Weak) < 1e-10);

  const UnitaryFamily collapse = haar_family(2, 0, 4, rng);
  const Mat any = random_density(12, rng);
  CHECK(decoupling_error(collapse, any, 3, Mode::Strong) < 1e-10);

  for (int trial = 0; trial < 10; ++trial) {
    const Mat rho = random_density(8, rng);
    CHECK(decoupling_error(fam, rho, 2, Mode::Weak) <=
          decoupling_error(fam, rho, 2, Mode::Strong) + 1e-12);
  }
}

TEST_CASE("decoupling_error: blockwise equals the dense trace norm") {
  Rng rng(29);
  const UnitaryFamily fam = haar_family(1, 1, 3, rng);
  const auto st = random_bipartite(2, 2, StateKind::QuantumQuantum, rng);

  Mat dense = Mat::Zero(2 * 2 * 3, 2 * 2 * 3);
  for (Index i = 0; i < 3; ++i) {
    const Mat w = kron(fam.unitaries[static_cast<size_t>(i)], Mat::Identity(2, 2));
    const Mat moved = w * st.rho * w.adjoint();
    const std::array<Index, 3> dims{2, 1, 2};
    const std::array<int, 2> keep{0, 2};
    Mat seed = Mat::Zero(3, 3);
    seed(i, i) = 1.0;
    dense += kron(partial_trace(moved, dims, keep) / 3.0, seed);
  }
  const Mat target = kron(kron(Mat::Identity(2, 2) / 2.0, st.marginal_r()),
                          Mat::Identity(3, 3) / 3.0);
  CHECK(decoupling_error(fam, st, Mode::Strong) ==
        doctest::Approx(trace_norm(dense - target)).epsilon(1e-10));
}

TEST_CASE("single_seed_witness: error is exactly one, entropy n-1") {
  Rng rng(31);
  for (const auto& fam :
       {clifford_family(1, 1), haar_family(2, 1, 5, rng),
        haar_family(3, 2, 4, rng)}) {
    const auto w = single_seed_witness(fam);
    CHECK(std::abs(w.single_seed_error - 1.0) <= 1e-9);
    CHECK(w.hmin == doctest::Approx(fam.n - 1.0).epsilon(1e-12));
    CHECK(std::abs(w.state.trace().real() - 1.0) < 1e-12);

    // The family-wide error obeys the certificate bound at k = n-1.
    const auto cert = q_spectral_certificate(fam);
    const auto eb =
        epsilon_for_k(cert, fam.n - 1.0, static_cast<double>(fam.dim_m()),
                      static_cast<double>(fam.count()));
    CHECK(w.family_error <= eb.quantum_proof_bound + 1e-9);
  }
  CHECK_THROWS_AS((void)single_seed_witness(haar_family(2, 0, 2, rng)),
                  std::invalid_argument);
}

TEST_CASE("quantum lower-bound witness: formula below lambda1") {
  Rng rng(37);
  const auto cf = clifford_family(1, 1);
  const auto cert = q_spectral_certificate(cf);
  for (int k = 0; k <= 1; ++k) {
    const auto w = spectral_lower_bound_witness(cf, k);
    CHECK(w.formula_bound <= cert.lambda1_diff + 1e-9);
    CHECK(w.h2 >= static_cast<double>(k) - 1e-9);
    CHECK(std::abs(w.state.trace().real() - 1.0) < 1e-12);
  }

  const UnitaryFamily hf = haar_family(2, 1, 6, rng);
  const auto hcert = q_spectral_certificate(hf);
  for (int k = 0; k <= 2; ++k) {
    const auto w = spectral_lower_bound_witness(hf, k);
    CHECK(w.formula_bound <= hcert.lambda1_diff + 1e-9);
    CHECK(w.h2 >= static_cast<double>(k) - 1e-9);
  }
  // k = n: |S| = |M| and the bound vanishes.
  const auto top = spectral_lower_bound_witness(hf, 2);
  CHECK(top.image_support == 2);
  CHECK(top.formula_bound == doctest::Approx(0.0));
}

TEST_CASE("shortseed_experiment: degenerate settings and determinism") {
  const auto zero_m = shortseed_experiment(3, 2, 0, 4, 5, 99);
  for (double e : zero_m.trial_errors) CHECK(e < 1e-12);

  const auto mixed = shortseed_experiment(3, 3, 1, 1, 3, 99);
  for (double e : mixed.trial_errors) CHECK(e < 1e-10);

  const auto a = shortseed_experiment(4, 2, 1, 8, 6, 1234);
  const auto b = shortseed_experiment(4, 2, 1, 8, 6, 1234);
  REQUIRE(a.trial_errors.size() == b.trial_errors.size());
  for (size_t i = 0; i < a.trial_errors.size(); ++i) {
    CHECK(a.trial_errors[i] == b.trial_errors[i]);
  }
  CHECK(a.reference_epsilon == doctest::Approx(std::exp2(2 * 1 - 2 - 4)));
  CHECK(a.reference_mean_error ==
        doctest::Approx(2.0 / std::sqrt(16.0 * 4.0)));
}

TEST_CASE("theorem-2 style soundness, small run incl. entangled inputs") {
  Rng rng(41);
  const UnitaryFamily fam = haar_family(2, 1, 8, rng);
  const auto rep = decoupling_soundness(fam, -2.0, 4, 20, 31337);
  CHECK(rep.violations == 0);
  for (double h : rep.trial_hmins) CHECK(h >= -2.0 - 1e-7);
  // The sampler must actually produce entangled inputs at negative k.
  bool negative_seen = false;
  for (double h : rep.trial_hmins) negative_seen |= h < -0.5;
  CHECK(negative_seen);
}

TEST_CASE("unitary family validation") {
  UnitaryFamily bad;
  bad.n = 1;
  bad.m = 1;
  Mat notu(2, 2);
  notu << 1.0, 0.1, 0.0, 1.0;
  bad.unitaries = {notu};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
