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

#include "extractorlab/harness.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace extractorlab {

void parallel_for(Index count, const std::function<void(Index)>& fn) {
  if (count <= 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<Index>(count, static_cast<Index>(hw)));
  if (workers == 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const Index i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

constexpr double kCertCushion = 1.0 + 1e-9;

// Accept iff the dual witness certifies H_min >= k (dual value <= 2^-k up to
// a relative rounding cushion).
bool certified_at_least(const SdpCertificate& cert, double k) {
  return cert.dual_value <= std::exp2(-k) * kCertCushion;
}

RVec flattened_probabilities(Index dim_n, double k, Rng& rng) {
  // Mix a random distribution toward uniform until max prob <= 2^-(k+0.3).
  const RVec raw = random_probabilities(dim_n, rng);
  const double target = std::exp2(-(k + 0.3));
  const double uni = 1.0 / static_cast<double>(dim_n);
  if (target >= 1.0 || raw.maxCoeff() <= target) return raw;
  if (target <= uni) return RVec::Constant(dim_n, uni);
  const double beta = (target - uni) / (raw.maxCoeff() - uni);
  return (1.0 - beta) * RVec::Constant(dim_n, uni) + beta * raw;
}

BipartiteState propose_cq(Index dim_n, Index dim_r, double k, int style,
                          Rng& rng) {
  const int n_bits =
      static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(dim_n)));
  switch (style % 3) {
    case 0: {
      // Flattened distribution, conditionals clustered around a common state
      // so side information reveals little.
      const RVec p = flattened_probabilities(dim_n, std::max(k, 0.0), rng);
      const Mat base = random_density(dim_r, rng);
      const double gamma = 0.2 * rng.uniform();
      std::vector<Mat> cond;
      cond.reserve(static_cast<size_t>(dim_n));
      for (Index x = 0; x < dim_n; ++x) {
        cond.push_back((1.0 - gamma) * base + gamma * random_density(dim_r, rng));
      }
      return cq_state(p, cond);
    }
    case 1: {
      // Flat source on the input, fully random conditionals.
      const int kk = std::min(
          n_bits, static_cast<int>(std::ceil(std::max(k, 0.0))) +
                      static_cast<int>(rng.uniform_int(2)));
      const ClassicalState p = flat_source_classical(n_bits, kk, rng);
      std::vector<Mat> cond;
      cond.reserve(static_cast<size_t>(dim_n));
      for (Index x = 0; x < dim_n; ++x) cond.push_back(random_density(dim_r, rng));
      return cq_state(p.probs, cond);
    }
    default:
      return random_bipartite(dim_n, dim_r, StateKind::ClassicalQuantum, rng);
  }
}

BipartiteState propose_qq(Index dim_n, Index dim_r, double k, int style,
                          Rng& rng) {
  const int n_bits =
      static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(dim_n)));
  switch (style % 4) {
    case 0: {
      if (dim_n == dim_r) {
        // Maximally entangled with a little admixture; reaches k = -log2 |N|.
        const double w = 0.25 * rng.uniform() * rng.uniform();
        const Mat noise = random_density(dim_n * dim_r, rng);
        Mat rho = (1.0 - w) * maximally_entangled(dim_n).rho + w * noise;
        return BipartiteState(hermitian_part(rho), dim_n, dim_r,
                              StateKind::QuantumQuantum);
      }
      return random_bipartite(dim_n, dim_r, StateKind::QuantumQuantum, rng);
    }
    case 1: {
      // Product of a flat source with an independent R state.
      const int kk =
          std::min(n_bits, std::max(0, static_cast<int>(std::ceil(k))) +
                               static_cast<int>(rng.uniform_int(2)));
      return product_state(flat_source_quantum(n_bits, kk, rng),
                           random_density(dim_r, rng));
    }
    case 2: {
      // Random pure bipartite state.
      const Vec v = random_pure(dim_n * dim_r, rng);
      return BipartiteState(v * v.adjoint(), dim_n, dim_r,
                            StateKind::QuantumQuantum);
    }
    default:
      return random_bipartite(dim_n, dim_r, StateKind::QuantumQuantum, rng);
  }
}

std::optional<CertifiedState> sample_with_hmin(
    Index dim_n, Index dim_r, double k, Rng rng, int max_attempts,
    const std::function<BipartiteState(int, Rng&)>& propose) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng local = rng.split(static_cast<std::uint64_t>(attempt));
    const BipartiteState candidate = propose(attempt, local);
    const HminCondResult res = hmin_cond(candidate);
    if (certified_at_least(res.certificate, k)) {
      return CertifiedState{candidate, res.value, attempt + 1};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CertifiedState> sample_cq_with_hmin(Index dim_n, Index dim_r,
                                                  double k, Rng rng,
                                                  int max_attempts) {
  return sample_with_hmin(dim_n, dim_r, k, rng, max_attempts,
                          [&](int style, Rng& r) {
                            return propose_cq(dim_n, dim_r, k, style, r);
                          });
}

std::optional<CertifiedState> sample_qq_with_hmin(Index dim_n, Index dim_r,
                                                  double k, Rng rng,
                                                  int max_attempts) {
  return sample_with_hmin(dim_n, dim_r, k, rng, max_attempts,
                          [&](int style, Rng& r) {
                            return propose_qq(dim_n, dim_r, k, style, r);
                          });
}

namespace {

SoundnessReport run_soundness(
    double k, int trials, std::uint64_t seed, const SpectralCertificate& cert,
    double dim_m, double count_d,
    const std::function<std::optional<CertifiedState>(Rng)>& sampler,
    const std::function<double(const BipartiteState&)>& error_of) {
  SoundnessReport rep;
  rep.certificate = cert;
  const ErrorBound eb = epsilon_for_k(cert, k, dim_m, count_d);
  rep.epsilon = eb.epsilon;
  rep.bound = eb.quantum_proof_bound;
  rep.trial_errors.assign(static_cast<size_t>(trials), 0.0);
  rep.trial_hmins.assign(static_cast<size_t>(trials), 0.0);

  Rng root(seed);
  std::vector<std::int8_t> failed(static_cast<size_t>(trials), 0);
  parallel_for(trials, [&](Index j) {
    const auto sampled = sampler(root.split(static_cast<std::uint64_t>(j)));
    if (!sampled.has_value()) {
      failed[static_cast<size_t>(j)] = 1;
      return;
    }
    rep.trial_errors[static_cast<size_t>(j)] = error_of(sampled->state);
    rep.trial_hmins[static_cast<size_t>(j)] = sampled->certified_hmin;
  });
  for (int j = 0; j < trials; ++j) {
    if (failed[static_cast<size_t>(j)] != 0) {
      throw std::runtime_error("state sampler exhausted its attempt budget");
    }
  }
  for (double e : rep.trial_errors) {
    rep.worst_error = std::max(rep.worst_error, e);
    if (e > rep.bound + 1e-10) ++rep.violations;
  }
  return rep;
}

}  // namespace

SoundnessReport quantum_proof_soundness(const FunctionFamily& fam, double k,
                                        Index dim_r, int trials,
                                        std::uint64_t seed) {
  const SpectralCertificate cert = spectral_certificate(fam);
  return run_soundness(
      k, trials, seed, cert, static_cast<double>(fam.dim_m()),
      static_cast<double>(fam.count()),
      [&](Rng rng) { return sample_cq_with_hmin(fam.dim_n(), dim_r, k, rng); },
      [&](const BipartiteState& s) {
        return quantum_proof_error(fam, s, fam.mode);
      });
}

SoundnessReport decoupling_soundness(const UnitaryFamily& fam, double k,
                                     Index dim_r, int trials,
                                     std::uint64_t seed) {
  const SpectralCertificate cert = q_spectral_certificate(fam);
  return run_soundness(
      k, trials, seed, cert, static_cast<double>(fam.dim_m()),
      static_cast<double>(fam.count()),
      [&](Rng rng) { return sample_qq_with_hmin(fam.dim_n(), dim_r, k, rng); },
      [&](const BipartiteState& s) {
        return decoupling_error(fam, s, fam.mode);
      });
}

SoundnessReport classical_soundness(const FunctionFamily& fam, int k,
                                    int trials, std::uint64_t seed) {
  const SpectralCertificate cert = spectral_certificate(fam);
  SoundnessReport rep;
  rep.certificate = cert;
  const ErrorBound eb = epsilon_for_k(cert, k, static_cast<double>(fam.dim_m()),
                                      static_cast<double>(fam.count()));
  rep.epsilon = eb.epsilon;
  rep.bound = std::sqrt(std::max(eb.epsilon, 0.0));
  rep.trial_errors.assign(static_cast<size_t>(trials), 0.0);
  rep.trial_hmins.assign(static_cast<size_t>(trials), static_cast<double>(k));

  Rng root(seed);
  parallel_for(trials, [&](Index j) {
    Rng rng = root.split(static_cast<std::uint64_t>(j));
    const ClassicalState p = flat_source_classical(fam.n, k, rng);
    rep.trial_errors[static_cast<size_t>(j)] =
        extraction_error(fam, p, fam.mode);
  });
  for (double e : rep.trial_errors) {
    rep.worst_error = std::max(rep.worst_error, e);
    if (e > rep.bound + 1e-10) ++rep.violations;
  }
  return rep;
}

}  // namespace extractorlab
