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

#include "extractorlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extractorlab {

namespace {

constexpr double kStateTol = 1e-12;

void check_power_of_two_sizes(int n, int k) {
  if (n < 0 || n > 20) throw std::invalid_argument("input size out of range");
  if (k < 0 || k > n) {
    throw std::invalid_argument("flat sources need 0 <= k <= n");
  }
}

}  // namespace

ClassicalState::ClassicalState(RVec p) : probs(std::move(p)) {
  if (probs.size() == 0) throw std::invalid_argument("empty state");
  if (probs.minCoeff() < -kStateTol) {
    throw std::invalid_argument("negative probability");
  }
  if (std::abs(probs.sum() - 1.0) > 1e-12 * std::max<double>(1, probs.size())) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

BipartiteState::BipartiteState(Mat rho_in, Index n, Index r, StateKind k)
    : rho(std::move(rho_in)), dim_n(n), dim_r(r), kind(k) {
  if (dim_n < 1 || dim_r < 1 || rho.rows() != dim_n * dim_r ||
      rho.cols() != dim_n * dim_r) {
    throw std::invalid_argument("state dimension mismatch");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10) {
    throw std::invalid_argument("state must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(rho),
                                            Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("state must be positive semidefinite");
  }
  if (kind != StateKind::QuantumQuantum) {
    // Off-diagonal N blocks must vanish for classical N.
    for (Index x = 0; x < dim_n; ++x) {
      for (Index y = 0; y < dim_n; ++y) {
        if (x == y) continue;
        const double block =
            rho.block(x * dim_r, y * dim_r, dim_r, dim_r).cwiseAbs().maxCoeff();
        if (block > 1e-10) {
          throw std::invalid_argument("state is not block diagonal on N");
        }
      }
    }
  }
  if (kind == StateKind::ClassicalClassical) {
    for (Index x = 0; x < dim_n; ++x) {
      Mat blk = conditional_block(x);
      blk.diagonal().setZero();
      if (blk.cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("state is not diagonal on R");
      }
    }
  }
}

Mat BipartiteState::marginal_n() const {
  return trace_out_second(rho, dim_n, dim_r);
}

Mat BipartiteState::marginal_r() const {
  return trace_out_first(rho, dim_n, dim_r);
}

Mat BipartiteState::conditional_block(Index x) const {
  return rho.block(x * dim_r, x * dim_r, dim_r, dim_r);
}

double hmin(const ClassicalState& p) {
  if (p.size() == 0) throw std::invalid_argument("empty state");
  return -std::log2(p.probs.maxCoeff());
}

double hmin_q(const Mat& rho) {
  if (rho.rows() == 0) throw std::invalid_argument("empty state");
  return -std::log2(lambda_max(rho));
}

HminCondResult hmin_cond(const BipartiteState& state, double gap_tol) {
  HminCondResult out;
  out.certificate =
      solve_guessing_sdp(state.rho, state.dim_n, state.dim_r, gap_tol);
  out.value = -std::log2(out.certificate.dual_value);
  return out;
}

double hmin_cond_classical(const BipartiteState& state) {
  if (state.kind != StateKind::ClassicalClassical) {
    throw std::invalid_argument("closed form needs a cc state");
  }
  double acc = 0.0;
  for (Index r = 0; r < state.dim_r; ++r) {
    double best = 0.0;
    for (Index x = 0; x < state.dim_n; ++x) {
      best = std::max(best, state.rho(x * state.dim_r + r, x * state.dim_r + r).real());
    }
    acc += best;
  }
  return -std::log2(acc);
}

double pguess_helstrom(double p0, const Mat& rho0, double p1, const Mat& rho1) {
  return 0.5 * (1.0 + trace_norm(p0 * rho0 - p1 * rho1));
}

H2CondResult h2_cond(const BipartiteState& state) {
  const Mat rho_r = hermitian_part(state.marginal_r());
  if (rho_r.cwiseAbs().maxCoeff() <= 0.0) {
    throw std::invalid_argument("R marginal vanishes");
  }
  const Mat quarter = psd_power(rho_r, -0.25);
  const Mat half = psd_power(rho_r, -0.5);
  const Mat id_n = Mat::Identity(state.dim_n, state.dim_n);
  const Mat tq = kron(id_n, quarter);
  const Mat th = kron(id_n, half);
  H2CondResult out;
  out.tilde = tq * state.rho * tq;
  out.hat = th * state.rho * th;
  out.value = -std::log2(out.tilde.squaredNorm());
  return out;
}

double h2_q(const Mat& rho) { return -std::log2(rho.squaredNorm()); }

ClassicalState flat_source_classical(int n, int k,
                                     std::span<const Index> support) {
  check_power_of_two_sizes(n, k);
  const Index size = Index{1} << n;
  const Index cnt = Index{1} << k;
  if (std::ssize(support) != cnt) {
    throw std::invalid_argument("support must have exactly 2^k points");
  }
  RVec p = RVec::Zero(size);
  const double mass = std::ldexp(1.0, -k);
  for (Index idx : support) {
    if (idx < 0 || idx >= size) throw std::invalid_argument("support out of range");
    if (p[idx] != 0.0) throw std::invalid_argument("support points must be distinct");
    p[idx] = mass;
  }
  return ClassicalState(std::move(p));
}

ClassicalState flat_source_classical(int n, int k, Rng& rng) {
  check_power_of_two_sizes(n, k);
  const Index size = Index{1} << n;
  const Index cnt = Index{1} << k;
  // Partial Fisher-Yates for a uniform support sample.
  std::vector<Index> idx(static_cast<size_t>(size));
  std::iota(idx.begin(), idx.end(), Index{0});
  for (Index i = 0; i < cnt; ++i) {
    const auto j = i + static_cast<Index>(rng.uniform_int(
                           static_cast<std::uint64_t>(size - i)));
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  return flat_source_classical(n, k,
                               std::span<const Index>(idx.data(),
                                                      static_cast<size_t>(cnt)));
}

Mat flat_source_quantum(int n, int k, const Mat& eigenbasis) {
  check_power_of_two_sizes(n, k);
  const Index size = Index{1} << n;
  const Index cnt = Index{1} << k;
  if (eigenbasis.rows() != size || eigenbasis.cols() < cnt) {
    throw std::invalid_argument("eigenbasis shape mismatch");
  }
  const double mass = std::ldexp(1.0, -k);
  Mat rho = Mat::Zero(size, size);
  for (Index i = 0; i < cnt; ++i) {
    rho += mass * eigenbasis.col(i) * eigenbasis.col(i).adjoint();
  }
  return rho;
}

Mat flat_source_quantum(int n, int k, Rng& rng) {
  const Index size = Index{1} << n;
  return flat_source_quantum(n, k, haar_unitary(size, rng));
}

std::vector<FlatComponent> flat_decomposition(const ClassicalState& p, int k) {
  const Index size = p.size();
  if (size <= 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("alphabet must be a power of two");
  }
  const int n = static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(size)));
  check_power_of_two_sizes(n, k);
  if (hmin(p) < static_cast<double>(k) - 1e-9) {
    throw std::invalid_argument("source min-entropy below k");
  }
  const Index cnt = Index{1} << k;

  // Greedy peeling: repeatedly subtract a flat source on the currently
  // heaviest 2^k symbols with the largest weight that keeps the residual's
  // normalized max-probability <= 2^-k.
  RVec q = p.probs.cwiseMax(0.0);
  std::vector<FlatComponent> parts;
  std::vector<Index> order(static_cast<size_t>(size));
  const double pow2k = std::ldexp(1.0, k);
  const int max_iter = 8 * static_cast<int>(size) + 8;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double mass = q.sum();
    if (mass <= 1e-13) break;
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return q[a] > q[b]; });
    const double min_top = q[order[static_cast<size_t>(cnt - 1)]];
    const double max_rest =
        (cnt < size) ? q[order[static_cast<size_t>(cnt)]] : 0.0;
    double alpha =
        std::min({pow2k * min_top, mass - pow2k * max_rest, mass});
    if (alpha <= 0.0 || iter == max_iter - 1) {
      // Rounding endgame: a residual below re-mix precision is absorbed into
      // one final component; anything larger means a genuine stall.
      if (mass > 1e-11) throw std::runtime_error("flat decomposition stalled");
      alpha = mass;
    }
    std::vector<Index> support(order.begin(), order.begin() + cnt);
    std::sort(support.begin(), support.end());
    parts.push_back(
        {alpha, flat_source_classical(n, k, std::span<const Index>(support))});
    for (Index i = 0; i < cnt; ++i) {
      q[support[static_cast<size_t>(i)]] -= alpha / pow2k;
    }
    q = q.cwiseMax(0.0);
    if (alpha >= mass) break;
  }
  const double total =
      std::accumulate(parts.begin(), parts.end(), 0.0,
                      [](double acc, const FlatComponent& c) { return acc + c.weight; });
  for (auto& c : parts) c.weight /= total;
  return parts;
}

BipartiteState product_state(const Mat& rho_n, const Mat& rho_r,
                             StateKind kind) {
  return BipartiteState(kron(rho_n, rho_r), rho_n.rows(), rho_r.rows(), kind);
}

BipartiteState cq_state(const RVec& probs, const std::vector<Mat>& conditionals) {
  const Index dn = probs.size();
  if (std::ssize(conditionals) != dn || dn == 0) {
    throw std::invalid_argument("need one conditional per symbol");
  }
  const Index dr = conditionals.front().rows();
  Mat rho = Mat::Zero(dn * dr, dn * dr);
  for (Index x = 0; x < dn; ++x) {
    rho.block(x * dr, x * dr, dr, dr) =
        probs[x] * conditionals[static_cast<size_t>(x)];
  }
  return BipartiteState(std::move(rho), dn, dr, StateKind::ClassicalQuantum);
}

BipartiteState cc_state(const Eigen::MatrixXd& joint) {
  const Index dn = joint.rows();
  const Index dr = joint.cols();
  Mat rho = Mat::Zero(dn * dr, dn * dr);
  for (Index x = 0; x < dn; ++x) {
    for (Index r = 0; r < dr; ++r) {
      rho(x * dr + r, x * dr + r) = joint(x, r);
    }
  }
  return BipartiteState(std::move(rho), dn, dr, StateKind::ClassicalClassical);
}

BipartiteState maximally_entangled(Index dim) {
  Vec v = Vec::Zero(dim * dim);
  for (Index i = 0; i < dim; ++i) v[i * dim + i] = 1.0 / std::sqrt(dim);
  return BipartiteState(v * v.adjoint(), dim, dim, StateKind::QuantumQuantum);
}

BipartiteState random_bipartite(Index dim_n, Index dim_r, StateKind kind,
                                Rng& rng) {
  switch (kind) {
    case StateKind::QuantumQuantum:
      return BipartiteState(random_density(dim_n * dim_r, rng), dim_n, dim_r,
                            kind);
    case StateKind::ClassicalQuantum: {
      std::vector<Mat> cond;
      cond.reserve(static_cast<size_t>(dim_n));
      for (Index x = 0; x < dim_n; ++x) cond.push_back(random_density(dim_r, rng));
      return cq_state(random_probabilities(dim_n, rng), cond);
    }
    case StateKind::ClassicalClassical: {
      Eigen::MatrixXd joint(dim_n, dim_r);
      for (Index x = 0; x < dim_n; ++x) {
        for (Index r = 0; r < dim_r; ++r) joint(x, r) = std::abs(rng.gaussian());
      }
      joint /= joint.sum();
      return cc_state(joint);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace extractorlab
