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

#include "extractorlab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "extractorlab/gf2.hpp"

namespace extractorlab {

double FunctionFamily::seed_bits() const {
  return std::log2(static_cast<double>(tables.size()));
}

void FunctionFamily::validate() const {
  if (n < 0 || m < 0 || m > n || n > 16) {
    throw std::invalid_argument("invalid family sizes");
  }
  if (tables.empty()) throw std::invalid_argument("empty family");
  const auto size = static_cast<size_t>(dim_n());
  const auto out_limit = static_cast<std::uint16_t>(dim_m());
  for (const auto& t : tables) {
    if (t.size() != size) throw std::invalid_argument("table length mismatch");
    for (std::uint16_t y : t) {
      if (y >= out_limit) throw std::invalid_argument("output symbol out of range");
    }
  }
  if (permutation_based && m == n) {
    std::vector<bool> seen(size);
    for (const auto& t : tables) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::uint16_t y : t) {
        if (seen[y]) throw std::invalid_argument("member is not a bijection");
        seen[y] = true;
      }
    }
  }
}

Eigen::MatrixXd psi_matrix(const FunctionFamily& fam) {
  const Index dn = fam.dim_n();
  const Index d = fam.count();
  const double w = 1.0 / static_cast<double>(d);
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(fam.dim_m() * d, dn);
  for (Index i = 0; i < d; ++i) {
    const auto& t = fam.tables[static_cast<size_t>(i)];
    for (Index x = 0; x < dn; ++x) {
      psi(static_cast<Index>(t[static_cast<size_t>(x)]) * d + i, x) += w;
    }
  }
  return psi;
}

Eigen::MatrixXd tau_matrix(Index dim_n, Index dim_m, Index count_d) {
  const double w = 1.0 / static_cast<double>(dim_m * count_d);
  return Eigen::MatrixXd::Constant(dim_m * count_d, dim_n, w);
}

Eigen::MatrixXd psi_gram(const FunctionFamily& fam) {
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  const Index d = fam.count();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dn, dn);
  std::vector<std::vector<Index>> buckets(static_cast<size_t>(dm));
  for (Index i = 0; i < d; ++i) {
    for (auto& b : buckets) b.clear();
    const auto& t = fam.tables[static_cast<size_t>(i)];
    for (Index x = 0; x < dn; ++x) {
      buckets[t[static_cast<size_t>(x)]].push_back(x);
    }
    for (const auto& b : buckets) {
      for (Index x : b) {
        for (Index y : b) gram(x, y) += 1.0;
      }
    }
  }
  gram /= static_cast<double>(d) * static_cast<double>(d);
  return gram;
}

namespace {

bool family_balanced(const FunctionFamily& fam) {
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  if (dn % dm != 0) return false;
  const Index even = dn / dm;
  std::vector<Index> counts(static_cast<size_t>(dm));
  for (const auto& t : fam.tables) {
    std::fill(counts.begin(), counts.end(), Index{0});
    for (std::uint16_t y : t) ++counts[y];
    for (Index c : counts) {
      if (c != even) return false;
    }
  }
  return true;
}

}  // namespace

SpectralCertificate spectral_certificate(const FunctionFamily& fam) {
  if (fam.dim_n() > (Index{1} << 10)) {
    throw DimensionError("spectral certificate limited to 2^n <= 2^10");
  }
  const Eigen::MatrixXd gram = psi_gram(fam);
  const double tau_entry =
      1.0 / (static_cast<double>(fam.dim_m()) * static_cast<double>(fam.count()));
  const Eigen::MatrixXd diff =
      gram - Eigen::MatrixXd::Constant(fam.dim_n(), fam.dim_n(), tau_entry);

  SpectralCertificate cert;
  cert.lambda1_diff = lambda_max(diff.cast<Complex>());
  const EigenSystem sys = hermitian_eigs(gram.cast<Complex>());
  cert.lambda2_psi = sys.values.size() > 1 ? sys.values[1] : sys.values[0];
  cert.balanced = family_balanced(fam);
  return cert;
}

FunctionFamily hash_family(int n, int m) {
  if (n < 1 || n > kGf2MaxBits || m < 0 || m > n) {
    throw std::invalid_argument("hash family needs 1 <= n <= 12, 0 <= m <= n");
  }
  const Index dn = Index{1} << n;
  FunctionFamily fam;
  fam.n = n;
  fam.m = m;
  fam.mode = Mode::Strong;
  fam.tables.reserve(static_cast<size_t>(dn));
  const int shift = n - m;
  // a = 0 gives the constant map; keep it but order it last so that the
  // leading member is the truncated identity.
  for (Index a = 1; a <= dn; ++a) {
    const auto aa = static_cast<std::uint32_t>(a % dn);
    std::vector<std::uint16_t> t(static_cast<size_t>(dn));
    for (Index x = 0; x < dn; ++x) {
      const std::uint32_t prod = gf2_mul(n, aa, static_cast<std::uint32_t>(x));
      t[static_cast<size_t>(x)] = static_cast<std::uint16_t>(prod >> shift);
    }
    fam.tables.push_back(std::move(t));
  }
  return fam;
}

FunctionFamily pairwise_permutations(int n) {
  if (n < 1 || n > kGf2MaxBits) {
    throw std::invalid_argument("pairwise permutations need 1 <= n <= 12");
  }
  const Index dn = Index{1} << n;
  FunctionFamily fam;
  fam.n = n;
  fam.m = n;
  fam.mode = Mode::Strong;
  fam.permutation_based = true;
  fam.tables.reserve(static_cast<size_t>(dn * (dn - 1)));
  for (Index a = 1; a < dn; ++a) {
    for (Index b = 0; b < dn; ++b) {
      std::vector<std::uint16_t> t(static_cast<size_t>(dn));
      for (Index x = 0; x < dn; ++x) {
        const std::uint32_t y =
            gf2_mul(n, static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(x)) ^
            static_cast<std::uint32_t>(b);
        t[static_cast<size_t>(x)] = static_cast<std::uint16_t>(y);
      }
      fam.tables.push_back(std::move(t));
    }
  }
  return fam;
}

FunctionFamily restrict_output(const FunctionFamily& fam, int m) {
  if (m < 0 || m > fam.m) throw std::invalid_argument("cannot widen outputs");
  FunctionFamily out = fam;
  out.m = m;
  const int shift = fam.m - m;
  for (auto& t : out.tables) {
    for (auto& y : t) y = static_cast<std::uint16_t>(y >> shift);
  }
  return out;
}

CollisionStats two_universal_check(const FunctionFamily& fam) {
  const Index dn = fam.dim_n();
  if (dn > (Index{1} << 12)) {
    throw DimensionError("collision check limited to 2^n <= 2^12");
  }
  Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic> counts =
      Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(dn, dn);
  std::vector<std::vector<Index>> buckets(static_cast<size_t>(fam.dim_m()));
  for (const auto& t : fam.tables) {
    for (auto& b : buckets) b.clear();
    for (Index x = 0; x < dn; ++x) buckets[t[static_cast<size_t>(x)]].push_back(x);
    for (const auto& b : buckets) {
      for (size_t p = 0; p < b.size(); ++p) {
        for (size_t q = p + 1; q < b.size(); ++q) ++counts(b[p], b[q]);
      }
    }
  }
  CollisionStats stats;
  stats.family_size = static_cast<std::int64_t>(fam.count());
  for (Index j = 0; j < dn; ++j) {
    for (Index k = j + 1; k < dn; ++k) {
      if (counts(j, k) > stats.worst_count) {
        stats.worst_count = counts(j, k);
        stats.worst_j = j;
        stats.worst_k = k;
      }
    }
  }
  return stats;
}

double extraction_error(const FunctionFamily& fam, const ClassicalState& p,
                        Mode mode) {
  if (p.size() != fam.dim_n()) throw std::invalid_argument("alphabet mismatch");
  const Index dm = fam.dim_m();
  const Index d = fam.count();
  const double dd = static_cast<double>(d);
  if (mode == Mode::Strong) {
    double err = 0.0;
    const double target = 1.0 / (static_cast<double>(dm) * dd);
    for (Index i = 0; i < d; ++i) {
      const auto& t = fam.tables[static_cast<size_t>(i)];
      RVec q = RVec::Zero(dm);
      for (Index x = 0; x < fam.dim_n(); ++x) {
        q[t[static_cast<size_t>(x)]] += p.probs[x];
      }
      for (Index y = 0; y < dm; ++y) err += std::abs(q[y] / dd - target);
    }
    return err;
  }
  RVec q = RVec::Zero(dm);
  for (const auto& t : fam.tables) {
    for (Index x = 0; x < fam.dim_n(); ++x) {
      q[t[static_cast<size_t>(x)]] += p.probs[x] / dd;
    }
  }
  const double target = 1.0 / static_cast<double>(dm);
  double err = 0.0;
  for (Index y = 0; y < dm; ++y) err += std::abs(q[y] - target);
  return err;
}

double quantum_proof_error(const FunctionFamily& fam, const BipartiteState& rho,
                           Mode mode) {
  if (rho.kind == StateKind::QuantumQuantum) {
    throw std::invalid_argument("input must be classical on N");
  }
  if (rho.dim_n != fam.dim_n()) throw std::invalid_argument("alphabet mismatch");
  if (rho.dim_n * rho.dim_r > (Index{1} << 10)) {
    throw DimensionError("total dimension limited to 2^10");
  }
  const Index dm = fam.dim_m();
  const Index d = fam.count();
  const Index dr = rho.dim_r;
  const double dd = static_cast<double>(d);

  std::vector<Mat> blocks(static_cast<size_t>(rho.dim_n));
  for (Index x = 0; x < rho.dim_n; ++x) blocks[static_cast<size_t>(x)] = rho.conditional_block(x);
  const Mat rho_r = rho.marginal_r();

  // The displayed operator is block diagonal over (output symbol, seed) in
  // strong mode and over the output symbol alone in weak mode, so its trace
  // norm is a sum of small-block trace norms.
  if (mode == Mode::Strong) {
    double err = 0.0;
    const Mat target = rho_r / (static_cast<double>(dm) * dd);
    for (Index i = 0; i < d; ++i) {
      const auto& t = fam.tables[static_cast<size_t>(i)];
      std::vector<Mat> agg(static_cast<size_t>(dm), Mat::Zero(dr, dr));
      for (Index x = 0; x < fam.dim_n(); ++x) {
        agg[t[static_cast<size_t>(x)]] += blocks[static_cast<size_t>(x)];
      }
      for (Index y = 0; y < dm; ++y) {
        err += trace_norm(agg[static_cast<size_t>(y)] / dd - target);
      }
    }
    return err;
  }
  std::vector<Mat> agg(static_cast<size_t>(dm), Mat::Zero(dr, dr));
  for (const auto& t : fam.tables) {
    for (Index x = 0; x < fam.dim_n(); ++x) {
      agg[t[static_cast<size_t>(x)]] += blocks[static_cast<size_t>(x)] / dd;
    }
  }
  const Mat target = rho_r / static_cast<double>(dm);
  double err = 0.0;
  for (Index y = 0; y < dm; ++y) {
    err += trace_norm(agg[static_cast<size_t>(y)] - target);
  }
  return err;
}

SpectralLowerBoundWitness spectral_lower_bound_witness(const FunctionFamily& fam,
                                                       int k) {
  if (k < 0 || k > fam.n) throw InfeasibleWitness("k out of range");
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  const Index cnt = Index{1} << k;
  const auto want_support = static_cast<Index>(
      std::ceil(static_cast<double>(cnt) * static_cast<double>(dm) /
                static_cast<double>(dn)));

  // Preimage buckets of the first member, largest first.
  const auto& f1 = fam.tables.front();
  std::vector<std::vector<Index>> buckets(static_cast<size_t>(dm));
  for (Index x = 0; x < dn; ++x) buckets[f1[static_cast<size_t>(x)]].push_back(x);
  std::vector<Index> order(static_cast<size_t>(dm));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return buckets[static_cast<size_t>(a)].size() > buckets[static_cast<size_t>(b)].size();
  });

  if (want_support > dm) throw InfeasibleWitness("image support exceeds |M|");
  std::vector<Index> chosen(order.begin(), order.begin() + want_support);
  Index capacity = 0;
  for (Index y : chosen) capacity += std::ssize(buckets[static_cast<size_t>(y)]);
  if (capacity < cnt ||
      buckets[static_cast<size_t>(chosen.back())].empty()) {
    throw InfeasibleWitness("first member's preimages cannot host the source");
  }

  // Spread the 2^k points as evenly as the preimage sizes allow.
  std::vector<Index> take(static_cast<size_t>(want_support), 0);
  Index assigned = 0;
  for (size_t j = 0; j < take.size(); ++j) {
    take[j] = 1;
    ++assigned;
  }
  while (assigned < cnt) {
    bool progress = false;
    for (size_t j = 0; j < take.size() && assigned < cnt; ++j) {
      const auto cap = std::ssize(buckets[static_cast<size_t>(chosen[j])]);
      if (take[j] < cap) {
        ++take[j];
        ++assigned;
        progress = true;
      }
    }
    if (!progress) throw InfeasibleWitness("preimage capacity exhausted");
  }

  std::vector<Index> support;
  support.reserve(static_cast<size_t>(cnt));
  for (size_t j = 0; j < take.size(); ++j) {
    const auto& b = buckets[static_cast<size_t>(chosen[j])];
    for (Index q = 0; q < take[j]; ++q) support.push_back(b[static_cast<size_t>(q)]);
  }
  std::sort(support.begin(), support.end());

  SpectralLowerBoundWitness w;
  w.source = flat_source_classical(fam.n, k, support);
  w.image_support = want_support;
  const double s = static_cast<double>(want_support);
  const double dd = static_cast<double>(fam.count());
  const double inv_m = 1.0 / static_cast<double>(dm);
  w.formula_bound =
      std::exp2(k) / (dd * dd) * s * (1.0 / s - inv_m) * (1.0 / s - inv_m);

  const Eigen::MatrixXd gram = psi_gram(fam);
  const double tau_entry = 1.0 / (static_cast<double>(dm) * dd);
  const RVec& q = w.source.probs;
  const double sum_q = q.sum();
  w.quadratic_form =
      std::exp2(k) *
      (q.dot(gram * q) - tau_entry * sum_q * sum_q);
  return w;
}

}  // namespace extractorlab
