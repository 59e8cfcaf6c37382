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

#include "extractorlab/quantum.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "extractorlab/io.hpp"

namespace extractorlab {

double UnitaryFamily::seed_bits() const {
  return std::log2(static_cast<double>(unitaries.size()));
}

void UnitaryFamily::validate() const {
  if (n < 0 || m < 0 || m > n || n > 10) {
    throw std::invalid_argument("invalid family sizes");
  }
  if (unitaries.empty()) throw std::invalid_argument("empty family");
  const Index dn = dim_n();
  for (const auto& u : unitaries) {
    if (u.rows() != dn || u.cols() != dn) {
      throw std::invalid_argument("member dimension mismatch");
    }
    if (!is_unitary(u, 1e-10)) {
      throw std::invalid_argument("member is not unitary to 1e-10");
    }
  }
}

Mat single_unitary_superop(const Mat& u, Index dim_m) {
  const Index dn = u.rows();
  if (dn % dim_m != 0) throw std::invalid_argument("output must divide input");
  const Index dt = dn / dim_m;
  Mat t = Mat::Zero(dim_m * dim_m, dn * dn);
  // tr_{N\M}[U rho U^dagger][a,b] = sum_t sum_{x,y} U(aT+t,x) rho(x,y)
  //                                  conj(U(bT+t,y));
  // with column-stacking, entry rho(x,y) sits at vec position y*|N|+x.
  for (Index a = 0; a < dim_m; ++a) {
    for (Index b = 0; b < dim_m; ++b) {
      const Index row = b * dim_m + a;
      for (Index tt = 0; tt < dt; ++tt) {
        const auto u1 = u.row(a * dt + tt);
        const auto u2 = u.row(b * dt + tt).conjugate();
        for (Index y = 0; y < dn; ++y) {
          t.row(row).segment(y * dn, dn) += u2[y] * u1;
        }
      }
    }
  }
  return t;
}

SuperopMatrix superop(const UnitaryFamily& fam) {
  fam.validate();
  if (fam.n > 4) {
    throw DimensionError("superoperator realization limited to n <= 4");
  }
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  const Index d = fam.count();
  const Index dim_out = dm * d;
  if (dim_out * dim_out > (Index{1} << 22) / (dn * dn)) {
    throw DimensionError("superoperator matrix too large; use the Gram path");
  }
  SuperopMatrix s;
  s.dim_in = dn;
  s.dim_out = dim_out;
  s.matrix = Mat::Zero(dim_out * dim_out, dn * dn);
  const double w = 1.0 / static_cast<double>(d);
  for (Index i = 0; i < d; ++i) {
    const Mat t = single_unitary_superop(fam.unitaries[static_cast<size_t>(i)], dm);
    // Block (A)_{a,b} (x) |i><i| lands at vec position
    // (b*|D|+i)*|M||D| + (a*|D|+i).
    for (Index a = 0; a < dm; ++a) {
      for (Index b = 0; b < dm; ++b) {
        const Index row = (b * d + i) * dim_out + (a * d + i);
        s.matrix.row(row) = w * t.row(b * dm + a);
      }
    }
  }
  return s;
}

Mat psi_gram_q(const UnitaryFamily& fam) {
  fam.validate();
  if (fam.n > 4) {
    throw DimensionError("Gram operator limited to n <= 4");
  }
  const Index dn = fam.dim_n();
  const Index d = fam.count();
  Mat gram = Mat::Zero(dn * dn, dn * dn);
  for (const auto& u : fam.unitaries) {
    const Mat t = single_unitary_superop(u, fam.dim_m());
    gram.noalias() += t.adjoint() * t;
  }
  gram /= static_cast<double>(d) * static_cast<double>(d);
  return gram;
}

Mat tau_gram_q(Index dim_n, Index dim_m, Index count_d) {
  const Vec vec_id = vectorize(Mat::Identity(dim_n, dim_n));
  return vec_id * vec_id.adjoint() /
         (static_cast<double>(dim_m) * static_cast<double>(count_d));
}

SpectralCertificate q_spectral_certificate(const UnitaryFamily& fam) {
  const Mat gram = psi_gram_q(fam);
  const Mat diff = gram - tau_gram_q(fam.dim_n(), fam.dim_m(), fam.count());
  SpectralCertificate cert;
  cert.lambda1_diff = lambda_max(diff);
  const EigenSystem sys = hermitian_eigs(gram);
  cert.lambda2_psi = sys.values.size() > 1 ? sys.values[1] : sys.values[0];
  // Unitary conjugation fixes the maximally mixed state, so every unitary
  // family maps uniform to uniform.
  cert.balanced = true;
  return cert;
}

namespace {

Mat hadamard_gate() {
  Mat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Mat phase_gate() {
  Mat s(2, 2);
  s << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  return s;
}

Mat cnot_gate() {
  Mat c = Mat::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(2, 3) = 1.0;
  c(3, 2) = 1.0;
  return c;
}

// Global phase fixed by making the first entry of magnitude > 0.3 real
// positive. Clifford entries have magnitude 0 or >= 1/2, so the threshold
// cannot misidentify the pivot.
Mat canonical_phase(const Mat& u) {
  for (Index r = 0; r < u.rows(); ++r) {
    for (Index c = 0; c < u.cols(); ++c) {
      const Complex z = u(r, c);
      if (std::abs(z) > 0.3) {
        return u * (std::conj(z) / std::abs(z));
      }
    }
  }
  throw std::logic_error("no pivot entry found");
}

std::string canonical_key(const Mat& u) {
  std::string key;
  key.reserve(static_cast<size_t>(u.size()) * 2 * sizeof(std::int64_t));
  const double grid = 67108864.0;  // 2^26
  for (Index c = 0; c < u.cols(); ++c) {
    for (Index r = 0; r < u.rows(); ++r) {
      const std::int64_t re = std::llround(u(r, c).real() * grid);
      const std::int64_t im = std::llround(u(r, c).imag() * grid);
      key.append(reinterpret_cast<const char*>(&re), sizeof(re));
      key.append(reinterpret_cast<const char*>(&im), sizeof(im));
    }
  }
  return key;
}

std::vector<Mat> clifford_closure(int n) {
  std::vector<Mat> gens;
  if (n == 1) {
    gens = {hadamard_gate(), phase_gate()};
  } else if (n == 2) {
    const Mat id2 = Mat::Identity(2, 2);
    gens = {kron(hadamard_gate(), id2), kron(id2, hadamard_gate()),
            kron(phase_gate(), id2), kron(id2, phase_gate()), cnot_gate()};
  } else {
    throw std::invalid_argument("Clifford enumeration supported for n <= 2");
  }
  const size_t expected = (n == 1) ? 24 : 11520;

  std::vector<Mat> members;
  std::unordered_set<std::string> seen;
  members.push_back(canonical_phase(Mat::Identity(Index{1} << n, Index{1} << n)));
  seen.insert(canonical_key(members.front()));
  for (size_t head = 0; head < members.size(); ++head) {
    const Mat u = members[head];  // copy: members may reallocate
    for (const auto& g : gens) {
      Mat v = canonical_phase(g * u);
      auto key = canonical_key(v);
      if (seen.insert(std::move(key)).second) {
        members.push_back(std::move(v));
        if (members.size() > 4 * expected) {
          throw std::runtime_error("group closure exceeded expected size");
        }
      }
    }
  }
  if (members.size() != expected) {
    throw std::runtime_error("group closure produced unexpected element count");
  }
  return members;
}

const std::vector<Mat>& cached_clifford(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::vector<Mat>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const char* dir = std::getenv("EXTRACTORLAB_CACHE");
  std::filesystem::path file;
  if (dir != nullptr && *dir != '\0') {
    file = std::filesystem::path(dir) /
           ("clifford" + std::to_string(n) + ".ufam");
    std::ifstream in(file);
    if (in.good()) {
      try {
        UnitaryFamily fam = read_unitary_family(in);
        if (fam.n == n && fam.count() == Index{(n == 1) ? 24 : 11520}) {
          return cache.emplace(n, std::move(fam.unitaries)).first->second;
        }
      } catch (const std::exception&) {
        // fall through to regeneration
      }
    }
  }

  std::vector<Mat> members = clifford_closure(n);
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (out.good()) {
      UnitaryFamily fam;
      fam.n = n;
      fam.m = n;
      fam.unitaries = members;
      write_unitary_family(out, fam);
    }
  }
  return cache.emplace(n, std::move(members)).first->second;
}

}  // namespace

UnitaryFamily clifford_family(int n, int m) {
  if (n < 1 || n > 2) {
    throw std::invalid_argument("Clifford family supported for n in {1, 2}");
  }
  if (m < 0 || m > n) throw std::invalid_argument("need 0 <= m <= n");
  UnitaryFamily fam;
  fam.n = n;
  fam.m = m;
  fam.unitaries = cached_clifford(n);
  return fam;
}

Mat prefix_swap_operator(int n, int m) {
  const Index dn = Index{1} << n;
  const Index dm = Index{1} << m;
  const Index dt = dn / dm;
  Mat k = Mat::Zero(dn * dn, dn * dn);
  // K |(b,s)>|(b',s')> = |(b',s)>|(b,s')> : swap only the M prefixes.
  for (Index b = 0; b < dm; ++b) {
    for (Index bp = 0; bp < dm; ++bp) {
      for (Index s = 0; s < dt; ++s) {
        for (Index sp = 0; sp < dt; ++sp) {
          const Index col = (b * dt + s) * dn + (bp * dt + sp);
          const Index row = (bp * dt + s) * dn + (b * dt + sp);
          k(row, col) = 1.0;
        }
      }
    }
  }
  return k;
}

Mat haar_moment_operator(int n, int m) {
  if (m > n || m < 0) throw std::invalid_argument("need 0 <= m <= n");
  const double dn = static_cast<double>(Index{1} << n);
  const double dm = static_cast<double>(Index{1} << m);
  if (dn <= 1.0) {
    throw std::invalid_argument("input dimension must exceed 1");
  }
  const double denom = dn * dn * dn - dn;
  const double c_id = (dn * dn * dn - dm * dm * dn) / denom / dm;
  const double c_swap = (dn * dn * dm * dm - dn * dn) / denom / dm;
  const Index d = Index{1} << n;
  return c_id * Mat::Identity(d * d, d * d) + c_swap * swap_operator(d);
}

double two_design_check(const UnitaryFamily& fam) {
  fam.validate();
  if (fam.n > 2) throw DimensionError("design check limited to n <= 2");
  const Index d = fam.dim_n();
  const Index dd = d * d;

  // Supermatrix of the family's 2-fold twirl M -> avg U(x)U M (U(x)U)^dag.
  Mat twirl = Mat::Zero(dd * dd, dd * dd);
  for (const auto& u : fam.unitaries) {
    const Mat w = kron(u, u);
    twirl.noalias() += kron(w.conjugate(), w);
  }
  twirl /= static_cast<double>(fam.count());

  const Mat f = swap_operator(d);
  // Gram system for projecting onto span{1, F}.
  const double g11 = static_cast<double>(dd);
  const double g12 = static_cast<double>(d);
  const double det = g11 * g11 - g12 * g12;

  double worst = 0.0;
  for (Index c = 0; c < dd; ++c) {
    for (Index r = 0; r < dd; ++r) {
      const Mat twirled = devectorize(twirl.col(c * dd + r), dd, dd);
      const Complex tr_e = (r == c) ? 1.0 : 0.0;
      const Complex tr_fe = f(c, r);
      const Complex x = (g11 * tr_e - g12 * tr_fe) / det;
      const Complex y = (g11 * tr_fe - g12 * tr_e) / det;
      Mat haar = y * f;
      haar.diagonal().array() += x;
      worst = std::max(worst, operator_norm(twirled - haar));
    }
  }
  return worst;
}

MomentEstimate haar_moment_monte_carlo(int n, int m, int samples, Rng& rng) {
  const Index d = Index{1} << n;
  const Mat k = prefix_swap_operator(n, m);
  Mat sum = Mat::Zero(d * d, d * d);
  Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int s = 0; s < samples; ++s) {
    const Mat u = haar_unitary(d, rng);
    const Mat v = kron(u, u);
    const Mat term = v.adjoint() * k * v;
    sum += term;
    sum_sq += term.cwiseAbs2();
  }
  MomentEstimate est;
  est.mean = sum / static_cast<double>(samples);
  // Entrywise variance of the complex samples; SE of the mean.
  Eigen::MatrixXd var =
      sum_sq / static_cast<double>(samples) - est.mean.cwiseAbs2();
  est.standard_error =
      (var.cwiseMax(0.0) / static_cast<double>(samples)).cwiseSqrt();
  return est;
}

double decoupling_error(const UnitaryFamily& fam, const Mat& rho_nr,
                        Index dim_r, Mode mode) {
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  const Index dt = fam.dim_traced();
  const Index d = fam.count();
  if (rho_nr.rows() != dn * dim_r) {
    throw std::invalid_argument("state dimension mismatch");
  }
  if (dn * dim_r > (Index{1} << 10)) {
    throw DimensionError("total dimension limited to 2^10");
  }
  const Mat id_r = Mat::Identity(dim_r, dim_r);
  const Mat rho_r = (dim_r == 1)
                        ? Mat::Identity(1, 1) * rho_nr.trace()
                        : trace_out_first(rho_nr, dn, dim_r);
  const Mat target =
      kron(Mat::Identity(dm, dm) / static_cast<double>(dm), rho_r);
  const std::array<Index, 3> dims{dm, dt, dim_r};
  const std::array<int, 2> keep{0, 2};

  const double dd = static_cast<double>(d);
  if (mode == Mode::Strong) {
    // Block diagonal over the seed register: the trace norm is the average
    // of the per-seed trace norms.
    double err = 0.0;
    for (const auto& u : fam.unitaries) {
      const Mat w = kron(u, id_r);
      const Mat moved = w * rho_nr * w.adjoint();
      err += trace_norm(partial_trace(moved, dims, keep) - target);
    }
    return err / dd;
  }
  Mat avg = Mat::Zero(dm * dim_r, dm * dim_r);
  for (const auto& u : fam.unitaries) {
    const Mat w = kron(u, id_r);
    const Mat moved = w * rho_nr * w.adjoint();
    avg += partial_trace(moved, dims, keep) / dd;
  }
  return trace_norm(avg - target);
}

double decoupling_error(const UnitaryFamily& fam, const BipartiteState& rho,
                        Mode mode) {
  return decoupling_error(fam, rho.rho, rho.dim_r, mode);
}

namespace {

// (scale) * U1^dagger diag(1 on the first `support` basis states) U1.
Mat rotated_flat_state(const Mat& u1, Index support, double scale) {
  const Index dn = u1.rows();
  Mat gamma = Mat::Zero(dn, dn);
  for (Index i = 0; i < support; ++i) {
    gamma.noalias() += scale * u1.row(i).adjoint() * u1.row(i);
  }
  return hermitian_part(gamma);
}

}  // namespace

SingleSeedWitness single_seed_witness(const UnitaryFamily& fam) {
  if (fam.m < 1) throw std::invalid_argument("witness needs m >= 1");
  fam.validate();
  const Index dn = fam.dim_n();
  const Index dt = fam.dim_traced();
  const Index half = (fam.dim_m() / 2) * dt;  // |S| * |N|/|M| = |N|/2

  SingleSeedWitness w;
  w.state = rotated_flat_state(fam.unitaries.front(), half,
                               2.0 / static_cast<double>(dn));
  UnitaryFamily first;
  first.n = fam.n;
  first.m = fam.m;
  first.mode = Mode::Weak;
  first.unitaries = {fam.unitaries.front()};
  w.single_seed_error = decoupling_error(first, w.state, Index{1}, Mode::Weak);
  w.family_error = decoupling_error(fam, w.state, Index{1}, Mode::Strong);
  w.hmin = hmin_q(w.state);
  return w;
}

QSpectralLowerBoundWitness spectral_lower_bound_witness(
    const UnitaryFamily& fam, int k) {
  if (k > fam.n) throw std::invalid_argument("k cannot exceed n");
  fam.validate();
  const Index dn = fam.dim_n();
  const Index dm = fam.dim_m();
  const Index dt = fam.dim_traced();
  const auto support_m = static_cast<Index>(
      std::ceil(std::exp2(k) * static_cast<double>(dm) / static_cast<double>(dn)));
  if (support_m < 1 || support_m > dm) {
    throw std::invalid_argument("infeasible image support");
  }

  QSpectralLowerBoundWitness w;
  w.image_support = support_m;
  const double scale =
      static_cast<double>(dm) /
      (static_cast<double>(support_m) * static_cast<double>(dn));
  w.state = rotated_flat_state(fam.unitaries.front(), support_m * dt, scale);
  const double s = static_cast<double>(support_m);
  const double dd = static_cast<double>(fam.count());
  const double inv_m = 1.0 / static_cast<double>(dm);
  w.formula_bound =
      std::exp2(k) / (dd * dd) * s * (1.0 / s - inv_m) * (1.0 / s - inv_m);
  w.h2 = h2_q(w.state);
  return w;
}

ShortSeedReport shortseed_experiment(int n, int k, int m, int t, int trials,
                                     std::uint64_t seed) {
  if (n < 1 || n > 6) throw std::invalid_argument("need 1 <= n <= 6");
  if (k < 0 || k > n || m < 0 || m > n) throw std::invalid_argument("bad k or m");
  if (t < 1 || t > 256) throw std::invalid_argument("need 1 <= t <= 256");
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");

  Rng root(seed);
  Rng family_rng = root.split(0);
  UnitaryFamily fam;
  fam.n = n;
  fam.m = m;
  fam.mode = Mode::Strong;
  const Index dn = Index{1} << n;
  fam.unitaries.reserve(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) fam.unitaries.push_back(haar_unitary(dn, family_rng));

  ShortSeedReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = m;
  rep.t = t;
  rep.trials = trials;
  rep.seed = seed;
  rep.trial_errors.resize(static_cast<size_t>(trials));
  for (int j = 0; j < trials; ++j) {
    Rng trial_rng = root.split(1 + static_cast<std::uint64_t>(j));
    const Mat rho = flat_source_quantum(n, k, trial_rng);
    rep.trial_errors[static_cast<size_t>(j)] =
        decoupling_error(fam, rho, Index{1}, Mode::Strong);
  }
  rep.max_error = 0.0;
  double acc = 0.0;
  for (double e : rep.trial_errors) {
    rep.max_error = std::max(rep.max_error, e);
    acc += e;
  }
  rep.mean_error = rep.trial_errors.empty()
                       ? 0.0
                       : acc / static_cast<double>(rep.trial_errors.size());
  const double dm = std::exp2(m);
  const double dn_d = std::exp2(n);
  rep.reference_epsilon = dm * dm * std::exp2(-k) / dn_d;
  rep.reference_mean_error = dm / std::sqrt(dn_d * std::exp2(k));
  return rep;
}

}  // namespace extractorlab
