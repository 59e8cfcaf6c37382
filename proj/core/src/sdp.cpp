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

#include "extractorlab/sdp.hpp"

#include <cmath>
#include <vector>

namespace extractorlab {

namespace {

// Orthonormal Hermitian basis of the dR x dR matrices under tr[AB].
std::vector<Mat> hermitian_basis(Index d) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<size_t>(d * d));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < d; ++i) {
    Mat b = Mat::Zero(d, d);
    b(i, i) = 1.0;
    basis.push_back(std::move(b));
  }
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      Mat b = Mat::Zero(d, d);
      b(i, j) = inv_sqrt2;
      b(j, i) = inv_sqrt2;
      basis.push_back(std::move(b));
      Mat c = Mat::Zero(d, d);
      c(i, j) = Complex(0.0, inv_sqrt2);
      c(j, i) = Complex(0.0, -inv_sqrt2);
      basis.push_back(std::move(c));
    }
  }
  return basis;
}

Mat lift(const Mat& sigma, Index dim_n) {
  return kron(Mat::Identity(dim_n, dim_n), sigma);
}

// log det via Cholesky; returns false when the argument is not positive
// definite.
bool logdet_if_pd(const Mat& s, double& out) {
  Eigen::LLT<Mat> llt(s);
  if (llt.info() != Eigen::Success) return false;
  double acc = 0.0;
  for (Index i = 0; i < s.rows(); ++i) {
    const double d = llt.matrixL()(i, i).real();
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    acc += std::log(d);
  }
  out = 2.0 * acc;
  return true;
}

}  // namespace

SdpCertificate solve_guessing_sdp(const Mat& rho, Index dim_n, Index dim_r,
                                  double gap_tol) {
  const Index dim = dim_n * dim_r;
  if (dim > 64) {
    throw DimensionError("guessing SDP limited to dim N * dim R <= 64");
  }
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("state dimension mismatch");
  }
  const Mat rho_h = hermitian_part(rho);

  const auto basis = hermitian_basis(dim_r);
  const size_t nb = basis.size();
  const auto nbi = static_cast<Index>(nb);
  Mat basis_cols(nbi, nbi);
  for (size_t a = 0; a < nb; ++a) {
    basis_cols.col(static_cast<Index>(a)) = vectorize(basis[a]);
  }

  // Strictly feasible start: sigma = (lambda_max(rho) + margin) * 1_R.
  const double top = lambda_max(rho_h);
  Mat sigma = (top + 0.25) * Mat::Identity(dim_r, dim_r);

  const double nu = static_cast<double>(dim);  // barrier parameter
  double t = 1.0;
  const double mu = 20.0;
  int total_newton = 0;

  const std::array<Index, 2> dims{dim_n, dim_r};
  const std::array<int, 1> keep_r{1};

  Mat slack = lift(sigma, dim_n) - rho_h;
  double logdet = 0.0;
  if (!logdet_if_pd(slack, logdet)) {
    throw SdpError("initial point infeasible", 0.0, 0);
  }

  const int max_outer = 64;
  for (int outer = 0; outer < max_outer; ++outer) {
    // Newton centering for  f(sigma) = t * tr[sigma] - log det(slack).
    for (int it = 0; it < 100; ++it) {
      ++total_newton;
      const Mat sinv = slack.llt().solve(Mat::Identity(dim, dim));
      const Mat grad_mat =
          t * Mat::Identity(dim_r, dim_r) - partial_trace(sinv, dims, keep_r);

      Eigen::VectorXd g(nb);
      for (size_t a = 0; a < nb; ++a) {
        g[static_cast<Index>(a)] = hs_inner(basis[a], grad_mat).real();
      }

      // Hessian H_ab = tr[S^-1 (1 (x) B_a) S^-1 (1 (x) B_b)]. In terms of the
      // N-blocks G(p,q) of S^-1 this is a small superoperator
      //   M = sum_{p,q} G(p,q)^T (x) G(q,p),   H = Re(B^dag M B)
      // with B the column matrix of vectorized basis elements, so assembly
      // costs dR^4 per block pair instead of two full-dimension products.
      Mat msup = Mat::Zero(nbi, nbi);
      for (Index p = 0; p < dim_n; ++p) {
        for (Index q = 0; q < dim_n; ++q) {
          msup.noalias() +=
              kron(sinv.block(p * dim_r, q * dim_r, dim_r, dim_r).transpose(),
                   sinv.block(q * dim_r, p * dim_r, dim_r, dim_r));
        }
      }
      Eigen::MatrixXd hess = (basis_cols.adjoint() * msup * basis_cols).real();
      hess = 0.5 * (hess + hess.transpose());

      const Eigen::VectorXd step = hess.ldlt().solve(-g);
      const double decrement = -0.5 * g.dot(step);
      if (!std::isfinite(decrement)) {
        throw SdpError("Newton step not finite", nu / t, total_newton);
      }

      Mat dir = Mat::Zero(dim_r, dim_r);
      for (size_t a = 0; a < nb; ++a) dir += step[static_cast<Index>(a)] * basis[a];

      // Backtracking line search keeping the slack positive definite.
      const double f0 = t * sigma.trace().real() - logdet;
      double s = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Mat cand = sigma + s * dir;
        const Mat cand_slack = lift(cand, dim_n) - rho_h;
        double cand_logdet = 0.0;
        if (logdet_if_pd(cand_slack, cand_logdet)) {
          const double f1 = t * cand.trace().real() - cand_logdet;
          if (f1 <= f0 - 0.25 * s * (-g.dot(step)) + 1e-14 * std::abs(f0)) {
            sigma = cand;
            slack = cand_slack;
            logdet = cand_logdet;
            moved = true;
            break;
          }
        }
        s *= 0.5;
      }
      if (!moved || decrement < 1e-13) break;
    }

    if (nu / t <= gap_tol) break;
    t *= mu;
    if (outer == max_outer - 1) {
      throw SdpError("barrier did not reach requested gap", nu / t,
                     total_newton);
    }
  }

  // Primal recovery: at the analytic center tr_N[S^{-1}] = t * 1_R, so
  // E = S^{-1} / t is nearly primal feasible. Congruence by the inverse
  // square root of its R-marginal makes tr_N E = 1_R hold to machine
  // precision while keeping E positive semidefinite exactly.
  SdpCertificate cert;
  const Mat sinv = slack.llt().solve(Mat::Identity(dim, dim));
  Mat primal = hermitian_part(sinv / t);
  const Mat marg = hermitian_part(partial_trace(primal, dims, keep_r));
  const Mat fix = kron(Mat::Identity(dim_n, dim_n), psd_power(marg, -0.5));
  primal = hermitian_part(fix * primal * fix);

  cert.dual_witness = hermitian_part(sigma);
  cert.primal_witness = primal;
  cert.dual_value = cert.dual_witness.trace().real();
  cert.primal_value = hs_inner(rho_h, primal).real();
  cert.gap = cert.dual_value - cert.primal_value;
  cert.dual_slack_min_eig =
      -lambda_max(-(lift(cert.dual_witness, dim_n) - rho_h));
  cert.primal_min_eig = -lambda_max(-primal);
  cert.primal_marginal_residual =
      (partial_trace(primal, dims, keep_r) - Mat::Identity(dim_r, dim_r))
          .cwiseAbs()
          .maxCoeff();
  cert.newton_iterations = total_newton;

  if (cert.gap < -1e-8 || cert.primal_min_eig < -1e-8) {
    throw SdpError("certificate verification failed", cert.gap, total_newton);
  }
  return cert;
}

}  // namespace extractorlab
