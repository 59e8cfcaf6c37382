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

#include "extractorlab/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace extractorlab {

CMatrix::CMatrix(Mat mat, std::vector<Index> f)
    : m(std::move(mat)), factors(std::move(f)) {
  if (!factors.empty()) {
    Index prod = 1;
    for (Index d : factors) {
      if (d < 1) throw std::invalid_argument("factor dimensions must be >= 1");
      prod *= d;
    }
    if (prod != m.rows() || prod != m.cols()) {
      throw std::invalid_argument(
          "factor dimensions do not multiply to the axis size");
    }
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out;
  out.m = kron(a.m, b.m);
  // Unlabeled operands contribute their full axis as a single factor, so the
  // product stays traceable.
  auto labels = [](const CMatrix& x) -> std::vector<Index> {
    if (x.labeled()) return x.factors;
    return {x.rows()};
  };
  out.factors = labels(a);
  const auto rhs = labels(b);
  out.factors.insert(out.factors.end(), rhs.begin(), rhs.end());
  return out;
}

Mat partial_trace(const Mat& m, std::span<const Index> dims,
                  std::span<const int> keep) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square input required");
  Index total = 1;
  for (Index d : dims) total *= d;
  if (total != m.rows()) {
    throw std::invalid_argument("dims do not multiply to the axis size");
  }
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> kept(nf, false);
  for (int k : keep) {
    if (k < 0 || k >= nf) throw std::invalid_argument("keep index out of range");
    kept[static_cast<size_t>(k)] = true;
  }

  // Strides of each factor in the flattened index (slow factor first).
  std::vector<Index> stride(nf, 1);
  for (int f = nf - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  Index dim_keep = 1, dim_tr = 1;
  std::vector<int> keep_order, tr_order;
  for (int f = 0; f < nf; ++f) {
    if (kept[f]) {
      dim_keep *= dims[f];
      keep_order.push_back(f);
    } else {
      dim_tr *= dims[f];
      tr_order.push_back(f);
    }
  }

  // Offset of combined kept (resp. traced) multi-index into the full index.
  auto offsets = [&](const std::vector<int>& order, Index count) {
    std::vector<Index> off(static_cast<size_t>(count), 0);
    for (Index x = 0; x < count; ++x) {
      Index rem = x, o = 0;
      for (size_t pos = 0; pos < order.size(); ++pos) {
        Index block = 1;
        for (size_t q = pos + 1; q < order.size(); ++q) block *= dims[order[q]];
        const Index digit = rem / block;
        rem %= block;
        o += digit * stride[order[pos]];
      }
      off[static_cast<size_t>(x)] = o;
    }
    return off;
  };
  const auto keep_off = offsets(keep_order, dim_keep);
  const auto tr_off = offsets(tr_order, dim_tr);

  Mat out = Mat::Zero(dim_keep, dim_keep);
  for (Index i = 0; i < dim_keep; ++i) {
    for (Index j = 0; j < dim_keep; ++j) {
      Complex acc = 0.0;
      for (Index t = 0; t < dim_tr; ++t) {
        acc += m(keep_off[i] + tr_off[t], keep_off[j] + tr_off[t]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, std::span<const int> keep) {
  if (!m.labeled()) {
    throw std::invalid_argument("partial_trace requires factor labels");
  }
  CMatrix out;
  out.m = partial_trace(m.m, m.factors, keep);
  for (int k : keep) out.factors.push_back(m.factors[static_cast<size_t>(k)]);
  return out;
}

Mat trace_out_second(const Mat& m, Index dim_a, Index dim_b) {
  const std::array<Index, 2> dims{dim_a, dim_b};
  const std::array<int, 1> keep{0};
  return partial_trace(m, dims, keep);
}

Mat trace_out_first(const Mat& m, Index dim_a, Index dim_b) {
  const std::array<Index, 2> dims{dim_a, dim_b};
  const std::array<int, 1> keep{1};
  return partial_trace(m, dims, keep);
}

EigenSystem hermitian_eigs(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square input required");
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver failed to converge");
  }
  const Index n = m.rows();
  EigenSystem sys;
  sys.values = solver.eigenvalues().reverse();
  sys.vectors.resize(n, n);
  for (Index i = 0; i < n; ++i) sys.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  return sys;
}

double lambda_max(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(m),
                                            Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

namespace {

RVec singular_values(const Mat& m) {
  // Hermitian inputs (the common case here) go through the symmetric
  // eigensolver, which is considerably faster than a general SVD.
  if (m.rows() == m.cols() && is_hermitian(m, 1e-13)) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs();
  }
  if (m.rows() > 32 || m.cols() > 32) {
    return m.bdcSvd().singularValues();
  }
  return m.jacobiSvd().singularValues();
}

}  // namespace

double trace_norm(const Mat& m) { return singular_values(m).sum(); }

double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return singular_values(m).maxCoeff();
}

double hs_norm(const Mat& m) { return m.norm(); }

Complex hs_inner(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

Mat swap_operator(Index dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  Mat f = Mat::Zero(dim * dim, dim * dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) f(j * dim + i, i * dim + j) = 1.0;
  }
  return f;
}

Mat hermitian_part(const Mat& m) { return 0.5 * (m + m.adjoint()); }

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Mat g = m.adjoint() * m;
  return (g - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Mat psd_power(const Mat& m, double exponent, double support_cut) {
  const EigenSystem sys = hermitian_eigs(m);
  const double top = std::max(sys.values.maxCoeff(), 0.0);
  const double cut = support_cut * top;
  const Index n = m.rows();
  RVec powered = RVec::Zero(n);
  for (Index i = 0; i < n; ++i) {
    const double v = sys.values[i];
    if (v > cut) powered[i] = std::pow(v, exponent);
  }
  return sys.vectors * powered.asDiagonal() * sys.vectors.adjoint();
}

Vec vectorize(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat devectorize(const Vec& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("size mismatch");
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

}  // namespace extractorlab
