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

#ifndef EXTRACTORLAB_MATRIX_HPP
#define EXTRACTORLAB_MATRIX_HPP

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace extractorlab {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when an operation would exceed the dense-kernel size limits.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense complex operator carrying an optional tensor factorization of its
/// (square) index space. `factors` multiply to the axis dimension; utilities
/// that trace out or address subsystems require them.
struct CMatrix {
  Mat m;
  std::vector<Index> factors;

  CMatrix() = default;
  CMatrix(Mat mat) : m(std::move(mat)) {}  // NOLINT: implicit by design
  CMatrix(Mat mat, std::vector<Index> f);

  Index rows() const { return m.rows(); }
  Index cols() const { return m.cols(); }
  bool labeled() const { return !factors.empty(); }
};

/// Kronecker product, first factor on the slow index.
Mat kron(const Mat& a, const Mat& b);

/// Kronecker product with concatenated factor labels.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Partial trace of a square operator over the factors *not* listed in
/// `keep`. `dims` is the tensor factorization of the axis (slow index first);
/// `keep` lists the factor positions to retain, in their original order.
Mat partial_trace(const Mat& m, std::span<const Index> dims,
                  std::span<const int> keep);

/// Labeled variant; throws std::invalid_argument when the input carries no
/// factor labels.
CMatrix partial_trace(const CMatrix& m, std::span<const int> keep);

/// Convenience for bipartite operators on A (dim_a, slow) x B.
Mat trace_out_second(const Mat& m, Index dim_a, Index dim_b);
Mat trace_out_first(const Mat& m, Index dim_a, Index dim_b);

/// Eigendecomposition of a Hermitian operator. The input is symmetrized as
/// (m + m^dagger)/2 before solving; eigenvalues come back descending with
/// matching eigenvector columns.
struct EigenSystem {
  RVec values;   // descending
  Mat vectors;   // column i pairs with values[i]
};
EigenSystem hermitian_eigs(const Mat& m);

/// Largest eigenvalue of a Hermitian operator (symmetrized first).
double lambda_max(const Mat& m);

/// Sum of singular values (unnormalized Schatten 1-norm).
double trace_norm(const Mat& m);

/// Largest singular value.
double operator_norm(const Mat& m);

/// Frobenius / Hilbert-Schmidt norm.
double hs_norm(const Mat& m);

/// Hilbert-Schmidt inner product tr[a^dagger b].
Complex hs_inner(const Mat& a, const Mat& b);

/// Swap operator F on C^dim (x) C^dim: F|ij> = |ji>.
Mat swap_operator(Index dim);

/// Hermitian part (m + m^dagger)/2.
Mat hermitian_part(const Mat& m);

bool is_hermitian(const Mat& m, double tol = 1e-10);
bool is_unitary(const Mat& m, double tol = 1e-10);

/// Fractional matrix power of a PSD operator, restricted to its support:
/// eigenvalues below `support_cut * lambda_max` are treated as exactly zero
/// (and stay zero for negative powers).
Mat psd_power(const Mat& m, double exponent, double support_cut = 1e-12);

/// Column-stacked vectorization and its inverse.
Vec vectorize(const Mat& m);
Mat devectorize(const Vec& v, Index rows, Index cols);

}  // namespace extractorlab

#endif  // EXTRACTORLAB_MATRIX_HPP
