// Copyright 2026 The unikit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace unikit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Default relative threshold for real-span independence tests.
inline constexpr double kDefaultSpanTol = 1e-9;

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential of a square matrix. Throws on non-finite entries.
ComplexMatrix matexp(const ComplexMatrix& a);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// i[a, b]; Hermitian whenever a and b are.
ComplexMatrix icommutator(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_square(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

// Tolerances are relative to max(1, ||a||_F).
bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

double hs_norm(const ComplexMatrix& a);
/// Real Hilbert-Schmidt inner product Re tr(a^dagger b).
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Removes the identity component: a - (tr a / n) I.
ComplexMatrix traceless_part(const ComplexMatrix& a);

// Hermitian n x n matrices <-> R^{n^2} coordinates, isometric for the real
// Hilbert-Schmidt product. Layout: diagonal entries first, then for each
// i < j (row-major) sqrt(2) Re h_ij, sqrt(2) Im h_ij.
RealVector hermitian_coords(const ComplexMatrix& h);
ComplexMatrix hermitian_from_coords(const RealVector& coords, Eigen::Index n);

/// Orthonormal (real HS product) list of Hermitian matrices of fixed size.
///
/// Elements are kept both as matrices and as coordinate columns so that
/// projections reduce to dense real matrix-vector products.
class HermitianBasis {
 public:
  explicit HermitianBasis(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<ComplexMatrix>& elements() const noexcept {
    return elements_;
  }
  const ComplexMatrix& operator[](std::size_t i) const { return elements_[i]; }

  /// Coordinates of element i.
  Eigen::Map<const RealVector> coords(std::size_t i) const;
  /// All coordinate columns, dim()^2 x size().
  Eigen::Map<const RealMatrix> coord_matrix() const;

  /// Projects `candidate` off the span; appends the normalized residual when
  /// its norm exceeds tol * max(1, ||candidate||_HS). Returns acceptance.
  bool try_extend(const ComplexMatrix& candidate, double tol = kDefaultSpanTol);

  /// Coordinate-level variant used by the closure engine; `coords` must have
  /// length dim()^2 and `scale` is the HS norm of the unprojected candidate.
  bool try_extend_coords(RealVector coords, double scale, double tol);

  /// Distance from `h` to the span (HS norm of the projection residual).
  double residual(const ComplexMatrix& h) const;
  double residual_coords(const RealVector& coords) const;

  /// Orthogonal projection coefficients of `h` onto the elements.
  RealVector project(const ComplexMatrix& h) const;

 private:
  void append(const RealVector& unit);

  Eigen::Index dim_;
  Eigen::Index coord_len_;
  std::vector<ComplexMatrix> elements_;
  // Column-major storage, one column of length coord_len_ per element.
  std::vector<double> columns_;
};

/// Functional form: returns the (possibly) extended basis and acceptance flag.
/// Throws kNonHermitian for non-Hermitian candidates and kInvalidArgument on
/// dimension mismatch.
std::pair<HermitianBasis, bool> extend_orthobasis(HermitianBasis basis,
                                                  const ComplexMatrix& candidate,
                                                  double tol = kDefaultSpanTol);

}  // namespace unikit
