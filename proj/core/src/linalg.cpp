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

#include "unikit/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unikit/error.hpp"

namespace unikit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidToken: return "invalid factor token";
    case ErrorCode::kSectorViolation: return "sector-violating operator";
    case ErrorCode::kNonHermitian: return "non-Hermitian operator";
    case ErrorCode::kNonUnitary: return "non-unitary operator";
    case ErrorCode::kNonFinite: return "non-finite input";
    case ErrorCode::kFamilyMismatch: return "family/sector mismatch";
    case ErrorCode::kNoInvariantVector: return "no invariant vector";
    case ErrorCode::kNotANormalizer: return "not a normalizer";
    case ErrorCode::kNumericalAmbiguity: return "numerically ambiguous";
    case ErrorCode::kOracleInconclusive: return "oracle inconclusive";
    case ErrorCode::kOracleScope: return "outside oracle scope";
    case ErrorCode::kCrossValidationMismatch: return "cross-validation mismatch";
    case ErrorCode::kInvalidScenario: return "invalid scenario";
  }
  return "unknown error";
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index j = 0; j < ac; ++j) {
    for (Eigen::Index i = 0; i < ar; ++i) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix matexp(const ComplexMatrix& a) {
  if (!is_square(a)) fail(ErrorCode::kInvalidArgument, "matexp: matrix is not square");
  if (!all_finite(a)) fail(ErrorCode::kNonFinite, "matexp: non-finite entry");
  if (a.rows() == 0) return a;
  return a.exp();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix icommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Complex(0.0, 1.0) * (a * b - b * a);
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols(); }

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  return (a - a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  const auto n = a.rows();
  return (a.adjoint() * a - ComplexMatrix::Identity(n, n)).norm() <=
         tol * std::max(1.0, a.norm());
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

ComplexMatrix traceless_part(const ComplexMatrix& a) {
  const auto n = a.rows();
  ComplexMatrix out = a;
  const Complex shift = a.trace() / static_cast<double>(n);
  out.diagonal().array() -= shift;
  return out;
}

RealVector hermitian_coords(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  RealVector c(n * n);
  const double s = std::sqrt(2.0);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) c[k++] = h(i, i).real();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      c[k++] = s * h(i, j).real();
      c[k++] = s * h(i, j).imag();
    }
  }
  return c;
}

ComplexMatrix hermitian_from_coords(const RealVector& coords, Eigen::Index n) {
  if (coords.size() != n * n) {
    fail(ErrorCode::kInvalidArgument, "hermitian_from_coords: length mismatch");
  }
  ComplexMatrix h(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = coords[k++];
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex v(s * coords[k], s * coords[k + 1]);
      k += 2;
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

HermitianBasis::HermitianBasis(Eigen::Index dim) : dim_(dim), coord_len_(dim * dim) {
  if (dim < 1) fail(ErrorCode::kInvalidArgument, "HermitianBasis: dim must be >= 1");
}

Eigen::Map<const RealMatrix> HermitianBasis::coord_matrix() const {
  return Eigen::Map<const RealMatrix>(columns_.data(), coord_len_,
                                      static_cast<Eigen::Index>(size()));
}

Eigen::Map<const RealVector> HermitianBasis::coords(std::size_t i) const {
  return Eigen::Map<const RealVector>(columns_.data() + i * coord_len_, coord_len_);
}

namespace {

// Two classical Gram-Schmidt passes against the stored columns.
void project_out(const std::vector<double>& columns, Eigen::Index len, std::size_t k,
                 RealVector& v) {
  if (k == 0) return;
  Eigen::Map<const RealMatrix> q(columns.data(), len, static_cast<Eigen::Index>(k));
  for (int pass = 0; pass < 2; ++pass) {
    const RealVector c = q.transpose() * v;
    v.noalias() -= q * c;
  }
}

}  // namespace

bool HermitianBasis::try_extend_coords(RealVector v, double scale, double tol) {
  if (v.size() != coord_len_) {
    fail(ErrorCode::kInvalidArgument, "HermitianBasis: coordinate length mismatch");
  }
  if (static_cast<Eigen::Index>(size()) >= coord_len_) return false;
  project_out(columns_, coord_len_, size(), v);
  const double r = v.norm();
  if (!(r > tol * std::max(1.0, scale))) return false;
  append(v / r);
  return true;
}

bool HermitianBasis::try_extend(const ComplexMatrix& candidate, double tol) {
  if (candidate.rows() != dim_ || candidate.cols() != dim_) {
    fail(ErrorCode::kInvalidArgument, "HermitianBasis: candidate dimension mismatch");
  }
  if (!all_finite(candidate)) fail(ErrorCode::kNonFinite, "HermitianBasis: non-finite candidate");
  if (!is_hermitian(candidate, std::max(tol, 1e-12))) {
    fail(ErrorCode::kNonHermitian, "HermitianBasis: candidate is not Hermitian");
  }
  return try_extend_coords(hermitian_coords(candidate), candidate.norm(), tol);
}

void HermitianBasis::append(const RealVector& unit) {
  columns_.insert(columns_.end(), unit.data(), unit.data() + unit.size());
  elements_.push_back(hermitian_from_coords(unit, dim_));
}

double HermitianBasis::residual_coords(const RealVector& coords) const {
  RealVector v = coords;
  project_out(columns_, coord_len_, size(), v);
  return v.norm();
}

double HermitianBasis::residual(const ComplexMatrix& h) const {
  if (h.rows() != dim_ || h.cols() != dim_) {
    fail(ErrorCode::kInvalidArgument, "HermitianBasis: dimension mismatch");
  }
  return residual_coords(hermitian_coords(h));
}

RealVector HermitianBasis::project(const ComplexMatrix& h) const {
  const RealVector v = hermitian_coords(h);
  if (empty()) return RealVector(0);
  Eigen::Map<const RealMatrix> q(columns_.data(), coord_len_,
                                 static_cast<Eigen::Index>(size()));
  return q.transpose() * v;
}

std::pair<HermitianBasis, bool> extend_orthobasis(HermitianBasis basis,
                                                  const ComplexMatrix& candidate,
                                                  double tol) {
  const bool accepted = basis.try_extend(candidate, tol);
  return {std::move(basis), accepted};
}

}  // namespace unikit
