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

#include "unikit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit {

const char* to_string(FormType f) {
  return f == FormType::kSymmetric ? "symmetric" : "antisymmetric";
}

Eigen::Index InvariantVector::sector_dim() const {
  return static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(psi.size()))));
}

namespace {

// Column-major view: element (r, c) is psi[r + c n], i.e. the transpose of
// the row-major pairing matrix. Every identity used below is invariant under
// that transpose.
Eigen::Map<const ComplexMatrix> as_matrix(const ComplexVector& psi, Eigen::Index n) {
  return Eigen::Map<const ComplexMatrix>(psi.data(), n, n);
}

InvariantVector finish(SectorDescriptor desc, ComplexVector psi) {
  const auto n = static_cast<Eigen::Index>(sector_dim(desc));
  InvariantVector out;
  out.descriptor = desc;
  out.norm = psi.norm();
  out.form_type = swap_form_type(psi, n);
  out.psi = std::move(psi);
  return out;
}

}  // namespace

FormType swap_form_type(const ComplexVector& psi, Eigen::Index n) {
  if (psi.size() != n * n) fail(ErrorCode::kInvalidArgument, "vector is not in H (x) H");
  const auto m = as_matrix(psi, n);
  const double nn = std::max(m.norm(), 1e-300);
  if ((m - m.transpose()).norm() <= 1e-12 * nn) return FormType::kSymmetric;
  if ((m + m.transpose()).norm() <= 1e-12 * nn) return FormType::kAntisymmetric;
  fail(ErrorCode::kInvalidArgument, "vector has no definite exchange symmetry");
}

InvariantVector psi_b(int particles) {
  if (particles < 1) fail(ErrorCode::kInvalidArgument, "psi_b needs N >= 1");
  const auto desc = SectorDescriptor::bosonic(2, particles);
  const SectorBasis basis(desc);
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (int k = 0; k <= particles; ++k) {
    const auto i = static_cast<Eigen::Index>(*basis.index_of({k, particles - k}));
    const auto j = static_cast<Eigen::Index>(*basis.index_of({particles - k, k}));
    psi(i * n + j) = (k % 2) ? -1.0 : 1.0;
  }
  return finish(desc, std::move(psi));
}

namespace {

ComplexVector psi_f_sgn(int particles) {
  const int d = 2 * particles;
  const auto desc = SectorDescriptor::fermionic(d, particles);
  const SectorBasis basis(desc);
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexVector psi = ComplexVector::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const Occupation& x = basis[static_cast<std::size_t>(i)];
    Occupation comp(x.size());
    int even_occupied = 0;
    for (int k = 0; k < d; ++k) {
      comp[k] = 1 - x[k];
      if ((k + 1) % 2 == 0) even_occupied += x[k];
    }
    const auto j = static_cast<Eigen::Index>(*basis.index_of(comp));
    psi(i * n + j) = (even_occupied % 2) ? -amp : amp;
  }
  return psi;
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace

ComplexVector psi_f_wedge(int particles) {
  if (particles < 1 || particles > 4) fail(ErrorCode::kInvalidArgument, "psi_f_wedge supports 1 <= N <= 4");
  const int d = 2 * particles;
  const auto desc = SectorDescriptor::fermionic(d, particles);
  const ComplexMatrix t = embedding_isometry(desc);
  const Eigen::Index n = t.cols();

  // Each tensor row of an antisymmetric embedding is supported on one column.
  std::vector<Eigen::Index> column_of(static_cast<std::size_t>(t.rows()), -1);
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::abs(t(r, c)) > 1e-14) {
        column_of[static_cast<std::size_t>(r)] = c;
        break;
      }
    }
  }

  ComplexVector psi = ComplexVector::Zero(n * n);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Eigen::Index r1 = 0;
    Eigen::Index r2 = 0;
    for (int k = 0; k < particles; ++k) {
      r1 = r1 * d + perm[static_cast<std::size_t>(k)];
      r2 = r2 * d + perm[static_cast<std::size_t>(k + particles)];
    }
    const Eigen::Index a = column_of[static_cast<std::size_t>(r1)];
    const Eigen::Index b = column_of[static_cast<std::size_t>(r2)];
    if (a < 0 || b < 0) continue;
    psi(a * n + b) += static_cast<double>(permutation_sign(perm)) * t(r1, a) * t(r2, b);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return psi / psi.norm();
}

InvariantVector psi_f(int particles) {
  if (particles < 1) fail(ErrorCode::kInvalidArgument, "psi_f needs N >= 1");
  ComplexVector psi = psi_f_sgn(particles);
  if (particles <= 4) {
    const ComplexVector w = psi_f_wedge(particles);
    const Complex overlap = psi.dot(w);
    const Complex phase = overlap / std::abs(overlap);
    if (!(std::abs(overlap) > 0.5) || (w - phase * psi).norm() > 1e-10) {
      fail(ErrorCode::kInvalidArgument, "psi_f: sign formula and wedge expansion disagree");
    }
  }
  return finish(SectorDescriptor::fermionic(2 * particles, particles), std::move(psi));
}

InvariantVector psi_flo(int modes) {
  if (modes < 2 || modes > 20) fail(ErrorCode::kInvalidArgument, "psi_flo needs 2 <= d <= 20");
  if (modes % 2 != 0) {
    fail(ErrorCode::kNoInvariantVector,
         "active fermionic optics has no invariant vector for odd d = " + std::to_string(modes));
  }
  const auto desc = SectorDescriptor::fock_plus(modes);
  const SectorBasis basis(desc);
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexVector psi = ComplexVector::Zero(n * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const Occupation& x = basis[static_cast<std::size_t>(i)];
    Occupation comp(x.size());
    int label_sum = 0;
    for (int k = 0; k < modes; ++k) {
      comp[k] = 1 - x[k];
      if (x[k]) label_sum += k + 1;
    }
    const auto j = static_cast<Eigen::Index>(*basis.index_of(comp));
    psi(i * n + j) = (label_sum % 2) ? -amp : amp;
  }
  return finish(desc, std::move(psi));
}

InvariantVector invariant_vector(const SectorDescriptor& desc) {
  desc.validate();
  switch (desc.kind) {
    case SectorKind::kBosonic:
      if (desc.modes == 2) return psi_b(desc.n());
      break;
    case SectorKind::kFermionic:
      if (desc.modes == 2 * desc.n()) return psi_f(desc.n());
      break;
    case SectorKind::kFockPlus:
      return psi_flo(desc.modes);
  }
  fail(ErrorCode::kNoInvariantVector, "no invariant vector on sector " + desc.to_string());
}

ComplexMatrix parity_projector(int modes, int sign) {
  const ComplexMatrix q = parity_op(modes);
  const ComplexMatrix id = ComplexMatrix::Identity(q.rows(), q.cols());
  return 0.5 * (id + (sign >= 0 ? 1.0 : -1.0) * q);
}

LFloProjector l_flo_product(int modes) {
  if (modes < 2 || modes > 4) fail(ErrorCode::kInvalidArgument, "l_flo_product supports 2 <= d <= 4");
  const int m = 2 * modes;
  std::vector<ComplexMatrix> maj;
  for (int i = 1; i <= m; ++i) maj.push_back(majorana(i, modes));
  const Eigen::Index big = Eigen::Index{1} << (2 * modes);
  const ComplexMatrix id = ComplexMatrix::Identity(big, big);
  auto factor = [&](int i, int j) {
    const ComplexMatrix mm = maj[static_cast<std::size_t>(i)] * maj[static_cast<std::size_t>(j)];
    return ComplexMatrix(0.5 * (id + kron(mm, mm)));
  };

  LFloProjector out;
  out.modes = modes;
  out.product = id;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out.product = (out.product * factor(i, j)).eval();
  }
  out.nearest_neighbour = id;
  for (int i = 0; i < modes; ++i) out.nearest_neighbour = (out.nearest_neighbour * factor(2 * i, 2 * i + 1)).eval();
  for (int i = 0; i < modes; ++i) {
    out.nearest_neighbour = (out.nearest_neighbour * factor(2 * i + 1, (2 * i + 2) % m)).eval();
  }

  const auto even = SectorBasis(SectorDescriptor::fock_plus(modes)).fock_indices();
  const auto n = static_cast<Eigen::Index>(even.size());
  const Eigen::Index full = Eigen::Index{1} << modes;
  out.restricted.resize(n * n, n * n);
  for (Eigen::Index a = 0; a < n * n; ++a) {
    const auto ra = static_cast<Eigen::Index>(even[a / n]) * full + static_cast<Eigen::Index>(even[a % n]);
    for (Eigen::Index b = 0; b < n * n; ++b) {
      const auto rb = static_cast<Eigen::Index>(even[b / n]) * full + static_cast<Eigen::Index>(even[b % n]);
      out.restricted(a, b) = out.product(ra, rb);
    }
  }
  return out;
}

double annihilation_residual(const ComplexMatrix& x, const InvariantVector& psi) {
  const Eigen::Index n = psi.sector_dim();
  if (x.rows() != n || x.cols() != n) fail(ErrorCode::kInvalidArgument, "operator dimension does not match the invariant vector");
  if (!all_finite(x)) fail(ErrorCode::kNonFinite, "operator has non-finite entries");
  if (!is_hermitian(x, 1e-10)) fail(ErrorCode::kNonHermitian, "annihilation_residual needs a Hermitian operator");
  const ComplexMatrix x0 = traceless_part(x);
  const auto m = as_matrix(psi.psi, n);
  return (x0 * m + m * x0.transpose()).norm() / m.norm();
}

double eigenvector_residual(const ComplexMatrix& v, const InvariantVector& psi) {
  const Eigen::Index n = psi.sector_dim();
  if (v.rows() != n || v.cols() != n) fail(ErrorCode::kInvalidArgument, "gate dimension does not match the invariant vector");
  if (!all_finite(v)) fail(ErrorCode::kNonFinite, "gate has non-finite entries");
  if (!is_unitary(v, 1e-9)) fail(ErrorCode::kNonUnitary, "eigenvector_residual needs a unitary gate");
  const auto m = as_matrix(psi.psi, n);
  const ComplexMatrix vm = v * m * v.transpose();
  const Complex overlap = (m.conjugate().cwiseProduct(vm)).sum();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return (vm - phase * m).norm() / m.norm();
}

}  // namespace unikit
