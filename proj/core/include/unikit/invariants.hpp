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

#include "unikit/linalg.hpp"
#include "unikit/reps.hpp"
#include "unikit/sectors.hpp"

namespace unikit {

enum class FormType { kSymmetric, kAntisymmetric };
const char* to_string(FormType f);

/// Family-invariant vector in H (x) H. Entry i*n + j pairs sector basis states
/// i and j, where n is the sector dimension.
struct InvariantVector {
  SectorDescriptor descriptor;
  ComplexVector psi;
  double norm = 0.0;
  FormType form_type = FormType::kSymmetric;

  Eigen::Index sector_dim() const;
};

/// Sign of psi under the exchange of tensor factors. Throws unless psi is
/// exactly symmetric or antisymmetric to 1e-12.
FormType swap_form_type(const ComplexVector& psi, Eigen::Index n);

/// Two-mode bosons: sum_k (-1)^k |D_k> |D_{N-k}>, unnormalized (norm^2 = N+1).
InvariantVector psi_b(int particles);

/// Half-filled fermions, d = 2N: normalized sum over N-subsets X of
/// sgn(X) |X> |complement X>, sgn(X) = (-1)^{number of occupied even modes}.
/// For N <= 4 the first-quantized wedge expansion is built as well and
/// both must agree up to a global phase.
InvariantVector psi_f(int particles);

/// First-quantized route: e_1 ^ ... ^ e_{2N} split into two N-particle
/// blocks through embedding_isometry. N <= 4.
ComplexVector psi_f_wedge(int particles);

/// Even-parity Fock space with d even: 2^{-(d-1)/2} sum over even X of
/// (-1)^{sum of X} |X> |complement X>. Odd d throws kNoInvariantVector.
InvariantVector psi_flo(int modes);

/// Invariant vector for the family attached to the sector. Throws
/// kNoInvariantVector for regimes without one.
InvariantVector invariant_vector(const SectorDescriptor& desc);

struct LFloProjector {
  int modes = 0;
  /// Product over all pairs i < j of (I + m_i m_j (x) m_i m_j) / 2 on the
  /// 4^d space.
  ComplexMatrix product;
  /// Nearest-neighbour form with m_{2d+1} = m_1.
  ComplexMatrix nearest_neighbour;
  /// product restricted to fock_plus (x) fock_plus.
  ComplexMatrix restricted;
};

/// Memory guard: 2 <= d <= 4.
LFloProjector l_flo_product(int modes);

/// (1 +/- Q)/2 on the 2^d Fock space.
ComplexMatrix parity_projector(int modes, int sign);

/// ||(X0 (x) I + I (x) X0) psi|| / ||psi|| with X0 the traceless part of X.
double annihilation_residual(const ComplexMatrix& x, const InvariantVector& psi);

/// min over phi of ||(V (x) V) psi - e^{i phi} psi|| / ||psi||.
double eigenvector_residual(const ComplexMatrix& v, const InvariantVector& psi);

}  // namespace unikit
