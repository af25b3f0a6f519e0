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

#include <cstddef>
#include <vector>

#include "unikit/linalg.hpp"
#include "unikit/operator.hpp"
#include "unikit/sectors.hpp"

namespace unikit {

/// Restricted gate families: passive bosonic optics, passive fermionic
/// optics, active fermionic (Majorana-quadratic) optics.
enum class Family { kLOB, kLOF, kFLO };

const char* to_string(Family f);
Family parse_family(std::string_view text);

/// The family naturally attached to a sector kind.
Family family_for(SectorKind kind);

/// d^2 - 1 for LOB/LOF, d(2d - 1) for FLO.
std::size_t raw_family_dim(Family f, int modes);

/// Traceless Hermitian basis of su(d), orthonormal for the HS product:
/// off-diagonal symmetric and antisymmetric pairs, then the diagonal
/// Cartan elements.
std::vector<ComplexMatrix> gell_mann_basis(int d);

/// Lie algebra of a family represented on a sector.
struct LieAlgebraBasis {
  SectorDescriptor descriptor;
  Family family = Family::kLOB;
  /// HS-orthonormal traceless generators. The identity direction is kept
  /// apart and never appears here.
  HermitianBasis generators{1};
  /// Number of raw generators before orthonormalization.
  std::size_t raw_dim = 0;
  /// Images of the single-particle matrix units: for LOB/LOF entry k*d + l is
  /// a^dagger_k a_l; for FLO entry k*2d + l (k < l) is (i/2) m_k m_l.
  std::vector<ComplexMatrix> units;
  /// For LOB/LOF, images pi(b) of gell_mann_basis(d), in the same order.
  std::vector<ComplexMatrix> raw_images;

  std::size_t dim() const noexcept { return generators.size(); }
};

/// Throws kFamilyMismatch when the family does not act on the sector kind.
LieAlgebraBasis lie_basis(Family family, const SectorDescriptor& desc);

/// pi(h) on the sector. LOB/LOF: h is d x d Hermitian and the image is
/// sum h_kl a^dagger_k a_l. FLO: h is 2d x 2d real antisymmetric and the image
/// is sum_{k<l} h_kl (i/2) m_k m_l.
ComplexMatrix represent(const LieAlgebraBasis& basis, const ComplexMatrix& h);

/// exp(i pi(h)) on the sector.
Operator group_gate(const LieAlgebraBasis& basis, const ComplexMatrix& h);
Operator group_gate(Family family, const SectorDescriptor& desc, const ComplexMatrix& h);

/// Largest distance of V G V^dagger from span(generators, I) over the
/// orthonormal generators G. Requires V unitary.
double normalizer_residual(const ComplexMatrix& v, const LieAlgebraBasis& basis);
bool normalizes(const Operator& v, const LieAlgebraBasis& basis, double tol);

enum class AutomorphismType { kInner, kOuter };
const char* to_string(AutomorphismType t);

/// Inner/outer test for a normalizing V of passive fermionic optics at
/// half filling, via the spectrum of the recovered single-particle probe.
/// Throws kNotANormalizer when neither spectrum matches.
AutomorphismType automorphism_type(const Operator& v, const LieAlgebraBasis& basis);
AutomorphismType automorphism_type(const Operator& v, const SectorDescriptor& desc);

/// W = prod_i (f_i + f_i^dagger) = m_1 m_3 ... m_{2d-1} on a fermionic sector.
/// Throws kSectorViolation unless d = 2N.
Operator particle_hole_gate(const SectorDescriptor& desc);

}  // namespace unikit
