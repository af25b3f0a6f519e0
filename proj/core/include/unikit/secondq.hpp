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

#include "unikit/hamiltonian_spec.hpp"
#include "unikit/linalg.hpp"
#include "unikit/operator.hpp"
#include "unikit/sectors.hpp"

namespace unikit {

// Dense operators on the full 2^d fermionic Fock space. Basis index of
// |n_1 ... n_d> has n_1 as its most significant bit; the Jordan-Wigner
// string of mode k runs over modes j < k.

/// f_k (create = false) or f_k^dagger (create = true), 1 <= k <= d.
ComplexMatrix jw_ladder(int k, int d, bool create);

/// m_{2k-1} = f_k + f_k^dagger, m_{2k} = i (f_k - f_k^dagger), 1 <= i <= 2d.
ComplexMatrix majorana(int i, int d);

/// Q = (-1)^{sum_k n_k}, diagonal.
ComplexMatrix parity_op(int d);

/// Restricts a full Fock-space operator to a fermionic or fock_plus sector.
/// Throws kSectorViolation if it couples the sector to its complement.
ComplexMatrix restrict_to_sector(const ComplexMatrix& fock_op, const SectorDescriptor& desc,
                                 double tol = 1e-13);

/// Expands the factor products on the sector basis with no Hermiticity check.
/// Throws kInvalidToken for tokens not valid on the sector and
/// kSectorViolation if a term leaves the sector.
ComplexMatrix assemble_matrix(const HamiltonianSpec& spec, const SectorDescriptor& desc);

/// As assemble_matrix, then either replaces M by (M + M^dagger)/2 (hermitize)
/// or throws kNonHermitian.
Operator build_operator(const HamiltonianSpec& spec, const SectorDescriptor& desc,
                        bool hermitize = false);

/// Throws kInvalidToken if the token is not usable on the sector.
void check_token(const FactorToken& token, const SectorDescriptor& desc);

}  // namespace unikit
