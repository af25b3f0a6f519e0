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

// Independent reference constructions used only by the tests. None of them
// call into the library code paths they are compared against.

#include <random>
#include <vector>

#include "unikit/linalg.hpp"
#include "unikit/sectors.hpp"

namespace unikit::oracle {

/// Truncated Taylor series with scaling and squaring.
ComplexMatrix taylor_exp(const ComplexMatrix& a);

/// f_k from Kronecker products Z (x) ... (x) Z (x) sigma^- (x) I (x) ... .
ComplexMatrix pauli_ladder(int k, int d, bool create);
ComplexMatrix pauli_majorana(int i, int d);

/// Sector basis by filtering all of {0..N}^d (or {0,1}^d) and sorting.
std::vector<Occupation> brute_force_basis(const SectorDescriptor& desc);

/// Sector -> (C^d)^{(x)N} isometry built by listing every tensor index and
/// grouping by mode counts (bosons) or by sorted support (fermions).
ComplexMatrix brute_force_isometry(const SectorDescriptor& desc);

/// T^dagger (e^{ih})^{(x)N} T via explicit tensor powers.
ComplexMatrix tensor_power_gate(const SectorDescriptor& desc, const ComplexMatrix& h);

/// psi_f from the sign of the shuffle (sorted X, sorted complement).
ComplexVector shuffle_psi_f(int particles);

/// Restriction of a 2^d operator to the listed Fock indices.
ComplexMatrix restrict_indices(const ComplexMatrix& full, const std::vector<std::uint64_t>& idx);

/// Orthonormal real basis (Hermitian coords) of {X Hermitian : X M + M X^T = 0}
/// where psi = vec(M).
std::vector<ComplexMatrix> annihilator_basis(const ComplexVector& psi, Eigen::Index n);

ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng);
ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng);
/// Random real antisymmetric 2d x 2d.
ComplexMatrix random_antisymmetric(int m, std::mt19937_64& rng);

/// Same sorted spectra up to tol.
bool same_spectrum(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace unikit::oracle
