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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unikit/linalg.hpp"

namespace unikit {

enum class SectorKind { kBosonic, kFermionic, kFockPlus };

const char* to_string(SectorKind kind);

/// Which Hilbert space an operator lives on: N bosons or N fermions in d
/// modes, or the even-parity fermionic Fock space over d modes.
struct SectorDescriptor {
  SectorKind kind = SectorKind::kBosonic;
  int modes = 1;
  std::optional<int> particles;

  static SectorDescriptor bosonic(int d, int n) { return {SectorKind::kBosonic, d, n}; }
  static SectorDescriptor fermionic(int d, int n) { return {SectorKind::kFermionic, d, n}; }
  static SectorDescriptor fock_plus(int d) { return {SectorKind::kFockPlus, d, std::nullopt}; }

  /// Throws kInvalidArgument when the invariants do not hold.
  void validate() const;

  /// "bosonic:2:4", "fermionic:6:3", "fock_plus:4".
  std::string to_string() const;
  static SectorDescriptor parse(std::string_view text);

  int n() const { return particles.value_or(0); }

  friend bool operator==(const SectorDescriptor&, const SectorDescriptor&) = default;
};

/// Occupation numbers (n_1, ..., n_d).
using Occupation = std::vector<int>;

class SectorBasis {
 public:
  explicit SectorBasis(SectorDescriptor desc);

  const SectorDescriptor& descriptor() const noexcept { return desc_; }
  const std::vector<Occupation>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  const Occupation& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> index_of(const Occupation& occ) const;

  /// Index into the 2^d fermionic Fock space (mode 1 is the most significant
  /// bit). Only meaningful for fermionic and fock_plus sectors.
  static std::uint64_t fock_index(const Occupation& occ);
  std::vector<std::uint64_t> fock_indices() const;

 private:
  SectorDescriptor desc_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

std::uint64_t binomial(int n, int k);

/// Ascending lexicographic enumeration of the occupation basis.
SectorBasis enumerate_basis(const SectorDescriptor& desc);

std::size_t sector_dim(const SectorDescriptor& desc);

/// Isometry T from the sector into (C^d)^{(x)N}, columns indexed by the
/// sector basis. Tensor index of |i_1 ... i_N> is sum_k i_k d^{N-k}
/// (first factor most significant). Rejects fock_plus.
ComplexMatrix embedding_isometry(const SectorDescriptor& desc);

}  // namespace unikit
