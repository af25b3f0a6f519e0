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
#include <string>
#include <vector>

#include "unikit/linalg.hpp"
#include "unikit/reps.hpp"

namespace unikit {

/// Largest sector dimension the brute-force oracle accepts.
inline constexpr Eigen::Index kOracleMaxDim = 32;

struct ClosureResult {
  std::size_t dim = 0;  // dimension of the traceless closure
  HermitianBasis basis{1};
  bool converged = false;
  int rounds = 0;
};

/// Real Lie algebra generated by the traceless parts of `seeds` under i[., .].
/// Stops when a round adds nothing, when su(n) is reached, or after
/// max_rounds (then converged = false). Throws kOracleScope for n > 32.
ClosureResult lie_closure(const std::vector<ComplexMatrix>& seeds, double tol = 1e-9,
                          int max_rounds = 12);

/// Family generators together with V^m G V^-m for m = 1..max_power. Their
/// closure is a lower bound on the algebra of the group generated by the
/// family and V.
std::vector<ComplexMatrix> gate_closure_seeds(const ComplexMatrix& v, const LieAlgebraBasis& basis,
                                              int max_power = 3);

enum class GroupTag { kLieFamily, kSO, kUSp, kG2, kFullSU, kOther };

struct GroupId {
  GroupTag tag = GroupTag::kOther;
  std::size_t dim = 0;

  std::string to_string() const;
  friend bool operator==(const GroupId&, const GroupId&) = default;
};

const char* to_string(GroupTag tag);
GroupTag parse_group_tag(std::string_view text);

/// Dimension table: family, so(n), usp(n) (n even), g2 (n = 7), su(n), other.
GroupId group_from_dim(std::size_t dim, Eigen::Index n, std::size_t family_dim);

/// Throws kOracleInconclusive for an unconverged result.
GroupId identify_group(const ClosureResult& result, Eigen::Index n, std::size_t family_dim);

/// Worker count for internal parallel loops; honours UNIKIT_THREADS.
unsigned worker_threads();

}  // namespace unikit
