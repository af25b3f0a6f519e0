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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "unikit/classifier.hpp"
#include "unikit/closure.hpp"
#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit {
namespace {

std::vector<ComplexMatrix> family_seeds(const SectorDescriptor& d) {
  return lie_basis(family_for(d.kind), d).generators.elements();
}

ComplexMatrix cubic_on(int N) {
  HamiltonianSpec s;
  s.add(1.0, {"n:1", "n:1", "n:1"});
  s.add(-1.0, {"n:2", "n:2", "n:2"});
  return build_operator(s, SectorDescriptor::bosonic(2, N)).matrix;
}

ComplexMatrix kerr_on(int N) {
  HamiltonianSpec s;
  s.add(1.0, {"n:1", "n:2"});
  return build_operator(s, SectorDescriptor::bosonic(2, N)).matrix;
}

TEST(LieClosure, FamilyAloneIsClosed) {
  for (const auto& d : {SectorDescriptor::bosonic(2, 3), SectorDescriptor::bosonic(3, 2),
                        SectorDescriptor::fermionic(4, 2), SectorDescriptor::fock_plus(4)}) {
    const auto r = lie_closure(family_seeds(d));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.rounds, 1) << d.to_string();
    EXPECT_EQ(r.dim, lie_basis(family_for(d.kind), d).dim());
  }
}

TEST(LieClosure, CubicAtThreeParticlesIsSymplectic) {
  auto seeds = family_seeds(SectorDescriptor::bosonic(2, 3));
  seeds.push_back(cubic_on(3));
  const auto r = lie_closure(seeds);
  EXPECT_EQ(r.dim, 10u);
  EXPECT_EQ(identify_group(r, 4, 3).tag, GroupTag::kUSp);
}

TEST(LieClosure, KerrAtTwoParticlesIsFull) {
  auto seeds = family_seeds(SectorDescriptor::bosonic(2, 2));
  seeds.push_back(kerr_on(2));
  const auto r = lie_closure(seeds);
  EXPECT_EQ(r.dim, 8u);
  EXPECT_EQ(identify_group(r, 3, 3).tag, GroupTag::kFullSU);
}

TEST(LieClosure, SeedOrderDoesNotMatter) {
  auto seeds = family_seeds(SectorDescriptor::bosonic(2, 5));
  seeds.push_back(cubic_on(5));
  const auto base = lie_closure(seeds).dim;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(seeds.begin(), seeds.end(), rng);
    EXPECT_EQ(lie_closure(seeds).dim, base);
  }
  EXPECT_EQ(base, 21u);
}

TEST(LieClosure, Monotone) {
  std::mt19937_64 rng(47);
  auto seeds = family_seeds(SectorDescriptor::bosonic(2, 4));
  const auto a = lie_closure(seeds).dim;
  seeds.push_back(cubic_on(4));
  const auto b = lie_closure(seeds).dim;
  seeds.push_back(oracle::random_hermitian(5, rng));
  const auto c = lie_closure(seeds).dim;
  EXPECT_LE(a, b);
  EXPECT_LE(b, c);
  EXPECT_EQ(c, 24u);
}

TEST(LieClosure, KerrAtHalfFillingSixModesIsFull) {
  auto seeds = family_seeds(SectorDescriptor::fermionic(6, 3));
  HamiltonianSpec s;
  s.add(1.0, {"n:1", "n:2"});
  seeds.push_back(build_operator(s, SectorDescriptor::fermionic(6, 3)).matrix);
  const auto r1 = lie_closure(seeds);
  EXPECT_EQ(r1.dim, 399u);
}

TEST(LieClosure, RoundLimitReportsUnconverged) {
  auto seeds = family_seeds(SectorDescriptor::bosonic(2, 6));
  seeds.push_back(kerr_on(6));
  const auto r = lie_closure(seeds, 1e-9, 1);
  if (!r.converged) {
    try {
      identify_group(r, 7, 3);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOracleInconclusive);
    }
  }
  EXPECT_EQ(r.rounds, 1);
}

TEST(LieClosure, ScopeAndInputChecks) {
  try {
    lie_closure({ComplexMatrix::Identity(33, 33)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleScope);
  }
  ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  EXPECT_THROW(lie_closure({nh}), Error);
  EXPECT_THROW(lie_closure({}), Error);
}

TEST(GateSeeds, FamilyMembersAddNothing) {
  std::mt19937_64 rng(53);
  const auto d = SectorDescriptor::fermionic(4, 2);
  const auto b = lie_basis(Family::kLOF, d);
  const auto g = group_gate(b, oracle::random_hermitian(4, rng));
  EXPECT_EQ(lie_closure(gate_closure_seeds(g.matrix, b)).dim, 15u);
  EXPECT_EQ(lie_closure(gate_closure_seeds(particle_hole_gate(d).matrix, b)).dim, 15u);
  EXPECT_EQ(gate_closure_seeds(g.matrix, b, 2).size(), 45u);
}

TEST(GateSeeds, CrossKerrReachesFullAlgebra) {
  const auto d = SectorDescriptor::bosonic(2, 4);
  const auto b = lie_basis(Family::kLOB, d);
  const auto r = lie_closure(gate_closure_seeds(cross_kerr_gate(4, std::numbers::pi / 3).matrix, b));
  EXPECT_EQ(r.dim, 24u);
  EXPECT_THROW(gate_closure_seeds(2.0 * ComplexMatrix::Identity(5, 5), b), Error);
}

TEST(IdentifyGroup, DimensionTable) {
  EXPECT_EQ(group_from_dim(24, 5, 3).tag, GroupTag::kFullSU);
  EXPECT_EQ(group_from_dim(14, 7, 3).tag, GroupTag::kG2);
  EXPECT_EQ(group_from_dim(21, 7, 3).tag, GroupTag::kSO);
  EXPECT_EQ(group_from_dim(10, 4, 3).tag, GroupTag::kUSp);
  EXPECT_EQ(group_from_dim(3, 3, 3).tag, GroupTag::kLieFamily);
  EXPECT_EQ(group_from_dim(15, 6, 15).tag, GroupTag::kLieFamily);
  EXPECT_EQ(group_from_dim(9, 7, 3).tag, GroupTag::kOther);
  EXPECT_EQ(group_from_dim(21, 7, 3).to_string(), "SO(21)");
  EXPECT_EQ(parse_group_tag("USP"), GroupTag::kUSp);
}

}  // namespace
}  // namespace unikit
