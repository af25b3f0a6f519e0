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

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidScenario;  // sentinel: nothing thrown
}

TEST(FactorToken, ParsesAllForms) {
  EXPECT_EQ(FactorToken::parse("n:3"), tokens::n(3));
  EXPECT_EQ(FactorToken::parse("hop:1:12"), tokens::hop(1, 12));
  EXPECT_EQ(FactorToken::parse("cr:2"), tokens::cr(2));
  EXPECT_EQ(FactorToken::parse("an:4"), tokens::an(4));
  EXPECT_EQ(FactorToken::parse("maj:7"), tokens::maj(7));
  EXPECT_EQ(FactorToken::parse("hop:2:1").to_string(), "hop:2:1");
}

TEST(FactorToken, ErrorsCarryColumn) {
  auto msg = [](const char* text) {
    try {
      FactorToken::parse(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidToken);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg("hop:1").find("column 6"), std::string::npos) << msg("hop:1");
  EXPECT_NE(msg("x:1").find("column 1"), std::string::npos);
  EXPECT_NE(msg("n:0").find("column 3"), std::string::npos);
  EXPECT_NE(msg("n:2x").find("column 4"), std::string::npos);
  EXPECT_NE(msg("n;2").find("column"), std::string::npos);
}

TEST(JordanWigner, MatchesPauliStrings) {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= d; ++k) {
      EXPECT_LT((jw_ladder(k, d, false) - oracle::pauli_ladder(k, d, false)).norm(), 1e-15);
      EXPECT_LT((jw_ladder(k, d, true) - oracle::pauli_ladder(k, d, true)).norm(), 1e-15);
    }
    for (int i = 1; i <= 2 * d; ++i) {
      EXPECT_LT((majorana(i, d) - oracle::pauli_majorana(i, d)).norm(), 1e-15);
    }
  }
}

TEST(JordanWigner, CanonicalAnticommutation) {
  const int d = 3;
  const auto id = ComplexMatrix::Identity(8, 8);
  for (int k = 1; k <= d; ++k) {
    for (int l = 1; l <= d; ++l) {
      const auto fk = jw_ladder(k, d, false);
      const auto fl = jw_ladder(l, d, false);
      const auto fld = jw_ladder(l, d, true);
      EXPECT_LT((fk * fl + fl * fk).norm(), 1e-15);
      const ComplexMatrix expected = k == l ? ComplexMatrix(id) : ComplexMatrix(ComplexMatrix::Zero(8, 8));
      EXPECT_LT((fk * fld + fld * fk - expected).norm(), 1e-15);
    }
  }
  for (int i = 1; i <= 2 * d; ++i) {
    for (int j = 1; j <= 2 * d; ++j) {
      const auto mi = majorana(i, d);
      const auto mj = majorana(j, d);
      EXPECT_LT((mi * mj + mj * mi - (i == j ? 2.0 : 0.0) * id).norm(), 1e-14);
    }
  }
}

TEST(JordanWigner, SingleModeMajoranas) {
  ComplexMatrix sx(2, 2), sy(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  EXPECT_LT((majorana(1, 1) - sx).norm(), 1e-15);
  EXPECT_LT((majorana(2, 1) + sy).norm(), 1e-15);
}

TEST(ParityOp, IsProductOfMajoranaPairs) {
  const int d = 3;
  ComplexMatrix q = ComplexMatrix::Identity(8, 8);
  for (int k = 1; k <= d; ++k) q = (q * (Complex(0.0, 1.0) * majorana(2 * k - 1, d) * majorana(2 * k, d))).eval();
  // i m_{2k-1} m_{2k} = (-1)^{n_k}
  EXPECT_LT((q - parity_op(d)).norm(), 1e-14);
}

TEST(AssembleMatrix, NumberConservingFermionicTerms) {
  const auto desc = SectorDescriptor::fermionic(4, 2);
  const auto idx = SectorBasis(desc).fock_indices();
  HamiltonianSpec spec;
  spec.add(Complex(0.3, 0.1), {"hop:1:3"});
  spec.add(Complex(0.3, -0.1), {"hop:3:1"});
  spec.add(0.7, {"n:2", "n:4"});
  spec.add(-0.2, {"cr:1", "an:4"});
  spec.add(-0.2, {"cr:4", "an:1"});
  spec.add(1.1, {"hop:2:2"});
  auto c = [](int k) { return oracle::pauli_ladder(k, 4, true); };
  auto a = [](int k) { return oracle::pauli_ladder(k, 4, false); };
  const ComplexMatrix full = Complex(0.3, 0.1) * c(1) * a(3) + Complex(0.3, -0.1) * c(3) * a(1) +
                             0.7 * c(2) * a(2) * c(4) * a(4) - 0.2 * c(1) * a(4) - 0.2 * c(4) * a(1) +
                             1.1 * c(2) * a(2);
  EXPECT_LT((assemble_matrix(spec, desc) - oracle::restrict_indices(full, idx)).norm(), 1e-14);
  EXPECT_LT((restrict_to_sector(full, desc) - oracle::restrict_indices(full, idx)).norm(), 1e-14);
}

TEST(AssembleMatrix, FockPlusMajoranaProducts) {
  const auto desc = SectorDescriptor::fock_plus(3);
  const auto idx = SectorBasis(desc).fock_indices();
  HamiltonianSpec spec;
  spec.add(Complex(0.0, 0.5), {"maj:2", "maj:5"});
  spec.add(0.25, {"maj:1", "maj:2", "maj:3", "maj:4"});
  const ComplexMatrix full = Complex(0.0, 0.5) * oracle::pauli_majorana(2, 3) * oracle::pauli_majorana(5, 3) +
                             0.25 * oracle::pauli_majorana(1, 3) * oracle::pauli_majorana(2, 3) *
                                 oracle::pauli_majorana(3, 3) * oracle::pauli_majorana(4, 3);
  EXPECT_LT((assemble_matrix(spec, desc) - oracle::restrict_indices(full, idx)).norm(), 1e-14);
}

TEST(AssembleMatrix, BosonicLadderAmplitudes) {
  const auto desc = SectorDescriptor::bosonic(2, 3);
  HamiltonianSpec spec;
  spec.add(1.0, {"hop:1:2"});
  const ComplexMatrix m = assemble_matrix(spec, desc);
  // Dicke order D_0..D_3; a1^dag a2 |D_k> = sqrt((k+1)(N-k)) |D_{k+1}>
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(m(k + 1, k).real(), std::sqrt((k + 1.0) * (3 - k)), 1e-14);
  EXPECT_NEAR(m.norm(), std::sqrt(3.0 + 4.0 + 3.0), 1e-13);
  HamiltonianSpec cube;
  cube.add(1.0, {"n:1", "n:1", "n:1"});
  const ComplexMatrix c = assemble_matrix(cube, desc);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(c(k, k).real(), k * k * k, 1e-13);
}

TEST(AssembleMatrix, BosonicMatchesTensorSum) {
  // sum over positions of a single-particle matrix, restricted to Sym^N.
  const auto desc = SectorDescriptor::bosonic(3, 2);
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 2) = Complex(0.4, 0.2);
  h(2, 0) = Complex(0.4, -0.2);
  h(1, 1) = -0.9;
  HamiltonianSpec spec;
  spec.add(h(0, 2), {"hop:1:3"});
  spec.add(h(2, 0), {"hop:3:1"});
  spec.add(h(1, 1), {"n:2"});
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix sum = kron(h, id) + kron(id, h);
  const ComplexMatrix t = oracle::brute_force_isometry(desc);
  EXPECT_LT((assemble_matrix(spec, desc) - t.adjoint() * sum * t).norm(), 1e-13);
}

TEST(AssembleMatrix, ErrorsAndValidation) {
  const auto bos = SectorDescriptor::bosonic(2, 2);
  const auto fer = SectorDescriptor::fermionic(4, 2);
  HamiltonianSpec cr;
  cr.add(1.0, {"cr:1"});
  EXPECT_EQ(code_of([&] { assemble_matrix(cr, bos); }), ErrorCode::kInvalidToken);
  EXPECT_EQ(code_of([&] { assemble_matrix(cr, fer); }), ErrorCode::kSectorViolation);
  HamiltonianSpec out_of_range;
  out_of_range.add(1.0, {"n:5"});
  EXPECT_EQ(code_of([&] { assemble_matrix(out_of_range, fer); }), ErrorCode::kInvalidToken);
  HamiltonianSpec maj;
  maj.add(1.0, {"maj:9"});
  EXPECT_EQ(code_of([&] { assemble_matrix(maj, fer); }), ErrorCode::kInvalidToken);
  HamiltonianSpec nh;
  nh.add(1.0, {"hop:1:2"});
  EXPECT_EQ(code_of([&] { build_operator(nh, fer); }), ErrorCode::kNonHermitian);
  const Operator herm = build_operator(nh, fer, true);
  EXPECT_TRUE(is_hermitian(herm.matrix, 1e-15));
  // Terms that leave the sector individually but cancel in the sum are fine.
  HamiltonianSpec cancel;
  cancel.add(1.0, {"cr:1"});
  cancel.add(-1.0, {"cr:1"});
  cancel.add(1.0, {"n:1"});
  EXPECT_NO_THROW(assemble_matrix(cancel, fer));
  HamiltonianSpec pair;
  pair.add(1.0, {"maj:1", "maj:3"});
  EXPECT_EQ(code_of([&] { assemble_matrix(pair, fer); }), ErrorCode::kSectorViolation);
}

TEST(RestrictToSector, DetectsLeakage) {
  const auto fer = SectorDescriptor::fermionic(3, 1);
  EXPECT_EQ(code_of([&] { restrict_to_sector(jw_ladder(1, 3, true), fer); }), ErrorCode::kSectorViolation);
  EXPECT_NO_THROW(restrict_to_sector(parity_op(3), SectorDescriptor::fock_plus(3)));
}

}  // namespace
}  // namespace unikit
