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

#include "unikit/secondq.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "unikit/error.hpp"

namespace unikit {

void check_operator_shape(const Operator& op) {
  const auto n = static_cast<Eigen::Index>(sector_dim(op.sector));
  if (op.matrix.rows() != n || op.matrix.cols() != n) {
    std::ostringstream os;
    os << "operator is " << op.matrix.rows() << "x" << op.matrix.cols() << " but sector "
       << op.sector.to_string() << " has dimension " << n;
    fail(ErrorCode::kInvalidArgument, os.str());
  }
}

namespace {

void check_fock_modes(int d) {
  if (d < 1 || d > 14) fail(ErrorCode::kInvalidArgument, "Fock space: need 1 <= d <= 14");
}

int bit(std::uint64_t idx, int k, int d) { return static_cast<int>((idx >> (d - k)) & 1u); }

// (-1)^{sum_{j<k} n_j}, k 1-based.
double jw_sign(std::uint64_t idx, int k, int d) {
  int parity = 0;
  for (int j = 1; j < k; ++j) parity ^= bit(idx, j, d);
  return parity ? -1.0 : 1.0;
}

}  // namespace

ComplexMatrix jw_ladder(int k, int d, bool create) {
  check_fock_modes(d);
  if (k < 1 || k > d) fail(ErrorCode::kInvalidArgument, "jw_ladder: mode index out of range");
  const std::uint64_t dim = std::uint64_t{1} << d;
  ComplexMatrix f = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::uint64_t mask = std::uint64_t{1} << (d - k);
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & mask) {
      f(static_cast<Eigen::Index>(x ^ mask), static_cast<Eigen::Index>(x)) = jw_sign(x, k, d);
    }
  }
  if (create) return f.adjoint();
  return f;
}

ComplexMatrix majorana(int i, int d) {
  check_fock_modes(d);
  if (i < 1 || i > 2 * d) fail(ErrorCode::kInvalidArgument, "majorana: index out of range");
  const int k = (i + 1) / 2;
  const ComplexMatrix f = jw_ladder(k, d, false);
  if (i % 2 == 1) return f + f.adjoint();
  return Complex(0.0, 1.0) * (f - f.adjoint());
}

ComplexMatrix parity_op(int d) {
  check_fock_modes(d);
  const std::uint64_t dim = std::uint64_t{1} << d;
  ComplexMatrix q = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x) {
    q(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = (std::popcount(x) % 2) ? -1.0 : 1.0;
  }
  return q;
}

ComplexMatrix restrict_to_sector(const ComplexMatrix& fock_op, const SectorDescriptor& desc,
                                 double tol) {
  desc.validate();
  if (desc.kind == SectorKind::kBosonic) {
    fail(ErrorCode::kInvalidArgument, "restrict_to_sector: bosonic sectors have no Fock embedding");
  }
  const Eigen::Index full = Eigen::Index{1} << desc.modes;
  if (fock_op.rows() != full || fock_op.cols() != full) {
    fail(ErrorCode::kInvalidArgument, "restrict_to_sector: operator is not on the 2^d Fock space");
  }
  const SectorBasis basis(desc);
  const auto idx = basis.fock_indices();
  std::vector<bool> inside(static_cast<std::size_t>(full), false);
  for (auto i : idx) inside[i] = true;
  const auto n = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(n, n);
  double leak = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto col = static_cast<Eigen::Index>(idx[c]);
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = fock_op(static_cast<Eigen::Index>(idx[r]), col);
    for (Eigen::Index r = 0; r < full; ++r) {
      if (!inside[static_cast<std::size_t>(r)]) leak += std::norm(fock_op(r, col));
    }
  }
  if (std::sqrt(leak) > tol * std::max(1.0, fock_op.norm())) {
    fail(ErrorCode::kSectorViolation, "sector-violating operator: maps " + desc.to_string() +
                                          " outside itself");
  }
  return out;
}

void check_token(const FactorToken& t, const SectorDescriptor& desc) {
  const int d = desc.modes;
  const bool bosonic = desc.kind == SectorKind::kBosonic;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kInvalidToken, "factor token \"" + t.to_string() + "\" on " + desc.to_string() +
                                       ": " + why);
  };
  switch (t.kind) {
    case FactorToken::Kind::kNumber:
      if (t.i < 1 || t.i > d) bad("mode index out of range 1.." + std::to_string(d));
      break;
    case FactorToken::Kind::kHop:
      if (t.i < 1 || t.i > d || t.j < 1 || t.j > d) bad("mode index out of range 1.." + std::to_string(d));
      break;
    case FactorToken::Kind::kCreate:
    case FactorToken::Kind::kAnnihilate:
      if (bosonic) bad("cr/an are only available on fermionic sectors");
      if (t.i < 1 || t.i > d) bad("mode index out of range 1.." + std::to_string(d));
      break;
    case FactorToken::Kind::kMajorana:
      if (bosonic) bad("maj is only available on fermionic sectors");
      if (t.i < 1 || t.i > 2 * d) bad("Majorana index out of range 1.." + std::to_string(2 * d));
      break;
  }
}

namespace {

// Applies one factor to (occupation, amplitude) in place. Returns false when
// the result vanishes.
bool apply_fermionic(const FactorToken& t, Occupation& occ, Complex& amp) {
  auto sign_before = [&](int k) {
    int parity = 0;
    for (int j = 0; j < k - 1; ++j) parity ^= occ[j];
    return parity ? -1.0 : 1.0;
  };
  switch (t.kind) {
    case FactorToken::Kind::kNumber:
      return occ[t.i - 1] != 0;
    case FactorToken::Kind::kHop: {
      if (occ[t.j - 1] == 0) return false;
      amp *= sign_before(t.j);
      occ[t.j - 1] = 0;
      if (occ[t.i - 1] != 0) return false;
      amp *= sign_before(t.i);
      occ[t.i - 1] = 1;
      return true;
    }
    case FactorToken::Kind::kAnnihilate:
      if (occ[t.i - 1] == 0) return false;
      amp *= sign_before(t.i);
      occ[t.i - 1] = 0;
      return true;
    case FactorToken::Kind::kCreate:
      if (occ[t.i - 1] != 0) return false;
      amp *= sign_before(t.i);
      occ[t.i - 1] = 1;
      return true;
    case FactorToken::Kind::kMajorana: {
      const int k = (t.i + 1) / 2;
      const bool occupied = occ[k - 1] != 0;
      amp *= sign_before(k);
      if (t.i % 2 == 0) amp *= occupied ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
      occ[k - 1] = occupied ? 0 : 1;
      return true;
    }
  }
  return false;
}

bool apply_bosonic(const FactorToken& t, Occupation& occ, Complex& amp) {
  switch (t.kind) {
    case FactorToken::Kind::kNumber:
      amp *= static_cast<double>(occ[t.i - 1]);
      return occ[t.i - 1] != 0;
    case FactorToken::Kind::kHop: {
      if (t.i == t.j) {
        amp *= static_cast<double>(occ[t.i - 1]);
        return occ[t.i - 1] != 0;
      }
      const int nj = occ[t.j - 1];
      if (nj == 0) return false;
      amp *= std::sqrt(static_cast<double>(nj));
      occ[t.j - 1] = nj - 1;
      amp *= std::sqrt(static_cast<double>(occ[t.i - 1] + 1));
      occ[t.i - 1] += 1;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

ComplexMatrix assemble_matrix(const HamiltonianSpec& spec, const SectorDescriptor& desc) {
  desc.validate();
  if (spec.terms.empty()) fail(ErrorCode::kInvalidArgument, "Hamiltonian has no terms");
  for (const auto& term : spec.terms) {
    for (const auto& f : term.factors) check_token(f, desc);
  }
  const SectorBasis basis(desc);
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  const bool bosonic = desc.kind == SectorKind::kBosonic;

  // Amplitude that leaves the sector, keyed by (source column, target state);
  // terms may cancel each other there, so only the total is checked.
  std::map<std::pair<Eigen::Index, Occupation>, Complex> leak;

  for (Eigen::Index c = 0; c < n; ++c) {
    for (const auto& term : spec.terms) {
      Occupation occ = basis[static_cast<std::size_t>(c)];
      Complex amp = term.coeff;
      bool alive = true;
      for (auto it = term.factors.rbegin(); it != term.factors.rend() && alive; ++it) {
        alive = bosonic ? apply_bosonic(*it, occ, amp) : apply_fermionic(*it, occ, amp);
      }
      if (!alive || amp == Complex(0.0, 0.0)) continue;
      if (auto r = basis.index_of(occ)) {
        m(static_cast<Eigen::Index>(*r), c) += amp;
      } else {
        leak[{c, occ}] += amp;
      }
    }
  }
  double leak_norm = 0.0;
  for (const auto& [key, amp] : leak) leak_norm += std::norm(amp);
  if (std::sqrt(leak_norm) > 1e-13 * std::max(1.0, m.norm())) {
    fail(ErrorCode::kSectorViolation,
         "sector-violating operator: the Hamiltonian maps " + desc.to_string() + " outside itself");
  }
  return m;
}

Operator build_operator(const HamiltonianSpec& spec, const SectorDescriptor& desc, bool hermitize) {
  ComplexMatrix m = assemble_matrix(spec, desc);
  if (hermitize) {
    m = (0.5 * (m + m.adjoint())).eval();
  } else if (!is_hermitian(m, 1e-12)) {
    std::ostringstream os;
    os << "assembled operator is not Hermitian (||M - M^dagger|| = " << (m - m.adjoint()).norm()
       << "); enable hermitize to symmetrize";
    fail(ErrorCode::kNonHermitian, os.str());
  }
  return Operator{desc, std::move(m)};
}

}  // namespace unikit
