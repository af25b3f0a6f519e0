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

#include "unikit/sectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "unikit/error.hpp"

namespace unikit {

const char* to_string(SectorKind kind) {
  switch (kind) {
    case SectorKind::kBosonic: return "bosonic";
    case SectorKind::kFermionic: return "fermionic";
    case SectorKind::kFockPlus: return "fock_plus";
  }
  return "?";
}

void SectorDescriptor::validate() const {
  if (modes < 1) fail(ErrorCode::kInvalidArgument, "sector: modes must be >= 1");
  switch (kind) {
    case SectorKind::kBosonic:
    case SectorKind::kFermionic:
      if (!particles) fail(ErrorCode::kInvalidArgument, "sector: particle number required");
      if (*particles < 0) fail(ErrorCode::kInvalidArgument, "sector: particles must be >= 0");
      if (kind == SectorKind::kFermionic && *particles > modes) {
        fail(ErrorCode::kInvalidArgument, "sector: fermionic sector requires N <= d");
      }
      break;
    case SectorKind::kFockPlus:
      if (particles) fail(ErrorCode::kInvalidArgument, "sector: fock_plus carries no particle number");
      if (modes > 20) fail(ErrorCode::kInvalidArgument, "sector: fock_plus supports d <= 20");
      break;
  }
}

std::string SectorDescriptor::to_string() const {
  std::ostringstream os;
  os << unikit::to_string(kind) << ':' << modes;
  if (particles) os << ':' << *particles;
  return os.str();
}

SectorDescriptor SectorDescriptor::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(ErrorCode::kInvalidArgument, "sector: expected a non-negative integer, got '" + s +
                                            "' in '" + std::string(text) + "'");
    }
    return std::stoi(s);
  };
  SectorDescriptor d;
  if (parts[0] == "bosonic" || parts[0] == "fermionic") {
    if (parts.size() != 3) {
      fail(ErrorCode::kInvalidArgument, "sector: expected <kind>:<d>:<N>, got '" + std::string(text) + "'");
    }
    d.kind = parts[0] == "bosonic" ? SectorKind::kBosonic : SectorKind::kFermionic;
    d.modes = to_int(parts[1]);
    d.particles = to_int(parts[2]);
  } else if (parts[0] == "fock_plus") {
    if (parts.size() != 2) {
      fail(ErrorCode::kInvalidArgument, "sector: expected fock_plus:<d>, got '" + std::string(text) + "'");
    }
    d.kind = SectorKind::kFockPlus;
    d.modes = to_int(parts[1]);
  } else {
    fail(ErrorCode::kInvalidArgument, "sector: unknown kind '" + parts[0] + "'");
  }
  d.validate();
  return d;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

// Fills all occupation vectors with the given total in ascending
// lexicographic order (mode 1 varies slowest).
void enumerate_compositions(int modes, int total, int cap, Occupation& cur, int pos,
                            std::vector<Occupation>& out) {
  if (pos == modes - 1) {
    if (total <= cap) {
      cur[pos] = total;
      out.push_back(cur);
    }
    return;
  }
  for (int v = 0; v <= std::min(total, cap); ++v) {
    cur[pos] = v;
    enumerate_compositions(modes, total - v, cap, cur, pos + 1, out);
  }
}

}  // namespace

SectorBasis::SectorBasis(SectorDescriptor desc) : desc_(desc) {
  desc_.validate();
  const int d = desc_.modes;
  Occupation cur(d, 0);
  switch (desc_.kind) {
    case SectorKind::kBosonic:
      enumerate_compositions(d, *desc_.particles, *desc_.particles, cur, 0, states_);
      break;
    case SectorKind::kFermionic:
      enumerate_compositions(d, *desc_.particles, 1, cur, 0, states_);
      break;
    case SectorKind::kFockPlus: {
      const std::uint64_t total = std::uint64_t{1} << d;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (std::popcount(idx) % 2 != 0) continue;
        Occupation occ(d);
        for (int k = 0; k < d; ++k) occ[k] = static_cast<int>((idx >> (d - 1 - k)) & 1u);
        states_.push_back(std::move(occ));
      }
      break;
    }
  }
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> SectorBasis::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t SectorBasis::fock_index(const Occupation& occ) {
  std::uint64_t idx = 0;
  for (int n : occ) idx = (idx << 1) | static_cast<std::uint64_t>(n != 0);
  return idx;
}

std::vector<std::uint64_t> SectorBasis::fock_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(fock_index(s));
  return out;
}

SectorBasis enumerate_basis(const SectorDescriptor& desc) { return SectorBasis(desc); }

std::size_t sector_dim(const SectorDescriptor& desc) {
  desc.validate();
  switch (desc.kind) {
    case SectorKind::kBosonic:
      return binomial(*desc.particles + desc.modes - 1, *desc.particles);
    case SectorKind::kFermionic:
      return binomial(desc.modes, *desc.particles);
    case SectorKind::kFockPlus:
      return std::size_t{1} << (desc.modes - 1);
  }
  return 0;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

ComplexMatrix embedding_isometry(const SectorDescriptor& desc) {
  desc.validate();
  if (desc.kind == SectorKind::kFockPlus) {
    fail(ErrorCode::kInvalidArgument, "embedding_isometry: fock_plus has no fixed particle number");
  }
  const SectorBasis basis(desc);
  const int d = desc.modes;
  const int n = *desc.particles;
  Eigen::Index rows = 1;
  for (int i = 0; i < n; ++i) rows *= d;
  ComplexMatrix t = ComplexMatrix::Zero(rows, static_cast<Eigen::Index>(basis.size()));

  for (std::size_t col = 0; col < basis.size(); ++col) {
    // Mode list in ascending order, with multiplicity for bosons.
    std::vector<int> modes;
    for (int k = 0; k < d; ++k) {
      for (int c = 0; c < basis[col][k]; ++c) modes.push_back(k);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double w = 1.0 / std::sqrt(fact);
    // Sum over all N! orderings; repeated bosonic modes accumulate, which
    // yields the prod(n_k!)^{1/2} / sqrt(N!) normalisation automatically.
    double occ_fact = 1.0;
    for (int k = 0; k < d; ++k) {
      for (int i = 2; i <= basis[col][k]; ++i) occ_fact *= i;
    }
    const double bos_w = w / std::sqrt(occ_fact);
    do {
      Eigen::Index row = 0;
      for (int i = 0; i < n; ++i) row = row * d + modes[perm[i]];
      if (desc.kind == SectorKind::kBosonic) {
        t(row, static_cast<Eigen::Index>(col)) += bos_w;
      } else {
        t(row, static_cast<Eigen::Index>(col)) += w * permutation_sign(perm);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t;
}

}  // namespace unikit
