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

#include "unikit/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <utility>

#include "unikit/error.hpp"

namespace unikit {

unsigned worker_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UNIKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

namespace {

constexpr Eigen::Index kBatch = 512;

template <class F>
void parallel_for(Eigen::Index count, F&& body) {
  const unsigned workers = std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max<Eigen::Index>(count / 16, 1)));
  if (workers <= 1) {
    for (Eigen::Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Eigen::Index i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace

ClosureResult lie_closure(const std::vector<ComplexMatrix>& seeds, double tol, int max_rounds) {
  if (seeds.empty()) fail(ErrorCode::kInvalidArgument, "lie_closure needs at least one seed");
  const Eigen::Index n = seeds.front().rows();
  if (n > kOracleMaxDim) {
    fail(ErrorCode::kOracleScope, "oracle is limited to sector dimension <= 32 (got " + std::to_string(n) + ")");
  }
  ClosureResult out;
  out.basis = HermitianBasis(n);
  for (const auto& s : seeds) {
    if (s.rows() != n || s.cols() != n) fail(ErrorCode::kInvalidArgument, "seeds have mixed dimensions");
    if (!is_hermitian(s, 1e-10)) fail(ErrorCode::kNonHermitian, "closure seed is not Hermitian");
    out.basis.try_extend(traceless_part(s), tol);
  }
  const auto full = static_cast<std::size_t>(n * n - 1);
  auto& basis = out.basis;
  auto done = [&] { return basis.size() >= full; };
  if (done()) {
    out.dim = basis.size();
    out.converged = true;
    return out;
  }

  const Eigen::Index len = n * n;
  std::size_t new_begin = 0;
  while (out.rounds < max_rounds) {
    ++out.rounds;
    const std::size_t new_end = basis.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t b = new_begin; b < new_end; ++b) {
      for (std::size_t a = 0; a < b; ++a) pairs.emplace_back(a, b);
    }
    for (std::size_t start = 0; start < pairs.size() && !done(); start += kBatch) {
      const auto count = static_cast<Eigen::Index>(std::min<std::size_t>(kBatch, pairs.size() - start));
      RealMatrix cand(len, count);
      RealVector scale(count);
      parallel_for(count, [&](Eigen::Index c) {
        const auto [a, b] = pairs[start + static_cast<std::size_t>(c)];
        const ComplexMatrix m = icommutator(basis[a], basis[b]);
        scale(c) = m.norm();
        cand.col(c) = hermitian_coords(m);
      });
      // Project against the basis as it stood at the start of the batch.
      const std::size_t k0 = basis.size();
      {
        const auto q = basis.coord_matrix();
        for (int pass = 0; pass < 2; ++pass) cand.noalias() -= q * (q.transpose() * cand);
      }
      for (Eigen::Index c = 0; c < count && !done(); ++c) {
        const double thr = tol * std::max(1.0, scale(c));
        RealVector v = cand.col(c);
        if (!(v.norm() > thr)) continue;
        if (basis.size() > k0) {
          const auto q = basis.coord_matrix().rightCols(static_cast<Eigen::Index>(basis.size() - k0));
          for (int pass = 0; pass < 2; ++pass) v.noalias() -= q * (q.transpose() * v);
          if (!(v.norm() > thr)) continue;
        }
        basis.try_extend_coords(std::move(v), scale(c), tol);
      }
    }
    if (done() || basis.size() == new_end) {
      out.converged = true;
      break;
    }
    new_begin = new_end;
  }
  out.dim = basis.size();
  return out;
}

std::vector<ComplexMatrix> gate_closure_seeds(const ComplexMatrix& v, const LieAlgebraBasis& basis,
                                              int max_power) {
  if (v.rows() != basis.generators.dim() || v.cols() != basis.generators.dim()) {
    fail(ErrorCode::kInvalidArgument, "gate dimension does not match the sector");
  }
  if (!is_unitary(v, 1e-9)) fail(ErrorCode::kNonUnitary, "gate is not unitary");
  if (max_power < 0) fail(ErrorCode::kInvalidArgument, "max_power must be >= 0");
  std::vector<ComplexMatrix> out(basis.generators.elements());
  ComplexMatrix power = ComplexMatrix::Identity(v.rows(), v.cols());
  for (int m = 1; m <= max_power; ++m) {
    power = (power * v).eval();
    for (const auto& g : basis.generators.elements()) {
      ComplexMatrix c = power * g * power.adjoint();
      out.push_back(0.5 * (c + c.adjoint()));
    }
  }
  return out;
}

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::kLieFamily: return "LIE_FAMILY";
    case GroupTag::kSO: return "SO";
    case GroupTag::kUSp: return "USP";
    case GroupTag::kG2: return "G2";
    case GroupTag::kFullSU: return "FULL_SU";
    case GroupTag::kOther: return "OTHER";
  }
  return "?";
}

GroupTag parse_group_tag(std::string_view text) {
  for (auto t : {GroupTag::kLieFamily, GroupTag::kSO, GroupTag::kUSp, GroupTag::kG2, GroupTag::kFullSU,
                 GroupTag::kOther}) {
    if (text == to_string(t)) return t;
  }
  fail(ErrorCode::kInvalidArgument, "unknown group tag '" + std::string(text) + "'");
}

std::string GroupId::to_string() const {
  std::ostringstream os;
  os << unikit::to_string(tag) << '(' << dim << ')';
  return os.str();
}

GroupId group_from_dim(std::size_t dim, Eigen::Index n, std::size_t family_dim) {
  const auto nn = static_cast<std::size_t>(n);
  GroupId id{GroupTag::kOther, dim};
  if (dim == family_dim) {
    id.tag = GroupTag::kLieFamily;
  } else if (dim == nn * nn - 1) {
    id.tag = GroupTag::kFullSU;
  } else if (dim == nn * (nn - 1) / 2) {
    id.tag = GroupTag::kSO;
  } else if (nn % 2 == 0 && dim == nn * (nn + 1) / 2) {
    id.tag = GroupTag::kUSp;
  } else if (nn == 7 && dim == 14) {
    id.tag = GroupTag::kG2;
  }
  return id;
}

GroupId identify_group(const ClosureResult& result, Eigen::Index n, std::size_t family_dim) {
  if (!result.converged) {
    fail(ErrorCode::kOracleInconclusive,
         "closure did not converge within " + std::to_string(result.rounds) + " rounds");
  }
  return group_from_dim(result.dim, n, family_dim);
}

}  // namespace unikit
