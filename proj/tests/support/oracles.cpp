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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace unikit::oracle {

ComplexMatrix taylor_exp(const ComplexMatrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix b = a / std::ldexp(1.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

ComplexMatrix pauli_ladder(int k, int d, bool create) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
  lower(0, 1) = 1.0;  // |0><1|: removes the particle
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int j = 1; j <= d; ++j) {
    const ComplexMatrix f = j < k ? z : (j == k ? lower : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    out = kron(out, f);
  }
  return create ? ComplexMatrix(out.adjoint()) : out;
}

ComplexMatrix pauli_majorana(int i, int d) {
  const int k = (i + 1) / 2;
  const ComplexMatrix f = pauli_ladder(k, d, false);
  const ComplexMatrix fd = pauli_ladder(k, d, true);
  return i % 2 ? ComplexMatrix(f + fd) : ComplexMatrix(Complex(0.0, 1.0) * (f - fd));
}

std::vector<Occupation> brute_force_basis(const SectorDescriptor& desc) {
  const int d = desc.modes;
  const int cap = desc.kind == SectorKind::kBosonic ? desc.n() : 1;
  std::vector<Occupation> out;
  Occupation occ(static_cast<std::size_t>(d), 0);
  while (true) {
    const int total = std::accumulate(occ.begin(), occ.end(), 0);
    const bool keep = desc.kind == SectorKind::kFockPlus ? total % 2 == 0 : total == desc.n();
    if (keep) out.push_back(occ);
    int pos = d - 1;
    while (pos >= 0 && occ[pos] == cap) occ[pos--] = 0;
    if (pos < 0) break;
    ++occ[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int parity_of(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

ComplexMatrix brute_force_isometry(const SectorDescriptor& desc) {
  const int d = desc.modes;
  const int N = desc.n();
  const auto basis = brute_force_basis(desc);
  std::map<Occupation, Eigen::Index> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = static_cast<Eigen::Index>(i);
  Eigen::Index rows = 1;
  for (int k = 0; k < N; ++k) rows *= d;
  ComplexMatrix t = ComplexMatrix::Zero(rows, static_cast<Eigen::Index>(basis.size()));
  std::vector<int> idx(static_cast<std::size_t>(N));
  for (Eigen::Index r = 0; r < rows; ++r) {
    Eigen::Index x = r;
    for (int k = N - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(x % d);
      x /= d;
    }
    Occupation occ(static_cast<std::size_t>(d), 0);
    for (int v : idx) ++occ[static_cast<std::size_t>(v)];
    if (desc.kind == SectorKind::kFermionic) {
      if (*std::max_element(occ.begin(), occ.end()) > 1) continue;
      // Rank of each entry within the sorted support gives the permutation.
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> perm(static_cast<std::size_t>(N));
      for (int k = 0; k < N; ++k) {
        perm[static_cast<std::size_t>(k)] = static_cast<int>(
            std::find(sorted.begin(), sorted.end(), idx[static_cast<std::size_t>(k)]) - sorted.begin());
      }
      double fact = 1.0;
      for (int k = 2; k <= N; ++k) fact *= k;
      t(r, column.at(occ)) = parity_of(perm) / std::sqrt(fact);
    } else {
      // Number of tensor indices with these counts: N! / prod n_k!.
      double arrangements = 1.0;
      for (int k = 2; k <= N; ++k) arrangements *= k;
      for (int c : occ) {
        for (int k = 2; k <= c; ++k) arrangements /= k;
      }
      t(r, column.at(occ)) = 1.0 / std::sqrt(arrangements);
    }
  }
  return t;
}

ComplexMatrix tensor_power_gate(const SectorDescriptor& desc, const ComplexMatrix& h) {
  const ComplexMatrix u = taylor_exp(Complex(0.0, 1.0) * h);
  ComplexMatrix big = ComplexMatrix::Identity(1, 1);
  for (int k = 0; k < desc.n(); ++k) big = kron(big, u);
  const ComplexMatrix t = brute_force_isometry(desc);
  return t.adjoint() * big * t;
}

ComplexVector shuffle_psi_f(int particles) {
  const auto desc = SectorDescriptor::fermionic(2 * particles, particles);
  const auto basis = brute_force_basis(desc);
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Occupation& x = basis[static_cast<std::size_t>(i)];
    std::vector<int> order;
    for (int k = 0; k < 2 * particles; ++k) {
      if (x[k]) order.push_back(k);
    }
    for (int k = 0; k < 2 * particles; ++k) {
      if (!x[k]) order.push_back(k);
    }
    Occupation comp(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) comp[k] = 1 - x[k];
    const auto j = std::find(basis.begin(), basis.end(), comp) - basis.begin();
    psi(i * n + j) = parity_of(order);
  }
  return psi / psi.norm();
}

ComplexMatrix restrict_indices(const ComplexMatrix& full, const std::vector<std::uint64_t>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(r, c) = full(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    }
  }
  return out;
}

std::vector<ComplexMatrix> annihilator_basis(const ComplexVector& psi, Eigen::Index n) {
  // Row-major pairing matrix M(i, j) = psi[i n + j].
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = psi(i * n + j);
  }
  // Real-linear map from Hermitian matrices (elementary real basis) to the
  // real and imaginary parts of X M + M X^T.
  std::vector<ComplexMatrix> elems;
  for (Eigen::Index i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, i) = 1.0;
    elems.push_back(e);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(i, j) = s(j, i) = 1.0;
      elems.push_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(i, j) = Complex(0.0, -1.0);
      a(j, i) = Complex(0.0, 1.0);
      elems.push_back(a);
    }
  }
  RealMatrix map(2 * n * n, static_cast<Eigen::Index>(elems.size()));
  for (std::size_t c = 0; c < elems.size(); ++c) {
    const ComplexMatrix img = elems[c] * m + m * elems[c].transpose();
    for (Eigen::Index k = 0; k < n * n; ++k) {
      map(2 * k, static_cast<Eigen::Index>(c)) = img(k / n, k % n).real();
      map(2 * k + 1, static_cast<Eigen::Index>(c)) = img(k / n, k % n).imag();
    }
  }
  Eigen::JacobiSVD<RealMatrix> svd(map, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<ComplexMatrix> out;
  const double cut = 1e-10 * std::max(1.0, sv(0));
  for (Eigen::Index c = 0; c < map.cols(); ++c) {
    const double s = c < sv.size() ? sv(c) : 0.0;
    if (s > cut) continue;
    ComplexMatrix x = ComplexMatrix::Zero(n, n);
    for (std::size_t e = 0; e < elems.size(); ++e) x += svd.matrixV()(static_cast<Eigen::Index>(e), c) * elems[e];
    out.push_back(x / x.norm());
  }
  return out;
}

ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  return taylor_exp(Complex(0.0, 1.0) * random_hermitian(n, rng));
}

ComplexMatrix random_antisymmetric(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix h = ComplexMatrix::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      h(k, l) = g(rng);
      h(l, k) = -h(k, l);
    }
  }
  return h;
}

bool same_spectrum(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(b, Eigen::EigenvaluesOnly);
  return (ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < tol;
}

}  // namespace unikit::oracle
