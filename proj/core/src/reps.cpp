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

#include "unikit/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit {

const char* to_string(Family f) {
  switch (f) {
    case Family::kLOB: return "LOB";
    case Family::kLOF: return "LOF";
    case Family::kFLO: return "FLO";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "LOB") return Family::kLOB;
  if (text == "LOF") return Family::kLOF;
  if (text == "FLO") return Family::kFLO;
  fail(ErrorCode::kInvalidArgument, "unknown family '" + std::string(text) + "'");
}

Family family_for(SectorKind kind) {
  switch (kind) {
    case SectorKind::kBosonic: return Family::kLOB;
    case SectorKind::kFermionic: return Family::kLOF;
    case SectorKind::kFockPlus: return Family::kFLO;
  }
  return Family::kLOB;
}

std::size_t raw_family_dim(Family f, int modes) {
  const auto d = static_cast<std::size_t>(modes);
  return f == Family::kFLO ? d * (2 * d - 1) : d * d - 1;
}

const char* to_string(AutomorphismType t) {
  return t == AutomorphismType::kInner ? "inner" : "outer";
}

std::vector<ComplexMatrix> gell_mann_basis(int d) {
  std::vector<ComplexMatrix> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(k, l) = a(l, k) = s;
      out.push_back(a);
      ComplexMatrix b = ComplexMatrix::Zero(d, d);
      b(k, l) = Complex(0.0, -s);
      b(l, k) = Complex(0.0, s);
      out.push_back(b);
    }
  }
  for (int m = 1; m < d; ++m) {
    ComplexMatrix c = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int k = 0; k < m; ++k) c(k, k) = norm;
    c(m, m) = -m * norm;
    out.push_back(c);
  }
  return out;
}

namespace {

void check_family(Family family, const SectorDescriptor& desc) {
  if (family_for(desc.kind) != family) {
    fail(ErrorCode::kFamilyMismatch, std::string("family ") + to_string(family) +
                                         " does not act on sector " + desc.to_string());
  }
}

// i[G_a, G_b] for a few pairs must stay in the span; full closure is
// exercised by the test suite.
void spot_check_closure(const LieAlgebraBasis& b) {
  const auto& g = b.generators;
  if (g.size() < 2) return;
  double worst = 0.0;
  for (std::size_t a = 0; a + 1 < g.size(); ++a) {
    worst = std::max(worst, g.residual(icommutator(g[a], g[a + 1])));
    worst = std::max(worst, g.residual(icommutator(g[0], g[a + 1])));
  }
  if (worst > 1e-9) {
    std::ostringstream os;
    os << "Lie basis for " << to_string(b.family) << " on " << b.descriptor.to_string()
       << " is not closed (residual " << worst << ")";
    fail(ErrorCode::kInvalidArgument, os.str());
  }
}

}  // namespace

LieAlgebraBasis lie_basis(Family family, const SectorDescriptor& desc) {
  desc.validate();
  check_family(family, desc);
  const int d = desc.modes;
  const auto n = static_cast<Eigen::Index>(sector_dim(desc));
  LieAlgebraBasis out;
  out.descriptor = desc;
  out.family = family;
  out.generators = HermitianBasis(n);

  if (family == Family::kFLO) {
    const int m = 2 * d;
    out.units.assign(static_cast<std::size_t>(m * m), ComplexMatrix());
    for (int k = 1; k <= m; ++k) {
      for (int l = k + 1; l <= m; ++l) {
        HamiltonianSpec spec;
        spec.add(Complex(0.0, 0.5), {tokens::maj(k), tokens::maj(l)});
        ComplexMatrix g = assemble_matrix(spec, desc);
        out.generators.try_extend(g);
        out.units[static_cast<std::size_t>((k - 1) * m + (l - 1))] = std::move(g);
        ++out.raw_dim;
      }
    }
  } else {
    out.units.reserve(static_cast<std::size_t>(d * d));
    for (int k = 1; k <= d; ++k) {
      for (int l = 1; l <= d; ++l) {
        HamiltonianSpec spec;
        spec.add(Complex(1.0, 0.0), {tokens::hop(k, l)});
        out.units.push_back(assemble_matrix(spec, desc));
      }
    }
    for (const auto& h : gell_mann_basis(d)) {
      ComplexMatrix g = represent(out, h);
      out.generators.try_extend(g);
      out.raw_images.push_back(std::move(g));
      ++out.raw_dim;
    }
  }
  for (const auto& g : out.generators.elements()) {
    if (std::abs(g.trace()) > 1e-12) {
      fail(ErrorCode::kInvalidArgument, "family generator is not traceless");
    }
  }
  spot_check_closure(out);
  return out;
}

ComplexMatrix represent(const LieAlgebraBasis& basis, const ComplexMatrix& h) {
  const int d = basis.descriptor.modes;
  const Eigen::Index n = basis.generators.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  if (!all_finite(h)) fail(ErrorCode::kNonFinite, "single-particle generator has non-finite entries");
  if (basis.family == Family::kFLO) {
    const int m = 2 * d;
    if (h.rows() != m || h.cols() != m) {
      fail(ErrorCode::kInvalidArgument, "FLO generator must be 2d x 2d");
    }
    const double scale = std::max(1.0, h.norm());
    if (h.imag().norm() > 1e-12 * scale || (h + h.transpose()).norm() > 1e-12 * scale) {
      fail(ErrorCode::kInvalidArgument, "FLO generator must be real antisymmetric");
    }
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        const double c = h(k, l).real();
        if (c != 0.0) out += c * basis.units[static_cast<std::size_t>(k * m + l)];
      }
    }
    return out;
  }
  if (h.rows() != d || h.cols() != d) {
    fail(ErrorCode::kInvalidArgument, "single-particle generator must be d x d");
  }
  if (!is_hermitian(h, 1e-12)) fail(ErrorCode::kNonHermitian, "single-particle generator is not Hermitian");
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      if (h(k, l) != Complex(0.0, 0.0)) out += h(k, l) * basis.units[static_cast<std::size_t>(k * d + l)];
    }
  }
  return out;
}

Operator group_gate(const LieAlgebraBasis& basis, const ComplexMatrix& h) {
  return Operator{basis.descriptor, matexp(Complex(0.0, 1.0) * represent(basis, h))};
}

Operator group_gate(Family family, const SectorDescriptor& desc, const ComplexMatrix& h) {
  return group_gate(lie_basis(family, desc), h);
}

double normalizer_residual(const ComplexMatrix& v, const LieAlgebraBasis& basis) {
  if (v.rows() != basis.generators.dim() || v.cols() != basis.generators.dim()) {
    fail(ErrorCode::kInvalidArgument, "gate dimension does not match the sector");
  }
  if (!is_unitary(v, 1e-9)) fail(ErrorCode::kNonUnitary, "gate is not unitary");
  double worst = 0.0;
  for (const auto& g : basis.generators.elements()) {
    const ComplexMatrix c = v * g * v.adjoint();
    worst = std::max(worst, basis.generators.residual(traceless_part(c)));
  }
  return worst;
}

bool normalizes(const Operator& v, const LieAlgebraBasis& basis, double tol) {
  return normalizer_residual(v.matrix, basis) < tol;
}

namespace {

std::vector<double> sorted_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

bool same_spectrum(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

AutomorphismType automorphism_type(const Operator& v, const LieAlgebraBasis& basis) {
  const auto& desc = basis.descriptor;
  if (basis.family != Family::kLOF || desc.modes != 2 * desc.n()) {
    fail(ErrorCode::kInvalidArgument, "automorphism_type needs passive fermionic optics at half filling");
  }
  if (!is_unitary(v.matrix, 1e-9)) fail(ErrorCode::kNonUnitary, "gate is not unitary");
  const int d = desc.modes;
  // diag(1, 4, ..., d^2) minus its mean; its spectrum is not symmetric about
  // zero for d >= 3, so h* and -h* are distinguishable.
  ComplexMatrix probe = ComplexMatrix::Zero(d, d);
  const double mean = (d + 1) * (2.0 * d + 1) / 6.0;
  for (int k = 0; k < d; ++k) probe(k, k) = (k + 1.0) * (k + 1.0) - mean;
  const ComplexMatrix target = v.matrix * represent(basis, probe) * v.matrix.adjoint();

  const auto& imgs = basis.raw_images;
  const Eigen::Index len = basis.generators.dim() * basis.generators.dim();
  RealMatrix a(len, static_cast<Eigen::Index>(imgs.size()));
  for (std::size_t i = 0; i < imgs.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = hermitian_coords(imgs[i]);
  const RealVector rhs = hermitian_coords(traceless_part(target));
  const RealVector c = a.colPivHouseholderQr().solve(rhs);
  if ((a * c - rhs).norm() > 1e-8 * std::max(1.0, rhs.norm())) {
    fail(ErrorCode::kNotANormalizer, "conjugated probe leaves the family algebra: not a normalizer");
  }
  const auto basis_d = gell_mann_basis(d);
  ComplexMatrix recovered = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis_d.size(); ++i) recovered += c(static_cast<Eigen::Index>(i)) * basis_d[i];

  const auto got = sorted_eigenvalues(recovered);
  const auto plus = sorted_eigenvalues(probe);
  const auto minus = sorted_eigenvalues(-probe);
  if (same_spectrum(got, plus, 1e-8)) return AutomorphismType::kInner;
  if (same_spectrum(got, minus, 1e-8)) return AutomorphismType::kOuter;
  fail(ErrorCode::kNotANormalizer, "recovered probe spectrum matches neither h* nor -h*");
}

AutomorphismType automorphism_type(const Operator& v, const SectorDescriptor& desc) {
  return automorphism_type(v, lie_basis(Family::kLOF, desc));
}

Operator particle_hole_gate(const SectorDescriptor& desc) {
  desc.validate();
  if (desc.kind != SectorKind::kFermionic) {
    fail(ErrorCode::kFamilyMismatch, "particle-hole gate is defined on fermionic sectors");
  }
  std::vector<FactorToken> factors;
  for (int i = 1; i <= desc.modes; ++i) factors.push_back(tokens::maj(2 * i - 1));
  HamiltonianSpec spec;
  spec.add(Complex(1.0, 0.0), std::move(factors));
  return Operator{desc, assemble_matrix(spec, desc)};
}

}  // namespace unikit
