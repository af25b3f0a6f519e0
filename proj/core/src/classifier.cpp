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

#include "unikit/classifier.hpp"

#include <cmath>
#include <sstream>

#include "unikit/error.hpp"
#include "unikit/secondq.hpp"

namespace unikit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kNotApplicable: return "NotApplicable";
    case Verdict::kNoExtension: return "NoExtension";
    case Verdict::kFullUnitary: return "FullUnitary";
    case Verdict::kMiddleOrthogonal: return "MiddleOrthogonal";
    case Verdict::kMiddleSymplectic: return "MiddleSymplectic";
    case Verdict::kLofPlusParticleHole: return "LofPlusParticleHole";
    case Verdict::kIndeterminateExceptional: return "IndeterminateExceptional";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (auto v : {Verdict::kNotApplicable, Verdict::kNoExtension, Verdict::kFullUnitary,
                 Verdict::kMiddleOrthogonal, Verdict::kMiddleSymplectic, Verdict::kLofPlusParticleHole,
                 Verdict::kIndeterminateExceptional}) {
    if (text == to_string(v)) return v;
  }
  fail(ErrorCode::kInvalidArgument, "unknown verdict '" + std::string(text) + "'");
}

const char* to_string(ExtensionKind k) {
  return k == ExtensionKind::kHamiltonian ? "hamiltonian" : "gate";
}

Scenario Scenario::hamiltonian(const Operator& x, ScenarioOptions options) {
  return Scenario{x.sector, family_for(x.sector.kind), ExtensionKind::kHamiltonian, x.matrix, options};
}

Scenario Scenario::gate(const Operator& v, ScenarioOptions options) {
  return Scenario{v.sector, family_for(v.sector.kind), ExtensionKind::kGate, v.matrix, options};
}

namespace {

enum class Branch { kZero, kNonzero };

Branch branch(double r, Eigen::Index n, double tol, const char* what) {
  const double lo = tol * static_cast<double>(n);
  if (r < lo) return Branch::kZero;
  if (r > 100.0 * lo) return Branch::kNonzero;
  std::ostringstream os;
  os << what << " " << r << " lies between the zero threshold " << lo << " and the nonzero threshold "
     << 100.0 * lo;
  fail(ErrorCode::kNumericalAmbiguity, os.str());
}

void validate(const Scenario& s) {
  s.descriptor.validate();
  if (family_for(s.descriptor.kind) != s.family) {
    fail(ErrorCode::kFamilyMismatch, std::string("family ") + to_string(s.family) +
                                         " does not act on sector " + s.descriptor.to_string());
  }
  check_operator_shape(Operator{s.descriptor, s.extension});
  if (!all_finite(s.extension)) fail(ErrorCode::kNonFinite, "extension has non-finite entries");
  if (!(s.options.tolerance > 0.0)) fail(ErrorCode::kInvalidArgument, "tolerance must be positive");
}

// Regimes where the family already is the full unitary group.
std::optional<std::string> guard(const SectorDescriptor& desc) {
  const int d = desc.modes;
  const int n = desc.n();
  switch (desc.kind) {
    case SectorKind::kBosonic:
      if (n <= 1 || d == 1) return "passive bosonic optics is already the full unitary group for N <= 1 or d = 1";
      break;
    case SectorKind::kFermionic:
      if (n == 0 || n == 1 || n == d - 1 || n == d) {
        return "passive fermionic optics is already the full unitary group for N in {0, 1, d-1, d}";
      }
      break;
    case SectorKind::kFockPlus:
      if (d <= 3) return "active fermionic optics is already the full unitary group for d <= 3";
      break;
  }
  return std::nullopt;
}

// Regimes with no invariant vector: every non-member extends to the full group.
bool full_regime(const SectorDescriptor& desc) {
  switch (desc.kind) {
    case SectorKind::kBosonic: return desc.modes > 2;
    case SectorKind::kFermionic: return desc.modes != 2 * desc.n();
    case SectorKind::kFockPlus: return desc.modes % 2 != 0;
  }
  return true;
}

bool stated_symmetric(const SectorDescriptor& desc) {
  switch (desc.kind) {
    case SectorKind::kBosonic: return desc.n() % 2 == 0;
    case SectorKind::kFermionic: return desc.modes % 4 != 0;
    case SectorKind::kFockPlus: return desc.modes % 4 == 0;
  }
  return true;
}

void record_form(Evidence& ev, const InvariantVector& psi) {
  ev.form_type = psi.form_type;
  const bool computed = psi.form_type == FormType::kSymmetric;
  if (computed != stated_symmetric(psi.descriptor)) {
    ev.discrepancy_flags.push_back(std::string("form_type: computed ") + to_string(psi.form_type) +
                                   " differs from the d mod 4 rule for " + psi.descriptor.to_string());
  }
}

Verdict middle(FormType f) {
  return f == FormType::kSymmetric ? Verdict::kMiddleOrthogonal : Verdict::kMiddleSymplectic;
}

bool exceptional(const SectorDescriptor& desc) {
  return desc.kind == SectorKind::kBosonic && desc.modes == 2 && desc.n() == 6;
}

void attach_oracle(ClassificationResult& r, const Scenario& s, bool mandatory) {
  if (!s.options.oracle && !mandatory) return;
  if (static_cast<Eigen::Index>(sector_dim(s.descriptor)) > kOracleMaxDim) {
    if (mandatory) fail(ErrorCode::kOracleScope, "oracle is limited to sector dimension <= 32");
    r.evidence.discrepancy_flags.push_back("oracle skipped: sector dimension exceeds 32");
    return;
  }
  r.evidence.oracle = run_oracle(s);
  if (!r.evidence.oracle->converged) {
    fail(ErrorCode::kOracleInconclusive, "oracle closure did not converge within " +
                                             std::to_string(r.evidence.oracle->rounds) + " rounds");
  }
}

}  // namespace

OracleEvidence run_oracle(const Scenario& s) {
  validate(s);
  const auto basis = lie_basis(s.family, s.descriptor);
  std::vector<ComplexMatrix> seeds;
  if (s.kind == ExtensionKind::kHamiltonian) {
    seeds = basis.generators.elements();
    seeds.push_back(0.5 * (s.extension + s.extension.adjoint()));
  } else {
    seeds = gate_closure_seeds(s.extension, basis, s.options.max_power);
  }
  const auto result = lie_closure(seeds, kDefaultSpanTol, s.options.max_rounds);
  OracleEvidence ev;
  ev.dim = result.dim;
  ev.converged = result.converged;
  ev.rounds = result.rounds;
  ev.seeds = seeds.size();
  ev.group = result.converged ? identify_group(result, basis.generators.dim(), basis.dim())
                              : GroupId{GroupTag::kOther, result.dim};
  return ev;
}

ClassificationResult classify_hamiltonian(const Scenario& s) {
  validate(s);
  if (s.kind != ExtensionKind::kHamiltonian) fail(ErrorCode::kInvalidArgument, "scenario extension is not a Hamiltonian");
  if (!is_hermitian(s.extension, 1e-10)) fail(ErrorCode::kNonHermitian, "Hamiltonian extension is not Hermitian");
  ClassificationResult r;
  if (auto why = guard(s.descriptor)) {
    r.verdict = Verdict::kNotApplicable;
    r.evidence.reason = *why;
    return r;
  }
  const auto& desc = s.descriptor;
  const auto n = static_cast<Eigen::Index>(sector_dim(desc));
  const double tol = s.options.tolerance;
  const auto basis = lie_basis(s.family, desc);
  const ComplexMatrix x0 = traceless_part(s.extension);
  const double norm0 = x0.norm();
  if (!(norm0 > 1e-14 * std::max(1.0, s.extension.norm()))) {
    r.verdict = Verdict::kNoExtension;
    r.evidence.reason = "extension is proportional to the identity";
    attach_oracle(r, s, false);
    return r;
  }
  r.evidence.membership_residual = basis.generators.residual(x0) / norm0;
  if (branch(r.evidence.membership_residual, n, tol, "membership residual") == Branch::kZero) {
    r.verdict = Verdict::kNoExtension;
    r.evidence.reason = "extension lies in the family Lie algebra";
    attach_oracle(r, s, false);
    return r;
  }
  if (full_regime(desc)) {
    r.verdict = Verdict::kFullUnitary;
    r.evidence.reason = "no invariant vector in this regime";
    attach_oracle(r, s, false);
    return r;
  }
  const auto psi = invariant_vector(desc);
  record_form(r.evidence, psi);
  const double res = annihilation_residual(s.extension, psi) / norm0;
  r.evidence.residual = res;
  if (branch(res, n, tol, "annihilation residual") == Branch::kNonzero) {
    r.verdict = Verdict::kFullUnitary;
    r.evidence.reason = "extension does not annihilate the invariant vector";
    attach_oracle(r, s, false);
    return r;
  }
  if (exceptional(desc)) {
    r.verdict = Verdict::kIndeterminateExceptional;
    r.evidence.reason = "two-mode bosons at N = 6 are not classified; oracle dimension reported";
    attach_oracle(r, s, true);
    return r;
  }
  r.verdict = middle(psi.form_type);
  r.evidence.reason = "extension annihilates the invariant vector";
  attach_oracle(r, s, false);
  return r;
}

ClassificationResult classify_gate(const Scenario& s) {
  validate(s);
  if (s.kind != ExtensionKind::kGate) fail(ErrorCode::kInvalidArgument, "scenario extension is not a gate");
  if (!is_unitary(s.extension, 1e-9)) fail(ErrorCode::kNonUnitary, "gate extension is not unitary");
  ClassificationResult r;
  if (auto why = guard(s.descriptor)) {
    r.verdict = Verdict::kNotApplicable;
    r.evidence.reason = *why;
    return r;
  }
  const auto& desc = s.descriptor;
  const auto n = static_cast<Eigen::Index>(sector_dim(desc));
  const double tol = s.options.tolerance;
  const auto basis = lie_basis(s.family, desc);
  const Operator v{desc, s.extension};
  r.evidence.membership_residual = normalizer_residual(s.extension, basis);
  const bool norm = branch(r.evidence.membership_residual, n, tol, "normalizer residual") == Branch::kZero;
  r.evidence.normalizes = norm;
  const bool half = desc.kind == SectorKind::kFermionic && desc.modes == 2 * desc.n();
  if (norm) {
    if (half) {
      const auto a = automorphism_type(v, basis);
      r.evidence.automorphism = a;
      if (a == AutomorphismType::kOuter) {
        r.verdict = Verdict::kLofPlusParticleHole;
        r.evidence.reason = "gate normalizes the family through the outer automorphism";
        attach_oracle(r, s, false);
        return r;
      }
    }
    r.verdict = Verdict::kNoExtension;
    r.evidence.reason = "gate normalizes the family";
    attach_oracle(r, s, false);
    return r;
  }
  if (full_regime(desc)) {
    r.verdict = Verdict::kFullUnitary;
    r.evidence.reason = "gate does not normalize the family and no invariant vector exists";
    attach_oracle(r, s, false);
    return r;
  }
  const auto psi = invariant_vector(desc);
  record_form(r.evidence, psi);
  const double res = eigenvector_residual(s.extension, psi);
  r.evidence.residual = res;
  if (branch(res, n, tol, "eigenvector residual") == Branch::kNonzero) {
    r.verdict = Verdict::kFullUnitary;
    r.evidence.reason = "gate moves the invariant vector off its ray";
    attach_oracle(r, s, false);
    return r;
  }
  if (exceptional(desc)) {
    r.verdict = Verdict::kIndeterminateExceptional;
    r.evidence.reason = "two-mode bosons at N = 6 are not classified; oracle dimension reported";
    attach_oracle(r, s, true);
    return r;
  }
  r.verdict = middle(psi.form_type);
  r.evidence.reason = "gate preserves the invariant vector up to phase";
  attach_oracle(r, s, false);
  return r;
}

ClassificationResult classify(const Scenario& s) {
  return s.kind == ExtensionKind::kHamiltonian ? classify_hamiltonian(s) : classify_gate(s);
}

bool cross_kerr_predicate(int particles, double t) {
  if (particles < 2) fail(ErrorCode::kInvalidArgument, "cross_kerr_predicate needs N >= 2");
  for (int k = 0; k <= particles; ++k) {
    for (int l = 0; l <= particles; ++l) {
      const double theta = 2.0 * t * (l * (particles - l) - k * (particles - k));
      if (std::abs(std::polar(1.0, theta) - Complex(1.0, 0.0)) > 1e-10) return true;
    }
  }
  return false;
}

Operator cross_kerr_gate(int particles, double t) {
  const auto desc = SectorDescriptor::bosonic(2, particles);
  HamiltonianSpec spec;
  spec.add(Complex(1.0, 0.0), {tokens::n(1), tokens::n(2)});
  const ComplexMatrix h = assemble_matrix(spec, desc);
  return Operator{desc, matexp(Complex(0.0, -t) * h)};
}

bool consistent(Verdict v, const std::optional<FormType>& form, const GroupId& group) {
  switch (v) {
    case Verdict::kNotApplicable:
      return group.tag == GroupTag::kLieFamily || group.tag == GroupTag::kFullSU;
    case Verdict::kNoExtension:
    case Verdict::kLofPlusParticleHole:
      return group.tag == GroupTag::kLieFamily;
    case Verdict::kFullUnitary:
      return group.tag == GroupTag::kFullSU;
    case Verdict::kMiddleOrthogonal:
      return group.tag == GroupTag::kSO && form == FormType::kSymmetric;
    case Verdict::kMiddleSymplectic:
      return group.tag == GroupTag::kUSp && form == FormType::kAntisymmetric;
    case Verdict::kIndeterminateExceptional:
      return group.dim == 14 || group.dim == 21 || group.dim == 48;
  }
  return false;
}

CrossValidation cross_validate(const Scenario& s) {
  if (static_cast<Eigen::Index>(sector_dim(s.descriptor)) > kOracleMaxDim) {
    fail(ErrorCode::kOracleScope, "cross validation is limited to sector dimension <= 32");
  }
  Scenario quiet = s;
  quiet.options.oracle = false;
  CrossValidation out;
  out.classification = classify(quiet);
  out.oracle = run_oracle(s);
  if (!out.oracle.converged) fail(ErrorCode::kOracleInconclusive, "oracle closure did not converge");
  if (!consistent(out.classification.verdict, out.classification.evidence.form_type, out.oracle.group)) {
    std::ostringstream os;
    os << "classifier verdict " << to_string(out.classification.verdict) << " (membership residual "
       << out.classification.evidence.membership_residual;
    if (out.classification.evidence.residual) os << ", residual " << *out.classification.evidence.residual;
    if (out.classification.evidence.form_type) os << ", form " << to_string(*out.classification.evidence.form_type);
    os << ") disagrees with oracle " << out.oracle.group.to_string() << " after " << out.oracle.rounds
       << " rounds on " << s.descriptor.to_string();
    fail(ErrorCode::kCrossValidationMismatch, os.str());
  }
  return out;
}

}  // namespace unikit
