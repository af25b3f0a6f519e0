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

#include <optional>
#include <string>
#include <vector>

#include "unikit/closure.hpp"
#include "unikit/invariants.hpp"
#include "unikit/operator.hpp"
#include "unikit/reps.hpp"

namespace unikit {

enum class Verdict {
  kNotApplicable,
  kNoExtension,
  kFullUnitary,
  kMiddleOrthogonal,
  kMiddleSymplectic,
  kLofPlusParticleHole,
  kIndeterminateExceptional,
};

const char* to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

enum class ExtensionKind { kHamiltonian, kGate };
const char* to_string(ExtensionKind k);

struct ScenarioOptions {
  /// Zero branch: residual < tolerance * n. Nonzero branch: residual >
  /// 100 * tolerance * n. In between the result is numerically ambiguous.
  double tolerance = 1e-8;
  bool oracle = false;
  int max_power = 3;
  int max_rounds = 12;

  friend bool operator==(const ScenarioOptions&, const ScenarioOptions&) = default;
};

struct Scenario {
  SectorDescriptor descriptor;
  Family family = Family::kLOB;
  ExtensionKind kind = ExtensionKind::kHamiltonian;
  ComplexMatrix extension;
  ScenarioOptions options;

  static Scenario hamiltonian(const Operator& x, ScenarioOptions options = {});
  static Scenario gate(const Operator& v, ScenarioOptions options = {});
};

struct OracleEvidence {
  std::size_t dim = 0;
  GroupId group;
  bool converged = false;
  int rounds = 0;
  std::size_t seeds = 0;

  friend bool operator==(const OracleEvidence&, const OracleEvidence&) = default;
};

struct Evidence {
  double membership_residual = 0.0;
  /// Annihilation residual (Hamiltonians) or eigenvector residual (gates).
  std::optional<double> residual;
  std::optional<FormType> form_type;
  std::optional<bool> normalizes;
  std::optional<AutomorphismType> automorphism;
  std::optional<OracleEvidence> oracle;
  std::vector<std::string> discrepancy_flags;
  std::string reason;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct ClassificationResult {
  Verdict verdict = Verdict::kNotApplicable;
  Evidence evidence;

  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

ClassificationResult classify_hamiltonian(const Scenario& s);
ClassificationResult classify_gate(const Scenario& s);
ClassificationResult classify(const Scenario& s);

/// Closure oracle for the scenario: family plus X for Hamiltonians, gate
/// seeds for gates. An unconverged closure is reported with tag OTHER.
OracleEvidence run_oracle(const Scenario& s);

/// Whether V_t = exp(-i t n_1 n_2) moves psi_b(N) off its own ray.
bool cross_kerr_predicate(int particles, double t);

/// exp(-i t n_1 n_2) on bosonic(2, N).
Operator cross_kerr_gate(int particles, double t);

struct CrossValidation {
  ClassificationResult classification;
  OracleEvidence oracle;
};

/// Classifier verdict against the oracle group. Throws
/// kCrossValidationMismatch when they disagree.
CrossValidation cross_validate(const Scenario& s);

/// True if the verdict and the oracle group are consistent.
bool consistent(Verdict v, const std::optional<FormType>& form, const GroupId& group);

}  // namespace unikit
