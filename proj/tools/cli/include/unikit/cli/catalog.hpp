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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unikit/classifier.hpp"
#include "unikit/hamiltonian_spec.hpp"

namespace unikit::catalog {

/// n_1^3 - n_2^3 on two bosonic modes.
HamiltonianSpec cubic_difference();

/// Correlated hopping on d = 2N fermionic modes: for j = 1..N-1,
/// (n_{2j} - n_{2j+2})^2 (f^dag_{2j-1} f_{2j+1} + h.c.)
///   + (n_{2j-1} - n_{2j+1})^2 (f^dag_{2j} f_{2j+2} + h.c.),
/// with (n_a - n_b)^2 expanded as n_a + n_b - 2 n_a n_b.
HamiltonianSpec correlated_hopping(int particles);

/// The individual summands of correlated_hopping, one spec each.
std::vector<HamiltonianSpec> correlated_hopping_terms(int particles);

/// m_1 m_2 m_3 m_4.
HamiltonianSpec majorana_quartic();

/// sum_{k,l} alpha_kl f^dag_k f_l + beta_kl n_k n_l with alpha Hermitian and
/// beta real, entries standard normal.
HamiltonianSpec random_two_mode(int modes, std::mt19937_64& rng);

/// n_1 n_2.
HamiltonianSpec cross_kerr();

struct ReproCase {
  std::string label;
  Scenario scenario;
  Verdict expected;
};

/// The canned desk-scale example scenarios.
std::vector<ReproCase> repro_cases();

}  // namespace unikit::catalog
