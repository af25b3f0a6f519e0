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

#include "unikit/cli/catalog.hpp"

#include <cmath>
#include <numbers>

#include "unikit/secondq.hpp"

namespace unikit::catalog {

using tokens::hop;
using tokens::n;

HamiltonianSpec cubic_difference() {
  HamiltonianSpec s;
  s.add(1.0, {n(1), n(1), n(1)});
  s.add(-1.0, {n(2), n(2), n(2)});
  return s;
}

namespace {

// (n_a - n_b)^2 (f^dag_p f_q + f^dag_q f_p)
HamiltonianSpec gated_hop(int a, int b, int p, int q) {
  HamiltonianSpec s;
  for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
    s.add(1.0, {n(a), hop(x, y)});
    s.add(1.0, {n(b), hop(x, y)});
    s.add(-2.0, {n(a), n(b), hop(x, y)});
  }
  return s;
}

}  // namespace

std::vector<HamiltonianSpec> correlated_hopping_terms(int particles) {
  std::vector<HamiltonianSpec> out;
  for (int j = 1; j < particles; ++j) {
    out.push_back(gated_hop(2 * j, 2 * j + 2, 2 * j - 1, 2 * j + 1));
    out.push_back(gated_hop(2 * j - 1, 2 * j + 1, 2 * j, 2 * j + 2));
  }
  return out;
}

HamiltonianSpec correlated_hopping(int particles) {
  HamiltonianSpec s;
  for (const auto& t : correlated_hopping_terms(particles)) {
    s.terms.insert(s.terms.end(), t.terms.begin(), t.terms.end());
  }
  return s;
}

HamiltonianSpec majorana_quartic() {
  HamiltonianSpec s;
  s.add(1.0, {tokens::maj(1), tokens::maj(2), tokens::maj(3), tokens::maj(4)});
  return s;
}

HamiltonianSpec random_two_mode(int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HamiltonianSpec s;
  for (int k = 1; k <= modes; ++k) {
    s.add(g(rng), {hop(k, k)});
    for (int l = k + 1; l <= modes; ++l) {
      const Complex a(g(rng), g(rng));
      s.add(a, {hop(k, l)});
      s.add(std::conj(a), {hop(l, k)});
    }
  }
  for (int k = 1; k <= modes; ++k) {
    for (int l = 1; l <= modes; ++l) s.add(g(rng), {n(k), n(l)});
  }
  return s;
}

HamiltonianSpec cross_kerr() {
  HamiltonianSpec s;
  s.add(1.0, {n(1), n(2)});
  return s;
}

std::vector<ReproCase> repro_cases() {
  std::vector<ReproCase> out;
  const double third = std::numbers::pi / 3.0;
  for (int N = 2; N <= 7; ++N) {
    out.push_back({"cross-Kerr t=pi/3, bosonic:2:" + std::to_string(N),
                   Scenario::gate(cross_kerr_gate(N, third)), Verdict::kFullUnitary});
  }
  for (int N = 2; N <= 8; ++N) {
    Verdict expected = N % 2 ? Verdict::kMiddleSymplectic : Verdict::kMiddleOrthogonal;
    // At N = 2 the cubic term is a multiple of J_z.
    if (N == 2) expected = Verdict::kNoExtension;
    if (N == 6) expected = Verdict::kIndeterminateExceptional;
    const auto desc = SectorDescriptor::bosonic(2, N);
    out.push_back({"n1^3 - n2^3, " + desc.to_string(),
                   Scenario::hamiltonian(build_operator(cubic_difference(), desc)), expected});
  }
  std::mt19937_64 rng(20260301);
  for (int i = 0; i < 3; ++i) {
    const auto desc = SectorDescriptor::fermionic(6, 3);
    out.push_back({"random two-mode H #" + std::to_string(i + 1) + ", " + desc.to_string(),
                   Scenario::hamiltonian(build_operator(random_two_mode(6, rng), desc)),
                   Verdict::kFullUnitary});
  }
  out.push_back({"correlated hopping, fermionic:6:3",
                 Scenario::hamiltonian(build_operator(correlated_hopping(3), SectorDescriptor::fermionic(6, 3))),
                 Verdict::kMiddleSymplectic});
  out.push_back({"correlated hopping, fermionic:8:4",
                 Scenario::hamiltonian(build_operator(correlated_hopping(4), SectorDescriptor::fermionic(8, 4))),
                 Verdict::kMiddleOrthogonal});
  for (int d = 4; d <= 6; ++d) {
    const auto desc = SectorDescriptor::fock_plus(d);
    out.push_back({"m1 m2 m3 m4, " + desc.to_string(),
                   Scenario::hamiltonian(build_operator(majorana_quartic(), desc)), Verdict::kFullUnitary});
  }
  return out;
}

}  // namespace unikit::catalog
