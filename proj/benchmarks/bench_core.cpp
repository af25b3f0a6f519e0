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

#include <benchmark/benchmark.h>

#include <random>

#include "unikit/classifier.hpp"
#include "unikit/closure.hpp"
#include "unikit/invariants.hpp"
#include "unikit/secondq.hpp"

namespace {

using namespace unikit;

ComplexMatrix random_hermitian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n * n; ++i) a.data()[i] = Complex(g(rng), g(rng));
  return (a + a.adjoint()) / 2.0;
}

HamiltonianSpec kerr() {
  HamiltonianSpec s;
  s.add(1.0, {"n:1", "n:2"});
  return s;
}

void BM_Matexp(benchmark::State& state) {
  const ComplexMatrix a = Complex(0.0, 1.0) * random_hermitian(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(matexp(a));
}
BENCHMARK(BM_Matexp)->Arg(8)->Arg(20)->Arg(70);

void BM_BuildOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = SectorDescriptor::fermionic(2 * n, n);
  HamiltonianSpec s;
  for (int k = 1; k < 2 * n; ++k) s.add(1.0, {"n:" + std::to_string(k), "n:" + std::to_string(k + 1)});
  for (auto _ : state) benchmark::DoNotOptimize(build_operator(s, d));
}
BENCHMARK(BM_BuildOperator)->Arg(3)->Arg(4)->Arg(5);

void BM_AnnihilationResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = SectorDescriptor::fermionic(2 * n, n);
  const auto psi = psi_f(n);
  const auto x = build_operator(kerr(), d);
  for (auto _ : state) benchmark::DoNotOptimize(annihilation_residual(x.matrix, psi));
}
BENCHMARK(BM_AnnihilationResidual)->Arg(3)->Arg(4)->Arg(5);

void BM_LieClosure(benchmark::State& state) {
  const auto d = SectorDescriptor::fermionic(static_cast<int>(state.range(0)), 2);
  auto seeds = lie_basis(Family::kLOF, d).generators.elements();
  seeds.push_back(build_operator(kerr(), d).matrix);
  for (auto _ : state) benchmark::DoNotOptimize(lie_closure(seeds));
}
BENCHMARK(BM_LieClosure)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ClassifyHamiltonian(benchmark::State& state) {
  const auto d = SectorDescriptor::bosonic(2, static_cast<int>(state.range(0)));
  const auto s = Scenario::hamiltonian(build_operator(kerr(), d));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_ClassifyHamiltonian)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
