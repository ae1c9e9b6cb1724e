// Copyright 2025 Qilimanjaro Quantum Tech
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
#include <random>

#include <benchmark/benchmark.h>

#include "qgate/harness.hpp"
#include "qgate/lattice.hpp"
#include "qgate/operator.hpp"

namespace {

qgate::Operator random_hermitian(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  qgate::Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = qgate::cplx(n(rng), n(rng));
  }
  return qgate::Operator(0.5 * (a + a.adjoint()));
}

void BM_UnitaryExp(benchmark::State& state) {
  const auto h = random_hermitian(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(qgate::unitary_exp(h, 0.7));
}
BENCHMARK(BM_UnitaryExp)->Arg(2)->Arg(4)->Arg(10)->Arg(21);

void BM_AbstractGate(benchmark::State& state) {
  const auto gate = static_cast<qgate::GateKind>(state.range(0));
  qgate::AbstractSettings s;
  for (auto _ : state) benchmark::DoNotOptimize(qgate::run_abstract_gate(gate, s).error);
}
BENCHMARK(BM_AbstractGate)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TwoSiteHamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qgate::FockBasis basis(2, {n, n});
  qgate::LatticeParams p;
  p.u_ab = p.u_aa = 1.0;
  p.u_bb = 1e4;
  p.g = p.u_bb + 0.5;
  p.j_a = p.j_b = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(qgate::two_site_hamiltonian(basis, p, 2));
}
BENCHMARK(BM_TwoSiteHamiltonian)->Arg(1)->Arg(3)->Arg(5);

void BM_LatticeCnot(benchmark::State& state) {
  const qgate::LatticeSettings s;
  for (auto _ : state) benchmark::DoNotOptimize(qgate::run_lattice_cnot(1e4, 1, 1, s).error);
}
BENCHMARK(BM_LatticeCnot)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
