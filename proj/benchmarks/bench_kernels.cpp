// Copyright 2026 The hamrec Authors
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

#include "hamrec/examples.hpp"
#include "hamrec/forward.hpp"
#include "hamrec/reconstruct.hpp"
#include "hamrec/rng.hpp"
#include "hamrec/stereographic.hpp"

namespace {

using namespace hamrec;

void BM_HermitianEig(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix m = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    auto eig = hermitian_eig(m);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16);

void BM_ExpmHermitian(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ComplexMatrix h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    auto u = expm_i_hermitian(h, 0.1);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_ExpmHermitian)->Arg(4)->Arg(8);

void BM_Iwasawa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  ComplexMatrix m = ComplexMatrix::identity(n);
  for (int r = 1; r < n; ++r)
    for (int c = 0; c < r; ++c) m(r, c) = complex_gaussian(rng);
  const ZMatrix z = ZMatrix::from_matrix(m, ZMask::full(n));
  for (auto _ : state) {
    auto f = iwasawa(z);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Iwasawa)->Arg(4)->Arg(8);

void BM_ReconstructMixedQubit(benchmark::State& state) {
  const Trajectory traj = sample_trajectory(qubit_mixed(1.0), 0.0, 1.4, 101);
  for (auto _ : state) {
    auto rec = reconstruct_mixed(traj);
    benchmark::DoNotOptimize(rec.hamiltonian.hamiltonians.data());
  }
}
BENCHMARK(BM_ReconstructMixedQubit);

void BM_IntegrateQutrit(benchmark::State& state) {
  const ParametricExample ex = qutrit_pure(1.0);
  const HamiltonianTrajectory h =
      sample_reference_hamiltonian(ex, 0.0, 2.0 * M_PI, 201);
  const DensityMatrix rho0 = ex.state_at(0.0);
  for (auto _ : state) {
    auto traj = integrate(h, rho0, 4);
    benchmark::DoNotOptimize(traj.states.data());
  }
}
BENCHMARK(BM_IntegrateQutrit);

}  // namespace

BENCHMARK_MAIN();
