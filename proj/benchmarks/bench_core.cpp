// Copyright 2026 The jumpfeed Authors
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

#include "jumpfeed/jumpfeed.hpp"

using namespace jumpfeed;

namespace {

const SystemParams kDefaults{1.0, 1.0, 1.0, 0.5};

Mat4 plus_plus() { return InitialState(InitialStateName::kPlusPlus).density().matrix(); }

void BM_MasterEquationRhs(benchmark::State& state) {
  const MasterEquation eq(kDefaults, {1.2, 0.0, 0.0});
  const Mat4 rho = plus_plus();
  for (auto _ : state) benchmark::DoNotOptimize(eq(rho));
}
BENCHMARK(BM_MasterEquationRhs);

void BM_Rk4Step(benchmark::State& state) {
  const MasterEquation eq(kDefaults, {1.2, 0.0, 0.0});
  Mat4 rho = plus_plus();
  for (auto _ : state) {
    rho = rk4_step(std::cref(eq), rho, 1e-3);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_Concurrence(benchmark::State& state) {
  const MasterEquation eq(kDefaults, {1.2, 0.0, 0.0});
  const Mat4 rho = evolve(DensityMatrix4(plus_plus()), std::cref(eq), {1e-3, 2.0, 1 << 30}).states.back();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_TrajectoryStep(benchmark::State& state) {
  const TrajectoryStepper stepper(kDefaults, {1.2, 0.0, 0.0}, 1e-3);
  std::mt19937_64 rng(1);
  PureState4 psi = to_pure_state(DensityMatrix4(plus_plus()));
  for (auto _ : state) {
    psi = stepper.step(psi, rng).state;
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_TrajectoryStep);

void BM_EvolveTenUnits(benchmark::State& state) {
  const MasterEquation eq(kDefaults, {1.2, 0.0, 0.0});
  const DensityMatrix4 rho0(plus_plus());
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho0, std::cref(eq), {1e-3, 10.0, 10}));
}
BENCHMARK(BM_EvolveTenUnits)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
