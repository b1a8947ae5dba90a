/*
 * Copyright 2026 The calib Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "calib/decision.h"
#include "calib/distance.h"
#include "calib/weighted.h"

namespace calib {
namespace {

EmpiricalJoint MakeJoint(std::size_t values, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < values; ++i) {
    const double v = u(rng);
    const double frac = u(rng);
    const double m = u(rng) + 0.1;
    atoms.push_back({v, 1, m * frac});
    atoms.push_back({v, 0, m * (1.0 - frac)});
  }
  double total = 0.0;
  for (const Atom& a : atoms) total += a.mass;
  for (Atom& a : atoms) a.mass /= total;
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

FiniteInstance MakeInstance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<InstancePoint> points;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back({std::to_string(i), 1.0 / static_cast<double>(n), u(rng),
                      u(rng)});
  }
  return FiniteInstance::Create(std::move(points));
}

void BM_SmoothCeChain(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(SmoothCe(j));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmoothCeChain)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_SmoothCeProgram(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SmoothCe(j, SmoothCeMethod::kLinearProgram));
  }
}
BENCHMARK(BM_SmoothCeProgram)->RangeMultiplier(2)->Range(8, 128);

void BM_EmdLadder(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(state.range(0), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EmdJoints(j, EmdMethod::kLadderFlow));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EmdLadder)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_EmdTransport(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(state.range(0), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EmdJoints(j, EmdMethod::kTransportLp));
  }
}
BENCHMARK(BM_EmdTransport)->RangeMultiplier(2)->Range(4, 32);

void BM_Cdl(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Cdl(j));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Cdl)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_IntceOpt(benchmark::State& state) {
  const EmpiricalJoint j = MakeJoint(50, 4);
  for (auto _ : state) benchmark::DoNotOptimize(IntceOpt(j, state.range(0)));
}
BENCHMARK(BM_IntceOpt)->Arg(100)->Arg(1000)->Arg(4000);

void BM_DceOracle(benchmark::State& state) {
  const FiniteInstance inst = MakeInstance(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(DceOracle(inst));
}
BENCHMARK(BM_DceOracle)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace calib

BENCHMARK_MAIN();
