// Copyright 2026 The orientwalk Authors.
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

#include "orientwalk/embedding.hpp"
#include "orientwalk/estimators.hpp"
#include "orientwalk/lattice_walk.hpp"
#include "orientwalk/orientation.hpp"
#include "orientwalk/random.hpp"
#include "orientwalk/scenery.hpp"

namespace ow = orientwalk;

static void BM_StreamNext(benchmark::State& state) {
  ow::RandomStream s = ow::derive_stream(ow::StreamKey(1));
  for (auto _ : state) benchmark::DoNotOptimize(s.next_u64());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StreamNext);

static void BM_StreamValueAt(benchmark::State& state) {
  const ow::RandomStream s = ow::derive_stream(ow::StreamKey(1));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(s.value_at(i++));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StreamValueAt);

static void BM_EnvironmentSample(benchmark::State& state) {
  const auto law = static_cast<ow::Law>(state.range(0));
  const ow::EnvSpec spec = law == ow::Law::kIsingNN ? ow::EnvSpec::ising_nn(0.5) : ow::EnvSpec{.law = law};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ow::OrientationEnvironment env(spec, ow::StreamKey(seed++));
    benchmark::DoNotOptimize(env.value(10000));
    benchmark::DoNotOptimize(env.value(-10000));
  }
  state.SetItemsProcessed(state.iterations() * 20001);
}
BENCHMARK(BM_EnvironmentSample)->Arg(static_cast<int>(ow::Law::kIid))->Arg(static_cast<int>(ow::Law::kIsingNN));

static void BM_IsingLongRange(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ow::OrientationEnvironment env(ow::EnvSpec::ising_lr(0.3, 1.0, 2.5, state.range(0), 20, 32), ow::StreamKey(seed++));
    benchmark::DoNotOptimize(env.value(0));
  }
}
BENCHMARK(BM_IsingLongRange)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_FullWalk(benchmark::State& state) {
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ow::OrientationEnvironment env(ow::EnvSpec::iid(), ow::StreamKey(seed, {0}));
    ow::RandomStream s = ow::derive_stream(ow::StreamKey(seed++, {1}));
    benchmark::DoNotOptimize(ow::simulate_walk(env, steps, s).stats.returns_to_origin);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullWalk)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_Embed(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ow::OrientationEnvironment env(ow::EnvSpec::ising_nn(0.5), ow::StreamKey(seed, {0}));
    ow::RandomStream s = ow::derive_stream(ow::StreamKey(seed++, {1}));
    benchmark::DoNotOptimize(ow::embed(env, n, s).x);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Embed)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_CoupledCheck(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ow::OrientationEnvironment env(ow::EnvSpec::iid(), ow::StreamKey(seed, {0}));
    ow::RandomStream s = ow::derive_stream(ow::StreamKey(seed++, {1}));
    benchmark::DoNotOptimize(ow::coupled_check(env, state.range(0), s));
  }
}
BENCHMARK(BM_CoupledCheck)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_DeltaDiscrete(benchmark::State& state) {
  const std::vector<double> times{0.5, 1.0, 2.0};
  ow::RandomStream s = ow::derive_stream(ow::StreamKey(2));
  for (auto _ : state) benchmark::DoNotOptimize(ow::sample_delta_discrete(4096, times, s).values.back());
}
BENCHMARK(BM_DeltaDiscrete)->Unit(benchmark::kMicrosecond);

static void BM_DeltaContinuum(benchmark::State& state) {
  const std::vector<double> times{1.0};
  ow::RandomStream s = ow::derive_stream(ow::StreamKey(3));
  for (auto _ : state) benchmark::DoNotOptimize(ow::sample_delta_continuum(1e-4, 1e-2, times, s).values.back());
}
BENCHMARK(BM_DeltaContinuum)->Unit(benchmark::kMicrosecond);

static void BM_NewmanEnumeration(benchmark::State& state) {
  const std::vector<std::uint64_t> eta(static_cast<std::size_t>(state.range(0)), 3);
  const std::vector<double> t{0.01, 0.1, 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(ow::verify_newman_bound(0.5, 0, eta, t).all_hold());
}
BENCHMARK(BM_NewmanEnumeration)->Arg(9)->Arg(17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
