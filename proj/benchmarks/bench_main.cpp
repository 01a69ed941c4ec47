// Copyright 2026 The gmeseq Authors
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
#include <vector>

#include <benchmark/benchmark.h>

#include "gmeseq/analytic.hpp"
#include "gmeseq/dense.hpp"
#include "gmeseq/planner.hpp"
#include "gmeseq/states.hpp"
#include "gmeseq/witness.hpp"

namespace {

using namespace gmeseq;

void BM_LudersUpdate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto rho = random_density_matrix(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(luders_update(rho, 0.4, n - 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LudersUpdate)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_LudersClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto rho = random_density_matrix(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(luders_update_closed_form(rho, 0.4, n - 1));
  }
}
BENCHMARK(BM_LudersClosedForm)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_BuildWitness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto family =
      state.range(1) == 0 ? StabilizerFamily::GHZ : StabilizerFamily::Cluster;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_witness(family, n, 0.3));
  }
}
BENCHMARK(BM_BuildWitness)
    ->ArgsProduct({{4, 6, 8, 10}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_WitnessToDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = build_witness(StabilizerFamily::GHZ, n, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_dense(w));
  }
}
BENCHMARK(BM_WitnessToDense)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_SymbolicExpectation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = make_ghz(n);
  const auto w = build_witness(StabilizerFamily::GHZ, n, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(rho, w));
  }
}
BENCHMARK(BM_SymbolicExpectation)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_AnalyticWitnessValue(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto s = generate_schedule(1e-6, kDefaultEpsilon, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ghz_witness_value(s.size(), s.values));
  }
}
BENCHMARK(BM_AnalyticWitnessValue)->Arg(8)->Arg(25);

void BM_MinSharpnessFor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_sharpness_for(n, kDefaultEpsilon));
  }
}
BENCHMARK(BM_MinSharpnessFor)->Arg(2)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
