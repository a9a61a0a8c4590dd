// Copyright 2026 The gcap Authors
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

// Serial reference vs OpenMP kernels.

#include <vector>

#include <benchmark/benchmark.h>

#include "gcap/activation.hpp"
#include "gcap/sweep.hpp"

namespace {

std::vector<double> gprime_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = 1.0 + 49.0 * i / (n - 1);
  return g;
}

void BM_NoiseProfileSerial(benchmark::State& state) {
  const auto grid = gprime_grid(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcap::noise_profile_serial(1.8, 2.0, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NoiseProfileSerial)->Arg(1 << 12)->Arg(1 << 18);

void BM_NoiseProfileParallel(benchmark::State& state) {
  const auto grid = gprime_grid(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcap::noise_profile_parallel(1.8, 2.0, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NoiseProfileParallel)->Arg(1 << 12)->Arg(1 << 18);

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = gcap::figure_spec("fig2c");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcap::run_sweep_serial(spec));
  }
  state.SetItemsProcessed(state.iterations() * spec.row_count());
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = gcap::figure_spec("fig2c");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcap::run_sweep(spec, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * spec.row_count());
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
