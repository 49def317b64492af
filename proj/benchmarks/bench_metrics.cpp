// Copyright 2026 The clusterbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "clusterbench/metrics.hpp"
#include "clusterbench/random.hpp"

namespace {

using clusterbench::metrics::Partition;

Partition random_partition(std::size_t n, int k, std::uint64_t seed) {
  clusterbench::Rng rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<int> labels(n);
  for (int& l : labels) l = pick(rng);
  return Partition(std::move(labels), k);
}

void BM_Score(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto u = random_partition(n, 10, 1);
  const auto v = random_partition(n, 12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(clusterbench::metrics::score(u, v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Score)->Arg(100)->Arg(5000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
