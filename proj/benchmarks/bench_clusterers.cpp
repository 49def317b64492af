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

#include <map>

#include "clusterbench/clusterer.hpp"
#include "clusterbench/datagen.hpp"

namespace {

using namespace clusterbench;

const datagen::Dataset& dataset(std::size_t objects_per_class) {
  static std::map<std::size_t, datagen::Dataset> cache;
  auto it = cache.find(objects_per_class);
  if (it == cache.end())
    it = cache.emplace(objects_per_class, datagen::generate_dataset({10, 10, objects_per_class, 1.75, 99, 0})).first;
  return it->second;
}

void run(benchmark::State& state, cluster::Algorithm a) {
  const auto& ds = dataset(static_cast<std::size_t>(state.range(0)));
  const cluster::ClustererConfig cfg(a, ds.spec.num_classes);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cluster::run_clusterer(cfg, ds, seed++));
  state.counters["N"] = static_cast<double>(ds.size());
}

void BM_KMeans(benchmark::State& s) { run(s, cluster::Algorithm::kmeans); }
void BM_Clara(benchmark::State& s) { run(s, cluster::Algorithm::clara); }
void BM_Hierarchical(benchmark::State& s) { run(s, cluster::Algorithm::hierarchical); }
void BM_EM(benchmark::State& s) { run(s, cluster::Algorithm::em); }
void BM_Spectral(benchmark::State& s) { run(s, cluster::Algorithm::spectral); }

BENCHMARK(BM_KMeans)->Arg(5)->Arg(50)->Arg(100);
BENCHMARK(BM_Clara)->Arg(5)->Arg(50)->Arg(100);
BENCHMARK(BM_Hierarchical)->Arg(5)->Arg(50)->Arg(100);
BENCHMARK(BM_EM)->Arg(5)->Arg(50);
BENCHMARK(BM_Spectral)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
