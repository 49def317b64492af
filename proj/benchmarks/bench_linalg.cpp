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

#include "clusterbench/linalg.hpp"
#include "clusterbench/random.hpp"

namespace {

using clusterbench::linalg::Matrix;
using clusterbench::linalg::SymmetricMatrix;

SymmetricMatrix random_gram(std::size_t n) {
  clusterbench::Rng rng(17);
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (double& v : a.data()) v = g(rng);
  return SymmetricMatrix::gram(a);
}

void BM_Eigh(benchmark::State& state) {
  const auto m = random_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clusterbench::linalg::eigh(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigh)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_Cholesky(benchmark::State& state) {
  auto m = random_gram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clusterbench::linalg::cholesky(m));
}
BENCHMARK(BM_Cholesky)->Arg(10)->Arg(50)->Arg(200);

}  // namespace
