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

#pragma once

#include <cstdint>

#include "clusterbench/cluster_types.hpp"
#include "clusterbench/datagen.hpp"
#include "clusterbench/params.hpp"

namespace clusterbench::cluster {

ProblemShape shape_of(const linalg::Matrix& data, std::size_t k);

// Validates `config` against the data shape and runs the configured algorithm with a
// generator seeded from `seed`. Deterministic in (data, config, seed).
ClusterResult run_clusterer(const ClustererConfig& config, const linalg::Matrix& data, std::uint64_t seed);

ClusterResult run_clusterer(const ClustererConfig& config, const datagen::Dataset& dataset, std::uint64_t seed);

// Probe for tune_alpha: runs `config` with k = number of classes of each dataset.
datagen::Probe make_probe(ClustererConfig config, std::uint64_t seed);

}  // namespace clusterbench::cluster
