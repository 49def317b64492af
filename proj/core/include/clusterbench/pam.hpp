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

#include <cstddef>
#include <vector>

#include "clusterbench/cluster_types.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::cluster {

struct PamResult {
  std::vector<std::size_t> medoids;  // row indices into the dissimilarity matrix
  double objective = 0.0;            // sum of distances to the nearest medoid
  int swaps = 0;
  std::vector<double> trace;  // objective after BUILD, then after every accepted swap
};

// Partitioning around medoids: greedy BUILD, then best-improvement SWAP until no swap
// lowers the objective. Expects a symmetric non-negative matrix with zero diagonal.
// Ties go to the lowest index.
PamResult pam(const linalg::Matrix& dissimilarity, std::size_t k);

// Label of every row = position of its nearest medoid (lowest position on ties).
std::vector<int> assign_to_medoids(const linalg::Matrix& dissimilarity, const std::vector<std::size_t>& medoids);

struct ClaraOptions {
  std::size_t k = 2;
  int samples = 5;
  std::size_t sampsize = 0;  // 0 means min(N, 40 + 2k)
  Metric metric = Metric::euclidean;
};

// PAM on `samples` random subsamples; every subsample after the first also contains
// the best medoids so far. Keeps the medoid set with the lowest total dissimilarity
// over the full data. `trace` holds that running best after each sample.
// Throws invalid_sampsize unless k < sampsize <= N.
ClusterResult clara(const linalg::Matrix& data, const ClaraOptions& options, Rng& rng);

}  // namespace clusterbench::cluster
