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

#include "clusterbench/cluster_types.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::cluster {

enum class KMeansVariant { lloyd, macqueen };

KMeansVariant parse_kmeans_variant(std::string_view name);

struct KMeansOptions {
  std::size_t k = 2;
  int iter_max = 10;
  int nstart = 1;
  KMeansVariant variant = KMeansVariant::lloyd;
};

// Runs `nstart` restarts from k distinct random objects and keeps the run with the
// smallest within-cluster sum of squares. A cluster that empties is reseeded at the
// object farthest from its own centroid. Throws invalid_k unless 1 <= k <= N.
ClusterResult kmeans(const linalg::Matrix& data, const KMeansOptions& options, Rng& rng);

// Within-cluster sum of squared Euclidean distances to the cluster means.
double within_cluster_ss(const linalg::Matrix& data, std::span<const int> labels, std::size_t k);

}  // namespace clusterbench::cluster
