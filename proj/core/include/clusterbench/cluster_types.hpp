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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterbench/linalg.hpp"
#include "clusterbench/metrics.hpp"

namespace clusterbench::cluster {

struct ClusterResult {
  metrics::Partition partition;
  // SSE (k-means), total dissimilarity (clara), last merge height (hierarchical),
  // penalized log-likelihood (EM), embedding SSE (spectral).
  double objective = 0.0;
  int iterations_used = 0;
  bool converged = false;
  // Objective after each iteration of the reported run.
  std::vector<double> trace;
  // Set when the algorithm had to patch its input (e.g. zero-degree vertices in spectral).
  bool flagged = false;
};

enum class Metric { euclidean, manhattan };

Metric parse_metric(std::string_view name);

double distance(std::span<const double> a, std::span<const double> b, Metric metric) noexcept;
double squared_euclidean(std::span<const double> a, std::span<const double> b) noexcept;

// Symmetric N x N dissimilarities with an exact zero diagonal.
linalg::Matrix dissimilarity_matrix(const linalg::Matrix& data, Metric metric);

// Relabels to [0, K) in order of first appearance.
std::vector<int> canonical_labels(std::span<const int> labels);

}  // namespace clusterbench::cluster
