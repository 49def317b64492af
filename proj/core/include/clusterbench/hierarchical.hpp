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
#include <string_view>
#include <vector>

#include "clusterbench/cluster_types.hpp"

namespace clusterbench::cluster {

enum class Linkage { average, single, complete, ward, weighted };

Linkage parse_linkage(std::string_view name);

struct Merge {
  std::size_t left;   // surviving slot (the smaller index)
  std::size_t right;  // absorbed slot
  double height;
};

struct Dendrogram {
  std::size_t n = 0;
  std::vector<Merge> merges;  // n - 1 merges in agglomeration order
};

// Agglomerative clustering with Lance-Williams updates. At every step the pair of
// active clusters with minimum dissimilarity is merged; ties go to the lowest (i, j).
// Ward uses the update on the supplied dissimilarities as-is.
Dendrogram agglomerate(const linalg::Matrix& dissimilarity, Linkage linkage);

// Undoes the last k - 1 merges. Labels are numbered by first appearance.
metrics::Partition cut_tree(const Dendrogram& tree, std::size_t k);

struct HierarchicalOptions {
  std::size_t k = 2;
  Metric metric = Metric::euclidean;
  Linkage method = Linkage::average;
  // Accepted for parity with the agnes interface; none of the linkages above reads it.
  double par_method = 0.0;
};

ClusterResult hierarchical(const linalg::Matrix& data, const HierarchicalOptions& options);

}  // namespace clusterbench::cluster
