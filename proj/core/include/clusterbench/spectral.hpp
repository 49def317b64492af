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

#include "clusterbench/cluster_types.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::cluster {

enum class Kernel { rbf, laplace, polynomial, linear };

Kernel parse_kernel(std::string_view name);

struct SpectralOptions {
  std::size_t k = 2;
  Kernel kernel = Kernel::rbf;
  // Multiplies the automatically chosen bandwidth (rbf, laplace) or the inner-product
  // normalizer (polynomial).
  double kernel_scale = 1.0;
  int iter = 200;
};

// Kernel values for every pair of rows:
//   rbf         exp(-|x-y|^2 / (2 sigma^2))
//   laplace     exp(-|x-y| / sigma)
//   polynomial  (1 + <x,y> / (sigma * mean |x|^2))^2
//   linear      max(0, <x,y>)
linalg::SymmetricMatrix affinity_matrix(const linalg::Matrix& data, Kernel kernel, double sigma);

// Bandwidth search on a subsample of ceil(N/6) rows: a grid of candidates built around
// the mean pairwise distance is scored by the within-cluster SS of the k-means step on
// the subsample embedding, and the best candidate wins.
double automatic_sigma(const linalg::Matrix& data, const SpectralOptions& options, Rng& rng);

// Normalized spectral clustering: embed with the k leading eigenvectors of
// D^-1/2 A D^-1/2, normalize rows, run k-means (nstart 5, iter_max = iter).
ClusterResult spectral(const linalg::Matrix& data, const SpectralOptions& options, Rng& rng);

}  // namespace clusterbench::cluster
