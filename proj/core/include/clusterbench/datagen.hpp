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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "clusterbench/linalg.hpp"
#include "clusterbench/metrics.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::datagen {

// Law of the F x m factor G whose Gram matrix G G^T becomes a class covariance.
// Entries are i.i.d. normal with mean moment_mean / sqrt(m) and standard deviation
// moment_sd / sqrt(m), so that E[R] = moment_mean^2 * 11^T + moment_sd^2 * I.
struct CovarianceLaw {
  double moment_mean = 0.0;
  double moment_sd = 1.0;
  std::size_t inner_dim = 0;  // m; 0 means m = F
};

struct ClassModel {
  linalg::SymmetricMatrix covariance;
  std::vector<double> shift;  // each coordinate in [-1, 1]
  double alpha = 1.0;         // samples are divided by alpha before the shift
};

struct DatasetSpec {
  std::size_t num_classes = 2;
  std::size_t num_features = 2;
  std::size_t objects_per_class = 50;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::size_t realization_index = 0;
};

struct Dataset {
  linalg::Matrix features;  // N x F, rows grouped by class in label order
  std::vector<int> labels;
  DatasetSpec spec;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t num_features() const noexcept { return features.cols(); }
  metrics::Partition truth() const;
  // "DB<C>C<F>F-Ne<Ne>-r<r>"
  std::string id() const;
};

// "DB<C>C<F>F"
std::string corpus_name(std::size_t num_classes, std::size_t num_features);

// R = G G^T with G drawn from `law`. Throws invalid_dimension for F = 0.
linalg::SymmetricMatrix generate_covariance(std::size_t num_features, const CovarianceLaw& law, Rng& rng);
linalg::SymmetricMatrix generate_covariance(std::size_t num_features, double moment_mean, double moment_sd,
                                            Rng& rng);

// n rows of N(0, R) / alpha + shift, using the symmetric PSD square root of R.
// Throws invalid_model for a non-PSD covariance, a shift outside [-1, 1] or alpha <= 0.
linalg::Matrix generate_class(const ClassModel& model, std::size_t n, Rng& rng);

// Every class draws its own covariance and shift from a generator seeded by
// derive_seed(derive_seed(seed, C, F, Ne, realization), class). Alpha is not part of
// the seed, so changing alpha rescales the same underlying draws.
Dataset generate_dataset(const DatasetSpec& spec, const CovarianceLaw& law = {});

struct GridCell {
  std::size_t num_classes;
  std::size_t num_features;
  std::size_t objects_per_class;
  double alpha;
};

// C in {2, 10, 50} x F in {2, 10, 50} x Ne in {5, 50, 100}, all with the given alpha.
std::vector<GridCell> full_grid(double alpha = 1.0);

// |grid| * realizations datasets, cell-major then realization order.
std::vector<Dataset> generate_corpus(std::span<const GridCell> grid, std::size_t realizations,
                                     std::uint64_t base_seed, const CovarianceLaw& law = {});

using Probe = std::function<metrics::Partition(const Dataset&)>;

struct TuneOptions {
  double low = 0.05;
  double high = 0.95;
  int max_iter = 30;
  double initial_alpha = 1.0;
  std::size_t pilot_realizations = 3;
};

struct TuneResult {
  double alpha = 0.0;
  double score = 0.0;  // mean probe ARI over the pilot set
  int evaluations = 0;
};

// Finds alpha whose mean probe ARI over a pilot set lies strictly inside (low, high).
// Brackets by doubling/halving, then bisects in log(alpha). Pilot datasets use a
// seed derived from spec.seed, so they never coincide with corpus realizations.
// Throws TuningFailed with the closest alpha seen.
TuneResult tune_alpha(const DatasetSpec& spec, const Probe& probe, const TuneOptions& options = {},
                      const CovarianceLaw& law = {});

}  // namespace clusterbench::datagen
