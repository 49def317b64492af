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

#include "clusterbench/datagen.hpp"
#include "clusterbench/linalg.hpp"
#include "clusterbench/metrics.hpp"
#include "clusterbench/params.hpp"

namespace clusterbench::sweep {

using cluster::Algorithm;
using cluster::ParamValue;

// Runs fn(0..n-1) on `workers` threads pulling from a shared counter. The first
// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct RunRecord {
  std::string dataset_id;
  std::size_t num_classes = 0;
  std::size_t num_features = 0;
  std::size_t objects_per_class = 0;
  Algorithm algorithm = Algorithm::kmeans;
  std::size_t k = 0;
  std::string config;       // ClustererConfig::label()
  std::int64_t index = -1;  // grid point or draw; -1 for the default configuration
  metrics::Scores scores;
  bool failed = false;
  std::string error;
  double wall_seconds = 0.0;
};

// Every configuration of one algorithm on one dataset shares this seed.
std::uint64_t clustering_seed(std::uint64_t master, const std::string& dataset_id, Algorithm a);

// Runs `config` on `dataset`; library errors are caught and reported in the record.
RunRecord evaluate(const datagen::Dataset& dataset, const cluster::ClustererConfig& config, std::uint64_t master_seed,
                   std::int64_t index = -1);

// Sorts by (dataset id, algorithm, k, index).
void sort_records(std::vector<RunRecord>& records);

enum class Index { jaccard, ari, fowlkes_mallows, nmi };
inline constexpr Index kAllIndices[] = {Index::jaccard, Index::ari, Index::fowlkes_mallows, Index::nmi};
std::string_view to_string(Index i) noexcept;
double index_value(const metrics::Scores& s, Index i) noexcept;

struct GroupMean {
  std::string factor;       // "F" or "Ne"
  std::size_t level = 0;    // feature count or objects per class
  Algorithm algorithm = Algorithm::kmeans;
  metrics::Scores mean;
  std::size_t runs = 0;
  std::size_t missing = 0;
};

struct IndexTable {
  Index index = Index::ari;
  std::vector<double> macc;   // per algorithm, mean over successful runs
  linalg::Matrix difference;  // (i, j) = macc[i] - macc[j]
};

struct DefaultReport {
  std::vector<Algorithm> algorithms;
  std::vector<RunRecord> records;
  std::vector<GroupMean> groups;
  std::vector<IndexTable> tables;  // one per index, in kAllIndices order
  std::vector<std::string> missing;
};

// Pure aggregation over already computed records.
DefaultReport summarize_default(std::vector<RunRecord> records, std::span<const Algorithm> algorithms);

// Every algorithm once per dataset with default parameters and k = C.
DefaultReport run_default(std::span<const datagen::Dataset> corpus, std::span<const Algorithm> algorithms,
                          const RunOptions& options);
// As above with per-algorithm overrides; each config's k is replaced by the dataset's C.
DefaultReport run_default(std::span<const datagen::Dataset> corpus, std::span<const cluster::ClustererConfig> configs,
                          const RunOptions& options);

struct KCurvePoint {
  Algorithm algorithm = Algorithm::kmeans;
  std::size_t k = 0;
  double mean_ari = 0.0;
  double mean_jaccard = 0.0;
  std::size_t runs = 0;
};

struct VaryKReport {
  std::vector<RunRecord> records;
  std::vector<KCurvePoint> curve;
  std::vector<std::size_t> true_classes;  // distinct C in the corpus
  std::vector<std::string> skipped;
};

VaryKReport vary_k(std::span<const datagen::Dataset> corpus, std::span<const Algorithm> algorithms,
                   std::span<const std::size_t> k_values, const RunOptions& options);
VaryKReport vary_k(std::span<const datagen::Dataset> corpus, std::span<const cluster::ClustererConfig> configs,
                   std::span<const std::size_t> k_values, const RunOptions& options);

struct OneDimSummary {
  Algorithm algorithm = Algorithm::kmeans;
  std::string parameter;
  double mean_gain = 0.0;  // <S>
  double sd_gain = 0.0;    // Delta S, population form
  double max_gain = 0.0;   // max S
  double mean_best = 0.0;  // <max Acc>
  std::size_t grid_size = 0;
};

struct OneDimTrace {
  Algorithm algorithm = Algorithm::kmeans;
  std::string parameter;
  ParamValue default_value;
  double gamma_default = 0.0;
  std::vector<ParamValue> grid;  // ascending for numeric parameters
  std::vector<double> gamma;     // mean ARI over the corpus per grid value
  // ari[g][d]: dataset d at grid value g.
  std::vector<std::vector<double>> ari;
};

struct OneDimResult {
  OneDimTrace trace;
  OneDimSummary summary;
  std::vector<RunRecord> records;
};

// <S>, Delta S, max S over the grid; <max Acc> from per-dataset ARIs.
OneDimSummary summarize_one_dim(double gamma_default, std::span<const double> gamma,
                                std::span<const std::vector<double>> ari);

// Ten values over the parameter range (geometric for log-scale descriptors), rounded for
// integers, with the default merged in; every choice for categoricals.
std::vector<ParamValue> default_grid(const cluster::ParamDescriptor& descriptor);

// Failed runs score ARI 0.
OneDimResult one_dim_sweep(std::span<const datagen::Dataset> corpus, Algorithm algorithm, const std::string& parameter,
                           std::vector<ParamValue> grid, const RunOptions& options);

struct ParamBounds {
  std::string parameter;
  cluster::ParamKind kind = cluster::ParamKind::real_range;
  double low = 0.0;
  double high = 0.0;
  std::vector<std::string> choices;
};

inline constexpr double kPlateauStep = 0.005;
inline constexpr double kDegradation = 0.15;

// Expands outward from the default. Stops at a plateau (two consecutive steps moving
// less than kPlateauStep, once the trace has moved at least kPlateauStep from the
// default) or just before a point more than kDegradation below the default.
ParamBounds derive_bounds(const OneDimTrace& trace);

// Bounds spanning each descriptor's full declared range.
std::vector<ParamBounds> full_bounds(Algorithm algorithm, const cluster::ProblemShape& shape);

struct Histogram {
  double origin = 0.0;  // marked default accuracy; bin j covers (origin + (j-1) w, origin + j w]
  double width = 0.02;
  int first_bin = 0;
  std::vector<std::size_t> counts;

  double lower_edge(std::size_t slot) const noexcept;
  double upper_edge(std::size_t slot) const noexcept;
  std::size_t total() const noexcept;
  // Mass in bins strictly above the origin.
  std::size_t improving() const noexcept;
};

Histogram make_histogram(std::span<const double> values, double origin, double width = 0.02);

struct RandomSweepSummary {
  Algorithm algorithm = Algorithm::kmeans;
  std::size_t draws = 0;
  std::size_t failed_draws = 0;
  double gamma_default = 0.0;
  double p_value = 0.0;           // percent of draws strictly above the default
  double mean_improvement = 0.0;  // <R> over improving draws
  double sd_improvement = 0.0;    // Delta R, population form
  double max_improvement = 0.0;
  double mean_best = 0.0;         // <max ARI>
  Histogram histogram;
};

// draw_ari[d]: mean ARI of draw d; best_per_dataset: best ARI per dataset across draws.
RandomSweepSummary summarize_random(double gamma_default, std::span<const double> draw_ari,
                                    std::span<const double> best_per_dataset);

struct RandomSweepResult {
  RandomSweepSummary summary;
  std::vector<cluster::ClustererConfig> draws;
  std::vector<double> draw_ari;
  std::vector<RunRecord> records;
};

cluster::ClustererConfig draw_config(Algorithm algorithm, std::size_t k, std::span<const ParamBounds> bounds,
                                     Rng& rng);

// Each draw runs on every dataset with k = C. Failed runs score ARI 0 and mark the draw
// as failed. Throws invalid_parameter unless `bounds` names every declared parameter.
RandomSweepResult random_sweep(std::span<const datagen::Dataset> corpus, Algorithm algorithm,
                               std::span<const ParamBounds> bounds, std::size_t n_draws, const RunOptions& options);

}  // namespace clusterbench::sweep
