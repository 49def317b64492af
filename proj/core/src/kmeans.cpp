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

#include "clusterbench/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::cluster {

Metric parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "manhattan") return Metric::manhattan;
  throw Error(ErrorKind::invalid_parameter, "unknown metric '" + std::string(name) + "'");
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b, Metric metric) noexcept {
  if (metric == Metric::euclidean) return std::sqrt(squared_euclidean(a, b));
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

linalg::Matrix dissimilarity_matrix(const linalg::Matrix& data, Metric metric) {
  const std::size_t n = data.rows();
  linalg::Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = distance(data.row(i), data.row(j), metric);
      d(i, j) = v;
      d(j, i) = v;
    }
  return d;
}

std::vector<int> canonical_labels(std::span<const int> labels) {
  std::vector<int> map;
  std::vector<int> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto l = static_cast<std::size_t>(labels[i]);
    if (l >= map.size()) map.resize(l + 1, -1);
    if (map[l] < 0) map[l] = next++;
    out[i] = map[l];
  }
  return out;
}

KMeansVariant parse_kmeans_variant(std::string_view name) {
  if (name == "lloyd") return KMeansVariant::lloyd;
  if (name == "macqueen") return KMeansVariant::macqueen;
  throw Error(ErrorKind::invalid_parameter, "unknown k-means variant '" + std::string(name) + "'");
}

namespace {

struct Run {
  std::vector<int> labels;
  double sse = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

std::size_t nearest_center(const linalg::Matrix& centers, std::span<const double> x) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.rows(); ++c) {
    const double d = squared_euclidean(centers.row(c), x);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

// Cluster means; empty clusters keep their previous center. Returns member counts.
std::vector<std::size_t> update_means(const linalg::Matrix& data, std::span<const int> labels, linalg::Matrix& centers) {
  const std::size_t k = centers.rows();
  const std::size_t f = data.cols();
  std::vector<std::size_t> counts(k, 0);
  linalg::Matrix sums(k, f);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const auto c = static_cast<std::size_t>(labels[i]);
    ++counts[c];
    auto s = sums.row(c);
    auto x = data.row(i);
    for (std::size_t j = 0; j < f; ++j) s[j] += x[j];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) continue;
    auto out = centers.row(c);
    auto s = sums.row(c);
    for (std::size_t j = 0; j < f; ++j) out[j] = s[j] / static_cast<double>(counts[c]);
  }
  return counts;
}

// Moves each empty cluster's center onto the object farthest from its own centroid.
void reseed_empty(const linalg::Matrix& data, std::vector<int>& labels, linalg::Matrix& centers,
                  std::vector<std::size_t>& counts) {
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 0) continue;
    std::size_t far = data.rows();
    double far_d = -1.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
      const auto c = static_cast<std::size_t>(labels[i]);
      if (counts[c] <= 1) continue;
      const double d = squared_euclidean(data.row(i), centers.row(c));
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    if (far == data.rows()) continue;
    std::copy(data.row(far).begin(), data.row(far).end(), centers.row(e).begin());
    --counts[static_cast<std::size_t>(labels[far])];
    labels[far] = static_cast<int>(e);
    counts[e] = 1;
  }
}

bool assign(const linalg::Matrix& data, const linalg::Matrix& centers, std::vector<int>& labels) {
  bool changed = false;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const int c = static_cast<int>(nearest_center(centers, data.row(i)));
    if (c != labels[i]) {
      labels[i] = c;
      changed = true;
    }
  }
  return changed;
}

Run run_lloyd(const linalg::Matrix& data, linalg::Matrix centers, int iter_max) {
  const std::size_t k = centers.rows();
  Run run;
  run.labels.assign(data.rows(), -1);
  assign(data, centers, run.labels);
  run.trace.push_back(within_cluster_ss(data, run.labels, k));
  while (run.iterations < iter_max) {
    ++run.iterations;
    auto counts = update_means(data, run.labels, centers);
    reseed_empty(data, run.labels, centers, counts);
    const bool changed = assign(data, centers, run.labels);
    run.trace.push_back(within_cluster_ss(data, run.labels, k));
    if (!changed) {
      run.converged = true;
      break;
    }
  }
  run.sse = run.trace.back();
  return run;
}

Run run_macqueen(const linalg::Matrix& data, linalg::Matrix centers, int iter_max) {
  const std::size_t k = centers.rows();
  const std::size_t f = data.cols();
  Run run;
  run.labels.assign(data.rows(), -1);
  assign(data, centers, run.labels);
  auto counts = update_means(data, run.labels, centers);
  reseed_empty(data, run.labels, centers, counts);
  counts = update_means(data, run.labels, centers);
  run.trace.push_back(within_cluster_ss(data, run.labels, k));
  while (run.iterations < iter_max) {
    ++run.iterations;
    bool moved = false;
    for (std::size_t i = 0; i < data.rows(); ++i) {
      const auto from = static_cast<std::size_t>(run.labels[i]);
      const std::size_t to = nearest_center(centers, data.row(i));
      if (to == from || counts[from] <= 1) continue;
      auto x = data.row(i);
      auto cf = centers.row(from);
      auto ct = centers.row(to);
      const double nf = static_cast<double>(counts[from]);
      const double nt = static_cast<double>(counts[to]);
      for (std::size_t j = 0; j < f; ++j) {
        cf[j] = (cf[j] * nf - x[j]) / (nf - 1.0);
        ct[j] = (ct[j] * nt + x[j]) / (nt + 1.0);
      }
      --counts[from];
      ++counts[to];
      run.labels[i] = static_cast<int>(to);
      moved = true;
    }
    // Refresh exact means so rounding drift does not accumulate across passes.
    counts = update_means(data, run.labels, centers);
    run.trace.push_back(within_cluster_ss(data, run.labels, k));
    if (!moved) {
      run.converged = true;
      break;
    }
  }
  run.sse = run.trace.back();
  return run;
}

}  // namespace

double within_cluster_ss(const linalg::Matrix& data, std::span<const int> labels, std::size_t k) {
  linalg::Matrix means(k, data.cols());
  update_means(data, labels, means);
  double sse = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i)
    sse += squared_euclidean(data.row(i), means.row(static_cast<std::size_t>(labels[i])));
  return sse;
}

ClusterResult kmeans(const linalg::Matrix& data, const KMeansOptions& options, Rng& rng) {
  const std::size_t n = data.rows();
  if (options.k < 1 || options.k > n)
    throw Error(ErrorKind::invalid_k, "k-means: k = " + std::to_string(options.k) + " with N = " + std::to_string(n));
  if (options.iter_max < 1 || options.nstart < 1)
    throw Error(ErrorKind::invalid_parameter, "k-means: iter_max and nstart must be positive");

  Run best;
  bool have_best = false;
  for (int start = 0; start < options.nstart; ++start) {
    const auto seeds = sample_without_replacement(n, options.k, rng);
    linalg::Matrix centers(options.k, data.cols());
    for (std::size_t c = 0; c < options.k; ++c)
      std::copy(data.row(seeds[c]).begin(), data.row(seeds[c]).end(), centers.row(c).begin());
    Run run = options.variant == KMeansVariant::lloyd ? run_lloyd(data, std::move(centers), options.iter_max)
                                                      : run_macqueen(data, std::move(centers), options.iter_max);
    if (!have_best || run.sse < best.sse) {
      best = std::move(run);
      have_best = true;
    }
  }

  ClusterResult result;
  result.partition = metrics::Partition(std::move(best.labels), static_cast<int>(options.k));
  result.objective = best.sse;
  result.iterations_used = best.iterations;
  result.converged = best.converged;
  result.trace = std::move(best.trace);
  return result;
}

}  // namespace clusterbench::cluster
