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

#include "clusterbench/pam.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::cluster {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Nearest and second-nearest medoid distance for every object.
void nearest_two(const linalg::Matrix& d, const std::vector<std::size_t>& medoids, std::vector<std::size_t>& nearest,
                 std::vector<double>& d1, std::vector<double>& d2) {
  const std::size_t n = d.rows();
  for (std::size_t i = 0; i < n; ++i) {
    d1[i] = kInf;
    d2[i] = kInf;
    nearest[i] = 0;
    for (std::size_t m = 0; m < medoids.size(); ++m) {
      const double v = d(i, medoids[m]);
      if (v < d1[i]) {
        d2[i] = d1[i];
        d1[i] = v;
        nearest[i] = m;
      } else if (v < d2[i]) {
        d2[i] = v;
      }
    }
  }
}

}  // namespace

PamResult pam(const linalg::Matrix& d, std::size_t k) {
  const std::size_t n = d.rows();
  if (d.cols() != n) throw Error(ErrorKind::invalid_dimension, "pam: dissimilarity matrix must be square");
  if (k < 1 || k > n) throw Error(ErrorKind::invalid_k, "pam: k = " + std::to_string(k) + " with N = " + std::to_string(n));

  PamResult result;
  std::vector<char> is_medoid(n, 0);
  std::vector<double> best_dist(n, kInf);

  // BUILD
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = n;
    double pick_gain = -kInf;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_medoid[c]) continue;
      double gain = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double cur = step == 0 ? 0.0 : best_dist[i];
        gain += step == 0 ? -d(i, c) : std::max(0.0, cur - d(i, c));
      }
      if (gain > pick_gain) {
        pick_gain = gain;
        pick = c;
      }
    }
    is_medoid[pick] = 1;
    result.medoids.push_back(pick);
    for (std::size_t i = 0; i < n; ++i) best_dist[i] = std::min(best_dist[i], d(i, pick));
  }

  std::vector<std::size_t> nearest(n);
  std::vector<double> d1(n), d2(n);
  nearest_two(d, result.medoids, nearest, d1, d2);
  double cost = std::accumulate(d1.begin(), d1.end(), 0.0);
  result.trace.push_back(cost);

  // SWAP
  for (;;) {
    double best_delta = 0.0;
    std::size_t best_m = k, best_h = n;
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t h = 0; h < n; ++h) {
        if (is_medoid[h]) continue;
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double dih = d(i, h);
          if (nearest[i] == m)
            delta += std::min(dih, d2[i]) - d1[i];
          else if (dih < d1[i])
            delta += dih - d1[i];
        }
        if (delta < best_delta) {
          best_delta = delta;
          best_m = m;
          best_h = h;
        }
      }
    }
    if (best_m == k) break;
    std::vector<std::size_t> candidate = result.medoids;
    candidate[best_m] = best_h;
    std::vector<std::size_t> cand_nearest(n);
    std::vector<double> cd1(n), cd2(n);
    nearest_two(d, candidate, cand_nearest, cd1, cd2);
    const double new_cost = std::accumulate(cd1.begin(), cd1.end(), 0.0);
    // The incremental delta can be a rounding artefact; only accept a real decrease.
    if (!(new_cost < cost)) break;
    is_medoid[result.medoids[best_m]] = 0;
    is_medoid[best_h] = 1;
    result.medoids = std::move(candidate);
    nearest = std::move(cand_nearest);
    d1 = std::move(cd1);
    d2 = std::move(cd2);
    cost = new_cost;
    ++result.swaps;
    result.trace.push_back(cost);
  }
  result.objective = cost;
  return result;
}

std::vector<int> assign_to_medoids(const linalg::Matrix& d, const std::vector<std::size_t>& medoids) {
  std::vector<int> labels(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    double best = kInf;
    for (std::size_t m = 0; m < medoids.size(); ++m)
      if (d(i, medoids[m]) < best) {
        best = d(i, medoids[m]);
        labels[i] = static_cast<int>(m);
      }
  }
  return labels;
}

ClusterResult clara(const linalg::Matrix& data, const ClaraOptions& options, Rng& rng) {
  const std::size_t n = data.rows();
  const std::size_t k = options.k;
  if (k < 1 || k > n) throw Error(ErrorKind::invalid_k, "clara: k = " + std::to_string(k) + " with N = " + std::to_string(n));
  const std::size_t sampsize = options.sampsize == 0 ? std::min(n, 40 + 2 * k) : options.sampsize;
  if (sampsize <= k || sampsize > n)
    throw Error(ErrorKind::invalid_sampsize, "clara: sampsize " + std::to_string(sampsize) +
                                                 " must exceed k = " + std::to_string(k) + " and not exceed N");
  if (options.samples < 1) throw Error(ErrorKind::invalid_parameter, "clara: samples must be positive");

  std::vector<std::size_t> best_medoids;
  double best_cost = kInf;
  ClusterResult result;

  for (int s = 0; s < options.samples; ++s) {
    std::vector<char> chosen(n, 0);
    std::vector<std::size_t> subset;
    subset.reserve(sampsize);
    for (std::size_t m : best_medoids) {
      chosen[m] = 1;
      subset.push_back(m);
    }
    const auto order = sample_without_replacement(n, n, rng);
    for (std::size_t idx : order) {
      if (subset.size() == sampsize) break;
      if (chosen[idx]) continue;
      chosen[idx] = 1;
      subset.push_back(idx);
    }
    std::sort(subset.begin(), subset.end());

    linalg::Matrix sub(sampsize, sampsize);
    for (std::size_t a = 0; a < sampsize; ++a)
      for (std::size_t b = a + 1; b < sampsize; ++b) {
        const double v = distance(data.row(subset[a]), data.row(subset[b]), options.metric);
        sub(a, b) = v;
        sub(b, a) = v;
      }
    const auto local = pam(sub, k);
    std::vector<std::size_t> medoids;
    for (std::size_t m : local.medoids) medoids.push_back(subset[m]);

    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = kInf;
      for (std::size_t m : medoids) best = std::min(best, distance(data.row(i), data.row(m), options.metric));
      cost += best;
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_medoids = medoids;
    }
    result.trace.push_back(best_cost);
  }

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = kInf;
    for (std::size_t m = 0; m < k; ++m) {
      const double v = distance(data.row(i), data.row(best_medoids[m]), options.metric);
      if (v < best) {
        best = v;
        labels[i] = static_cast<int>(m);
      }
    }
  }
  result.partition = metrics::Partition(std::move(labels), static_cast<int>(k));
  result.objective = best_cost;
  result.iterations_used = options.samples;
  result.converged = true;
  return result;
}

}  // namespace clusterbench::cluster
