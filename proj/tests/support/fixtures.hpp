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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "clusterbench/linalg.hpp"
#include "clusterbench/metrics.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::fixture {

struct Labeled {
  linalg::Matrix x;
  std::vector<int> labels;

  metrics::Partition truth() const { return metrics::Partition::from_labels(labels); }
};

// `per_class` points around each center with isotropic spread `sd`.
inline Labeled blobs(const std::vector<std::vector<double>>& centers, std::size_t per_class, double sd,
                     std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, sd);
  const std::size_t f = centers.front().size();
  Labeled out{linalg::Matrix(centers.size() * per_class, f), {}};
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (std::size_t i = 0; i < per_class; ++i) {
      const std::size_t r = c * per_class + i;
      for (std::size_t d = 0; d < f; ++d) out.x(r, d) = centers[c][d] + g(rng);
      out.labels.push_back(static_cast<int>(c));
    }
  return out;
}

inline Labeled two_blobs(std::size_t per_class, std::uint64_t seed) {
  return blobs({{0.0, 0.0}, {20.0, 20.0}}, per_class, 1.0, seed);
}

// Concentric circles of radius 1 and 3 with small radial noise.
inline Labeled rings(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Labeled out{linalg::Matrix(n, 2), {}};
  for (std::size_t i = 0; i < n; ++i) {
    const bool inner = i < n / 2;
    const double r = inner ? 1.0 : 3.0;
    const double t = angle(rng);
    out.x(i, 0) = r * std::cos(t) + noise(rng);
    out.x(i, 1) = r * std::sin(t) + noise(rng);
    out.labels.push_back(inner ? 0 : 1);
  }
  return out;
}

inline linalg::Matrix random_points(std::size_t n, std::size_t f, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> g;
  linalg::Matrix x(n, f);
  for (double& v : x.data()) v = g(rng);
  return x;
}

inline std::vector<int> random_labels(std::size_t n, int k, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<int> out(n);
  for (int& l : out) l = pick(rng);
  return out;
}

}  // namespace clusterbench::fixture
