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

#include "clusterbench/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "clusterbench/error.hpp"
#include "clusterbench/kmeans.hpp"

namespace clusterbench::cluster {

Kernel parse_kernel(std::string_view name) {
  if (name == "rbf") return Kernel::rbf;
  if (name == "laplace") return Kernel::laplace;
  if (name == "polynomial") return Kernel::polynomial;
  if (name == "linear") return Kernel::linear;
  throw Error(ErrorKind::invalid_parameter, "unknown kernel '" + std::string(name) + "'");
}

namespace {

constexpr double kDegreeFloor = 1e-12;
constexpr int kEmbeddingStarts = 5;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

linalg::Matrix pairwise_distances(const linalg::Matrix& x) {
  const std::size_t n = x.rows();
  linalg::Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = std::sqrt(squared_euclidean(x.row(i), x.row(j)));
  return d;
}

double distance_kernel(Kernel kernel, double dist, double sigma) {
  return kernel == Kernel::rbf ? std::exp(-dist * dist / (2.0 * sigma * sigma)) : std::exp(-dist / sigma);
}

bool distance_based(Kernel k) { return k == Kernel::rbf || k == Kernel::laplace; }

struct Embedding {
  linalg::Matrix rows;
  bool flagged = false;
};

// k leading eigenvectors of D^-1/2 A D^-1/2 with rows scaled to unit length. When
// `strict` is set a degree spread above 1e4 or a zero degree yields an empty result.
Embedding embed(linalg::Matrix a, std::size_t k, bool strict) {
  const std::size_t n = a.rows();
  Embedding out;
  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) deg += a(i, j);
    if (!(deg > kDegreeFloor)) {
      if (strict) return {};
      deg = kDegreeFloor;
      out.flagged = true;
    }
    inv_sqrt[i] = 1.0 / std::sqrt(deg);
  }
  if (strict) {
    const auto [lo, hi] = std::minmax_element(inv_sqrt.begin(), inv_sqrt.end());
    if (*hi - *lo >= 1e4) return {};
  }
  linalg::SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, inv_sqrt[i] * a(i, j) * inv_sqrt[j]);
  const auto eig = linalg::eigh(m);

  out.rows = linalg::Matrix(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      const double v = eig.vectors(i, n - 1 - c);
      out.rows(i, c) = v;
      norm += v * v;
    }
    if (norm > 0.0) {
      norm = std::sqrt(norm);
      for (std::size_t c = 0; c < k; ++c) out.rows(i, c) /= norm;
    }
  }
  return out;
}

// Values from..to in steps of `by`; a non-positive step yields just the endpoints.
void append_range(std::vector<double>& out, double from, double to, double by) {
  if (from > to) return;
  if (!(by > 0.0)) {
    out.push_back(from);
    if (to != from) out.push_back(to);
    return;
  }
  for (double v = from; v <= to * (1.0 + 1e-12); v += by) out.push_back(v);
}

std::vector<double> sigma_candidates(const linalg::Matrix& d) {
  const std::size_t n = d.rows();
  double kmin = std::numeric_limits<double>::infinity();
  double kmax = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      sum += v;
      kmax = std::max(kmax, v);
      if (i != j && v > 0.0) kmin = std::min(kmin, v);
    }
  const double kmea = sum / static_cast<double>(n * n);
  if (!(kmax > 0.0) || !std::isfinite(kmin)) return {};

  const double midmax = std::min(2.0 * kmea, kmax);
  const double midmin = std::max(kmea / 2.0, kmin);
  const double lsmin = std::log2(kmin);
  const double lsmax = std::log2(kmax);
  const double upper = std::log2(midmax) + 0.5;
  const double lower = std::log2(midmin) - 0.5;
  const double step = std::min(0.5, lsmax - upper);
  const double stepm = std::min(0.5, lower - lsmin);

  std::vector<double> exps;
  std::vector<double> out;
  append_range(exps, lsmin, lower, stepm);
  for (double e : exps) out.push_back(std::exp2(e));
  append_range(out, midmin, 0.9 * kmea, 0.05 * kmea);
  append_range(out, kmea, midmax, 0.08 * kmea);
  exps.clear();
  append_range(exps, upper, lsmax, step);
  for (double e : exps) out.push_back(std::exp2(e));
  return out;
}

}  // namespace

linalg::SymmetricMatrix affinity_matrix(const linalg::Matrix& data, Kernel kernel, double sigma) {
  const std::size_t n = data.rows();
  linalg::SymmetricMatrix a(n);
  if (distance_based(kernel)) {
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, i, 1.0);
      for (std::size_t j = i + 1; j < n; ++j)
        a.set(i, j, distance_kernel(kernel, std::sqrt(squared_euclidean(data.row(i), data.row(j))), sigma));
    }
    return a;
  }
  double scale = 1.0;
  if (kernel == Kernel::polynomial) {
    double mean_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean_sq += dot(data.row(i), data.row(i));
    mean_sq /= static_cast<double>(n);
    scale = sigma * (mean_sq > 0.0 ? mean_sq : 1.0);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double ip = dot(data.row(i), data.row(j));
      if (kernel == Kernel::polynomial) {
        const double t = 1.0 + ip / scale;
        a.set(i, j, t * t);
      } else {
        a.set(i, j, std::max(0.0, ip));
      }
    }
  return a;
}

double automatic_sigma(const linalg::Matrix& data, const SpectralOptions& options, Rng& rng) {
  const std::size_t n = data.rows();
  const std::size_t k = options.k;
  std::size_t ns = (n + 5) / 6;
  ns = std::max(ns, std::min(n, 2 * k));
  auto picked = sample_without_replacement(n, ns, rng);
  std::sort(picked.begin(), picked.end());
  linalg::Matrix sub(ns, data.cols());
  for (std::size_t r = 0; r < ns; ++r) std::copy(data.row(picked[r]).begin(), data.row(picked[r]).end(), sub.row(r).begin());

  const auto d = pairwise_distances(sub);
  const auto candidates = sigma_candidates(d);
  if (candidates.empty()) return 1.0;

  double mean = 0.0;
  for (double v : d.data()) mean += v;
  mean /= static_cast<double>(d.data().size());

  double best_sigma = mean;
  double best_ss = std::numeric_limits<double>::infinity();
  const std::size_t kk = std::min(k, ns);
  for (double sigma : candidates) {
    linalg::Matrix a(ns, ns);
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = i + 1; j < ns; ++j) a(i, j) = a(j, i) = distance_kernel(options.kernel, d(i, j), sigma);
    const auto emb = embed(std::move(a), kk, true);
    if (emb.rows.empty()) continue;
    const auto res = kmeans(emb.rows, KMeansOptions{kk, options.iter, 1, KMeansVariant::lloyd}, rng);
    if (res.objective < best_ss) {
      best_ss = res.objective;
      best_sigma = sigma;
    }
  }
  return best_sigma;
}

ClusterResult spectral(const linalg::Matrix& data, const SpectralOptions& options, Rng& rng) {
  const std::size_t n = data.rows();
  if (options.k < 1 || options.k > n)
    throw Error(ErrorKind::invalid_k, "spectral: k = " + std::to_string(options.k) + " with N = " + std::to_string(n));
  if (!(options.kernel_scale > 0.0)) throw Error(ErrorKind::invalid_parameter, "spectral: kernel_scale must be positive");
  if (options.iter < 1) throw Error(ErrorKind::invalid_parameter, "spectral: iter must be positive");

  double sigma = options.kernel_scale;
  if (distance_based(options.kernel)) sigma *= automatic_sigma(data, options, rng);
  auto affinity = affinity_matrix(data, options.kernel, sigma).dense();
  if (distance_based(options.kernel))
    for (std::size_t i = 0; i < n; ++i) affinity(i, i) = 0.0;

  auto emb = embed(std::move(affinity), options.k, false);
  auto result = kmeans(emb.rows, KMeansOptions{options.k, options.iter, kEmbeddingStarts, KMeansVariant::lloyd}, rng);
  result.flagged = emb.flagged;
  return result;
}

}  // namespace clusterbench::cluster
