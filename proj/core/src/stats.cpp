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

#include "clusterbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "clusterbench/error.hpp"

namespace clusterbench::stats {

std::vector<double> mid_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

KruskalResult kruskal_wallis(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw Error(ErrorKind::invalid_parameter, "Kruskal-Wallis needs at least two groups");
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw Error(ErrorKind::invalid_parameter, "Kruskal-Wallis group is empty");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const auto ranks = mid_ranks(pooled);
  const double n = static_cast<double>(pooled.size());

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  const double correction = 1.0 - ties / (n * n * n - n);
  if (!(correction > 0.0)) throw Error(ErrorKind::degenerate_data, "Kruskal-Wallis: all values are tied");

  const double mean_rank = 0.5 * (n + 1.0);
  double h = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += ranks[offset + i];
    offset += g.size();
    const double nj = static_cast<double>(g.size());
    const double diff = sum / nj - mean_rank;
    h += nj * diff * diff;
  }
  h *= 12.0 / (n * (n + 1.0));
  h /= correction;

  KruskalResult r;
  r.h_statistic = h;
  r.degrees_of_freedom = static_cast<int>(groups.size()) - 1;
  r.p_value = chi_square_upper_tail(h, r.degrees_of_freedom);
  return r;
}

double regularized_gamma_upper(double a, double x) {
  if (x <= 0.0) return 1.0;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 100000;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    // Series for the lower function P.
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < kMaxIter; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return std::clamp(1.0 - sum * std::exp(log_prefix), 0.0, 1.0);
  }
  // Modified Lentz for the continued fraction of Q.
  constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::clamp(std::exp(log_prefix) * h, 0.0, 1.0);
}

double chi_square_upper_tail(double x, int df) {
  if (df < 1) throw Error(ErrorKind::invalid_parameter, "chi-square needs df >= 1");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_upper(0.5 * df, 0.5 * x);
}

}  // namespace clusterbench::stats
