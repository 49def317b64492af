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

#include "clusterbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::metrics {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t choose2(std::int64_t n) noexcept { return n * (n - 1) / 2; }

}  // namespace

Partition::Partition(std::vector<int> labels, int num_clusters)
    : labels_(std::move(labels)), num_clusters_(num_clusters) {
  if (labels_.empty()) throw Error(ErrorKind::invalid_dimension, "partition must contain at least one object");
  for (int l : labels_)
    if (l < 0 || l >= num_clusters_)
      throw Error(ErrorKind::invalid_dimension,
                  "label " + std::to_string(l) + " outside [0, " + std::to_string(num_clusters_) + ")");
}

Partition Partition::from_labels(std::vector<int> labels) {
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return Partition(std::move(labels), k);
}

int Partition::occupied_clusters() const {
  std::vector<char> seen(static_cast<std::size_t>(num_clusters_), 0);
  for (int l : labels_) seen[static_cast<std::size_t>(l)] = 1;
  return static_cast<int>(std::count(seen.begin(), seen.end(), 1));
}

std::vector<std::int64_t> ContingencyTable::row_marginals() const {
  std::vector<std::int64_t> m(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i] += (*this)(i, j);
  return m;
}

std::vector<std::int64_t> ContingencyTable::col_marginals() const {
  std::vector<std::int64_t> m(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[j] += (*this)(i, j);
  return m;
}

std::int64_t ContingencyTable::total() const {
  std::int64_t n = 0;
  for (std::int64_t c : counts_) n += c;
  return n;
}

ContingencyTable build_contingency(const Partition& u, const Partition& v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::incompatible_partitions,
                "partitions have " + std::to_string(u.size()) + " and " + std::to_string(v.size()) + " objects");
  ContingencyTable t(static_cast<std::size_t>(u.num_clusters()), static_cast<std::size_t>(v.num_clusters()));
  for (std::size_t i = 0; i < u.size(); ++i)
    ++t.at(static_cast<std::size_t>(u[i]), static_cast<std::size_t>(v[i]));
  return t;
}

PairCounts pair_counts(const ContingencyTable& t) {
  std::int64_t same_both = 0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) same_both += choose2(t(i, j));
  std::int64_t same_u = 0;
  for (std::int64_t m : t.row_marginals()) same_u += choose2(m);
  std::int64_t same_v = 0;
  for (std::int64_t m : t.col_marginals()) same_v += choose2(m);
  return {same_both, same_u - same_both, same_v - same_both};
}

double jaccard(const PairCounts& p) {
  const std::int64_t denom = p.a + p.b + p.c;
  if (denom == 0) return 1.0;
  return static_cast<double>(p.a) / static_cast<double>(denom);
}

double adjusted_rand(const ContingencyTable& t) {
  const std::int64_t n = t.total();
  if (n < 2) throw Error(ErrorKind::undefined_index, "adjusted Rand index needs at least two objects");
  const auto p = pair_counts(t);
  const i128 index = p.a;
  const i128 sum_u = p.a + p.b;
  const i128 sum_v = p.a + p.c;
  const i128 pairs = choose2(n);
  // Multiply numerator and denominator by 2 * C(n, 2) so both stay integral.
  const i128 num = 2 * (index * pairs - sum_u * sum_v);
  const i128 den = (sum_u + sum_v) * pairs - 2 * sum_u * sum_v;
  if (den == 0) return num == 0 ? 1.0 : 0.0;
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

double fowlkes_mallows(const PairCounts& p) {
  if (p.a == 0 && p.b == 0 && p.c == 0) return 1.0;
  const std::int64_t ab = p.a + p.b;
  const std::int64_t ac = p.a + p.c;
  if (ab == 0 || ac == 0) return 0.0;
  return static_cast<double>(p.a) / std::sqrt(static_cast<double>(ab) * static_cast<double>(ac));
}

double nmi(const ContingencyTable& t) {
  const std::int64_t n = t.total();
  if (n < 1) throw Error(ErrorKind::undefined_index, "NMI needs at least one object");
  const double nd = static_cast<double>(n);
  const auto ru = t.row_marginals();
  const auto cv = t.col_marginals();

  auto entropy = [nd](const std::vector<std::int64_t>& marg) {
    double h = 0.0;
    for (std::int64_t m : marg)
      if (m > 0) h += (static_cast<double>(m) / nd) * std::log(nd / static_cast<double>(m));
    return h;
  };
  // A one-to-one correspondence scores exactly 1 regardless of summation order.
  bool bijective = true;
  std::vector<int> col_hits(t.cols(), 0);
  for (std::size_t i = 0; i < t.rows() && bijective; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t(i, j) > 0) {
        ++row_hits;
        ++col_hits[j];
      }
    if (row_hits > 1) bijective = false;
  }
  for (int h : col_hits)
    if (h > 1) bijective = false;
  if (bijective) return 1.0;

  const double hu = entropy(ru);
  const double hv = entropy(cv);

  double mi = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const std::int64_t nij = t(i, j);
      if (nij == 0) continue;
      const double ratio = (nd * static_cast<double>(nij)) /
                           (static_cast<double>(ru[i]) * static_cast<double>(cv[j]));
      mi += (static_cast<double>(nij) / nd) * std::log(ratio);
    }
  }

  if (hu == 0.0 && hv == 0.0) return 1.0;
  if (hu == 0.0 || hv == 0.0) return 0.0;
  return std::clamp(mi / std::sqrt(hu * hv), 0.0, 1.0);
}

Scores score(const Partition& truth, const Partition& found) {
  const auto t = build_contingency(truth, found);
  const auto p = pair_counts(t);
  return {jaccard(p), adjusted_rand(t), fowlkes_mallows(p), nmi(t)};
}

}  // namespace clusterbench::metrics
