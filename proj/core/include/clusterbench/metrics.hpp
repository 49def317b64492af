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
#include <span>
#include <vector>

namespace clusterbench::metrics {

// Cluster assignment of N objects; every label lies in [0, num_clusters).
class Partition {
 public:
  Partition() = default;
  // Throws invalid_dimension for an empty assignment or a label outside [0, num_clusters).
  Partition(std::vector<int> labels, int num_clusters);
  // num_clusters = max label + 1.
  static Partition from_labels(std::vector<int> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  int num_clusters() const noexcept { return num_clusters_; }
  std::span<const int> labels() const noexcept { return labels_; }
  int operator[](std::size_t i) const noexcept { return labels_[i]; }
  // Number of labels that actually occur.
  int occupied_clusters() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> labels_;
  int num_clusters_ = 0;
};

class ContingencyTable {
 public:
  ContingencyTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), counts_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return counts_[i * cols_ + j]; }
  std::int64_t& at(std::size_t i, std::size_t j) noexcept { return counts_[i * cols_ + j]; }

  std::vector<std::int64_t> row_marginals() const;
  std::vector<std::int64_t> col_marginals() const;
  std::int64_t total() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> counts_;
};

// Object pairs together in both partitions (a), only in the first (b), only in the second (c).
struct PairCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  bool operator==(const PairCounts&) const = default;
};

struct Scores {
  double jaccard = 0.0;
  double ari = 0.0;
  double fowlkes_mallows = 0.0;
  double nmi = 0.0;
};

// Throws incompatible_partitions when the lengths differ.
ContingencyTable build_contingency(const Partition& u, const Partition& v);

PairCounts pair_counts(const ContingencyTable& t);

// a / (a + b + c); 1 when there are no co-clustered pairs on either side.
double jaccard(const PairCounts& p);

// Hubert-Arabie adjusted Rand index. Throws undefined_index for n < 2.
double adjusted_rand(const ContingencyTable& t);

// a / sqrt((a + b)(a + c)); 1 when a = b = c = 0, 0 when only one side has pairs.
double fowlkes_mallows(const PairCounts& p);

// I(U, V) / sqrt(H(U) H(V)) in nats. 1 when both entropies vanish, 0 when one does.
double nmi(const ContingencyTable& t);

// All four indices of `found` against `truth`.
Scores score(const Partition& truth, const Partition& found);

}  // namespace clusterbench::metrics
