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

#include "clusterbench/hierarchical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::cluster {

Linkage parse_linkage(std::string_view name) {
  if (name == "average") return Linkage::average;
  if (name == "single") return Linkage::single;
  if (name == "complete") return Linkage::complete;
  if (name == "ward") return Linkage::ward;
  if (name == "weighted") return Linkage::weighted;
  throw Error(ErrorKind::invalid_parameter, "unknown linkage '" + std::string(name) + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lance_williams(Linkage linkage, double dki, double dkj, double dij, double ni, double nj, double nk) {
  switch (linkage) {
    case Linkage::single: return std::min(dki, dkj);
    case Linkage::complete: return std::max(dki, dkj);
    case Linkage::average: return (ni * dki + nj * dkj) / (ni + nj);
    case Linkage::weighted: return 0.5 * (dki + dkj);
    case Linkage::ward: {
      const double total = ni + nj + nk;
      return ((ni + nk) * dki + (nj + nk) * dkj - nk * dij) / total;
    }
  }
  return kInf;
}

class Agglomerator {
 public:
  Agglomerator(const linalg::Matrix& d, Linkage linkage)
      : d_(d), linkage_(linkage), n_(d.rows()), active_(n_, 1), size_(n_, 1.0), nn_(n_, n_), nnd_(n_, kInf) {
    for (std::size_t r = 0; r < n_; ++r) refresh(r);
  }

  Dendrogram run() {
    Dendrogram tree;
    tree.n = n_;
    for (std::size_t step = 0; step + 1 < n_; ++step) {
      std::size_t i = n_;
      double best = kInf;
      for (std::size_t r = 0; r < n_; ++r)
        if (active_[r] && nn_[r] < n_ && nnd_[r] < best) {
          best = nnd_[r];
          i = r;
        }
      if (i == n_) {
        // Only infinite dissimilarities remain; merge the lowest pair of active slots.
        i = std::find(active_.begin(), active_.end(), 1) - active_.begin();
        nn_[i] = std::find(active_.begin() + static_cast<std::ptrdiff_t>(i) + 1, active_.end(), 1) - active_.begin();
        best = d_(i, nn_[i]);
      }
      const std::size_t j = nn_[i];
      tree.merges.push_back({i, j, best});
      merge(i, j);
    }
    return tree;
  }

 private:
  void refresh(std::size_t r) {
    nn_[r] = n_;
    nnd_[r] = kInf;
    for (std::size_t c = r + 1; c < n_; ++c)
      if (active_[c] && (d_(r, c) < nnd_[r] || nn_[r] == n_)) {
        nnd_[r] = d_(r, c);
        nn_[r] = c;
      }
  }

  void merge(std::size_t i, std::size_t j) {
    const double dij = d_(i, j);
    const double ni = size_[i];
    const double nj = size_[j];
    active_[j] = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!active_[k] || k == i) continue;
      const double v = lance_williams(linkage_, d_(k, i), d_(k, j), dij, ni, nj, size_[k]);
      d_(k, i) = v;
      d_(i, k) = v;
    }
    size_[i] = ni + nj;
    refresh(i);
    for (std::size_t r = 0; r < j; ++r) {
      if (!active_[r] || r == i) continue;
      if (r < i) {
        if (nn_[r] == i || nn_[r] == j) {
          refresh(r);
        } else {
          const double v = d_(r, i);
          if (v < nnd_[r] || (v == nnd_[r] && i < nn_[r])) {
            nnd_[r] = v;
            nn_[r] = i;
          }
        }
      } else if (nn_[r] == j) {
        refresh(r);
      }
    }
  }

  linalg::Matrix d_;
  Linkage linkage_;
  std::size_t n_;
  std::vector<char> active_;
  std::vector<double> size_;
  std::vector<std::size_t> nn_;
  std::vector<double> nnd_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Dendrogram agglomerate(const linalg::Matrix& dissimilarity, Linkage linkage) {
  if (dissimilarity.rows() != dissimilarity.cols())
    throw Error(ErrorKind::invalid_dimension, "agglomerate: dissimilarity matrix must be square");
  if (dissimilarity.rows() == 0) throw Error(ErrorKind::invalid_dimension, "agglomerate: no objects");
  return Agglomerator(dissimilarity, linkage).run();
}

metrics::Partition cut_tree(const Dendrogram& tree, std::size_t k) {
  if (k < 1 || k > tree.n)
    throw Error(ErrorKind::invalid_k, "cut_tree: k = " + std::to_string(k) + " with N = " + std::to_string(tree.n));
  std::vector<std::size_t> parent(tree.n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t m = 0; m < tree.n - k; ++m) {
    const auto a = find_root(parent, tree.merges[m].left);
    const auto b = find_root(parent, tree.merges[m].right);
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> roots(tree.n);
  for (std::size_t i = 0; i < tree.n; ++i) roots[i] = static_cast<int>(find_root(parent, i));
  return metrics::Partition(canonical_labels(roots), static_cast<int>(k));
}

ClusterResult hierarchical(const linalg::Matrix& data, const HierarchicalOptions& options) {
  const std::size_t n = data.rows();
  if (options.k < 1 || options.k > n)
    throw Error(ErrorKind::invalid_k, "hierarchical: k = " + std::to_string(options.k) + " with N = " + std::to_string(n));
  const auto tree = agglomerate(dissimilarity_matrix(data, options.metric), options.method);
  ClusterResult result;
  result.partition = cut_tree(tree, options.k);
  const std::size_t performed = n - options.k;
  result.objective = performed == 0 ? 0.0 : tree.merges[performed - 1].height;
  result.iterations_used = static_cast<int>(performed);
  result.converged = true;
  for (std::size_t m = 0; m < performed; ++m) result.trace.push_back(tree.merges[m].height);
  return result;
}

}  // namespace clusterbench::cluster
