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

#include <gtest/gtest.h>

#include "clusterbench/datagen.hpp"
#include "clusterbench/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace clusterbench::cluster {
namespace {

std::vector<int> labels_of(const metrics::Partition& p) { return {p.labels().begin(), p.labels().end()}; }

// Merge heights of a naive agglomeration that recomputes linkage from the original dissimilarities.
std::vector<double> naive_heights(const linalg::Matrix& d, Linkage linkage) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d.rows(); ++i) groups.push_back({i});
  std::vector<double> heights;
  while (groups.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        double v = linkage == Linkage::single ? std::numeric_limits<double>::infinity() : 0.0;
        for (auto a : groups[i])
          for (auto b : groups[j]) {
            if (linkage == Linkage::single) v = std::min(v, d(a, b));
            else if (linkage == Linkage::complete) v = std::max(v, d(a, b));
            else v += d(a, b);
          }
        if (linkage == Linkage::average) v /= static_cast<double>(groups[i].size() * groups[j].size());
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    heights.push_back(best);
    groups[bi].insert(groups[bi].end(), groups[bj].begin(), groups[bj].end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return heights;
}

TEST(HierarchicalTest, SingleLinkageEqualsMstCut) {
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 10 + 2 * t;
    const auto d = dissimilarity_matrix(fixture::random_points(n, 3, 40 + t), Metric::euclidean);
    const auto tree = agglomerate(d, Linkage::single);
    for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{3}, n / 2, n})
      EXPECT_TRUE(oracle::same_partition(labels_of(cut_tree(tree, k)), oracle::mst_cut(d, k))) << n << ' ' << k;
  }
}

TEST(HierarchicalTest, HeightsMatchNaiveAgglomeration) {
  for (Linkage linkage : {Linkage::single, Linkage::complete, Linkage::average}) {
    for (int t = 0; t < 5; ++t) {
      const auto d = dissimilarity_matrix(fixture::random_points(25, 2, 70 + t), Metric::euclidean);
      const auto tree = agglomerate(d, linkage);
      const auto expected = naive_heights(d, linkage);
      ASSERT_EQ(tree.merges.size(), expected.size());
      for (std::size_t m = 0; m < expected.size(); ++m) EXPECT_NEAR(tree.merges[m].height, expected[m], 1e-12);
    }
  }
}

TEST(HierarchicalTest, MonotoneHeights) {
  for (Linkage linkage : {Linkage::single, Linkage::complete, Linkage::average, Linkage::ward, Linkage::weighted}) {
    const auto d = dissimilarity_matrix(fixture::random_points(60, 4, 5), Metric::euclidean);
    const auto tree = agglomerate(d, linkage);
    for (std::size_t m = 1; m < tree.merges.size(); ++m)
      EXPECT_GE(tree.merges[m].height, tree.merges[m - 1].height - 1e-12);
  }
}

TEST(HierarchicalTest, SingletonsAndErrors) {
  const auto x = fixture::random_points(8, 2, 3);
  const auto r = hierarchical(x, {8});
  EXPECT_EQ(r.partition.occupied_clusters(), 8);
  EXPECT_EQ(r.objective, 0.0);
  EXPECT_THROW(hierarchical(x, {9}), Error);
  EXPECT_THROW(parse_linkage("centroid"), Error);
}

TEST(HierarchicalTest, SeparatedBlobs) {
  const auto b = fixture::two_blobs(30, 6);
  const auto r = hierarchical(b.x, {2});
  EXPECT_EQ(metrics::score(b.truth(), r.partition).ari, 1.0);
}

TEST(HierarchicalTest, AverageLinkageIsUnbalancedOnOverlappingClasses) {
  double share = 0.0;
  for (std::size_t r = 0; r < 5; ++r) {
    const auto ds = datagen::generate_dataset({10, 10, 50, 1.0, 31, r});
    const auto res = hierarchical(ds.features, {10});
    std::vector<std::size_t> sizes(10, 0);
    for (int l : res.partition.labels()) ++sizes[static_cast<std::size_t>(l)];
    share += static_cast<double>(*std::max_element(sizes.begin(), sizes.end())) / static_cast<double>(ds.size()) / 5.0;
  }
  EXPECT_GT(share, 0.5);
}

}  // namespace
}  // namespace clusterbench::cluster
