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
#include <cmath>

#include <gtest/gtest.h>

#include "clusterbench/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace clusterbench::cluster {
namespace {

double medoid_cost(const linalg::Matrix& d, const std::vector<std::size_t>& medoids) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    double best = d(i, medoids.front());
    for (std::size_t m : medoids) best = std::min(best, d(i, m));
    total += best;
  }
  return total;
}

// SWAP stops at a single-exchange local optimum, which is usually but not always global.
TEST(PamTest, AgainstBruteForce) {
  int matches = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + t % 5;
    const std::size_t k = 1 + t % 3;
    const auto d = dissimilarity_matrix(fixture::random_points(n, 2, 500 + t), Metric::euclidean);
    const auto r = pam(d, k);
    const double best = oracle::pam_brute_force(d, k);
    EXPECT_GE(r.objective, best - 1e-12) << t;
    EXPECT_NEAR(r.objective, medoid_cost(d, r.medoids), 1e-12);
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t h = 0; h < n; ++h) {
        auto swapped = r.medoids;
        swapped[m] = h;
        EXPECT_GE(medoid_cost(d, swapped), r.objective - 1e-12) << t;
      }
    matches += std::abs(r.objective - best) <= 1e-12;
  }
  EXPECT_GE(matches, 90);
}

TEST(PamTest, SingleMedoidIsExact) {
  for (int t = 0; t < 20; ++t) {
    const auto d = dissimilarity_matrix(fixture::random_points(8, 3, 900 + t), Metric::manhattan);
    EXPECT_NEAR(pam(d, 1).objective, oracle::pam_brute_force(d, 1), 1e-12);
  }
}

TEST(PamTest, EveryObjectAMedoid) {
  const auto d = dissimilarity_matrix(fixture::random_points(7, 3, 2), Metric::manhattan);
  const auto r = pam(d, 7);
  EXPECT_EQ(r.objective, 0.0);
  const auto labels = assign_to_medoids(d, r.medoids);
  EXPECT_EQ(metrics::Partition::from_labels(labels).occupied_clusters(), 7);
}

TEST(PamTest, SwapsStrictlyDecrease) {
  for (int t = 0; t < 20; ++t) {
    const auto d = dissimilarity_matrix(fixture::random_points(40, 2, t), Metric::euclidean);
    const auto r = pam(d, 4);
    EXPECT_EQ(r.trace.size(), static_cast<std::size_t>(r.swaps) + 1);
    for (std::size_t s = 1; s < r.trace.size(); ++s) EXPECT_LT(r.trace[s], r.trace[s - 1]);
    EXPECT_EQ(r.trace.back(), r.objective);
  }
}

TEST(ClaraTest, FullSampleEqualsPam) {
  const auto x = fixture::random_points(30, 2, 9);
  Rng rng(1);
  const auto c = clara(x, {3, 1, 30, Metric::euclidean}, rng);
  const auto d = dissimilarity_matrix(x, Metric::euclidean);
  const auto p = pam(d, 3);
  EXPECT_NEAR(c.objective, p.objective, 1e-9);
  EXPECT_TRUE(oracle::same_partition(std::vector<int>(c.partition.labels().begin(), c.partition.labels().end()),
                                     assign_to_medoids(d, p.medoids)));
}

TEST(ClaraTest, SeparatedBlobsAndRunningBest) {
  const auto b = fixture::two_blobs(60, 2);
  Rng rng(5);
  const auto r = clara(b.x, {2, 5, 0, Metric::euclidean}, rng);
  EXPECT_EQ(metrics::score(b.truth(), r.partition).ari, 1.0);
  ASSERT_EQ(r.trace.size(), 5u);
  for (std::size_t s = 1; s < r.trace.size(); ++s) EXPECT_LE(r.trace[s], r.trace[s - 1]);
  EXPECT_EQ(r.trace.back(), r.objective);
}

TEST(ClaraTest, RejectsBadSampsize) {
  const auto x = fixture::random_points(10, 2, 1);
  Rng rng(1);
  try {
    clara(x, {3, 5, 3, Metric::euclidean}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_sampsize);
  }
  EXPECT_THROW(clara(x, {3, 5, 11, Metric::euclidean}, rng), Error);
}

}  // namespace
}  // namespace clusterbench::cluster
