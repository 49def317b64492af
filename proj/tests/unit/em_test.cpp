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

#include "clusterbench/em.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "clusterbench/datagen.hpp"
#include "clusterbench/error.hpp"
#include "fixtures.hpp"

namespace clusterbench::cluster {
namespace {

TEST(EmTest, SingleComponentIsSampleMoments) {
  const auto x = fixture::random_points(40, 3, 11);
  Rng rng(1);
  const auto fit = em_gmm(x, {1, CovarianceModel::full_varying, EmInit::random_z, 50, 1e-10}, rng);
  const std::size_t n = x.rows();
  std::vector<double> mean(3, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < 3; ++d) mean[d] += x(i, d) / static_cast<double>(n);
  for (std::size_t d = 0; d < 3; ++d) EXPECT_NEAR(fit.mixture.means(0, d), mean[d], 1e-9);
  const auto sigma = fit.mixture.covariance(0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
      const double ridge = a == b ? fit.ridge / static_cast<double>(n) : 0.0;
      EXPECT_NEAR(sigma(a, b) - ridge, s / static_cast<double>(n), 1e-9);
    }
  EXPECT_NEAR(fit.mixture.weights[0], 1.0, 1e-15);
}

TEST(EmTest, ObjectiveNeverDecreases) {
  const CovarianceModel models[] = {CovarianceModel::spherical_shared, CovarianceModel::spherical_varying,
                                    CovarianceModel::diagonal_varying, CovarianceModel::full_varying};
  int fitted = 0;
  for (int t = 0; t < 50; ++t) {
    const auto ds = datagen::generate_dataset({3, 3, 30, 1.5, 900u + static_cast<unsigned>(t), 0});
    Rng rng(t);
    EmOptions opts{3, models[t % 4], t % 3 ? EmInit::random_z : EmInit::kmeans_z, 200, 1e-10};
    EmFit fit;
    try {
      fit = em_gmm(ds.features, opts, rng);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::degenerate_fit);
      continue;
    }
    ++fitted;
    const auto& tr = fit.result.trace;
    for (std::size_t i = 1; i < tr.size(); ++i) {
      if (std::find(fit.reseed_iterations.begin(), fit.reseed_iterations.end(), i) != fit.reseed_iterations.end())
        continue;
      EXPECT_GE(tr[i], tr[i - 1] - 1e-9 * std::max(1.0, std::abs(tr[i - 1]))) << t << ' ' << i;
    }
  }
  EXPECT_GE(fitted, 45);
}

TEST(EmTest, SeparatedSphericalBlobs) {
  const auto b = fixture::two_blobs(50, 21);
  Rng rng(2);
  const auto fit = em_gmm(b.x, {2, CovarianceModel::spherical_varying}, rng);
  EXPECT_EQ(metrics::score(b.truth(), fit.result.partition).ari, 1.0);
  EXPECT_TRUE(fit.result.converged);
}

TEST(EmTest, ModelAndInitNames) {
  EXPECT_EQ(parse_covariance_model("diagonal-varying"), CovarianceModel::diagonal_varying);
  EXPECT_EQ(parse_em_init("kmeans-z"), EmInit::kmeans_z);
  EXPECT_THROW(parse_covariance_model("VVV"), Error);
}

TEST(EmTest, Errors) {
  const auto x = fixture::random_points(5, 2, 1);
  Rng rng(1);
  EXPECT_THROW(em_gmm(x, {6}, rng), Error);
  linalg::Matrix flat(6, 2, 1.0);
  try {
    em_gmm(flat, {2}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_fit);
  }
}

}  // namespace
}  // namespace clusterbench::cluster
