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

#include "clusterbench/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "clusterbench/clusterer.hpp"
#include "clusterbench/error.hpp"

namespace clusterbench::datagen {
namespace {

TEST(CovarianceTest, ZeroLawGivesZeroMatrix) {
  Rng rng(1);
  const auto s = generate_covariance(4, 0.0, 0.0, rng);
  for (double v : s.dense().data()) EXPECT_EQ(v, 0.0);

  ClassModel model{s, {0.5, -0.5, 0.0, 1.0}, 3.0};
  const auto x = generate_class(model, 10, rng);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t d = 0; d < 4; ++d) EXPECT_DOUBLE_EQ(x(i, d), model.shift[d]);
}

TEST(CovarianceTest, DrawsArePsd) {
  Rng rng(2);
  for (std::size_t f : {1, 2, 10, 30}) {
    for (int t = 0; t < 5; ++t) {
      const auto s = generate_covariance(f, CovarianceLaw{}, rng);
      const auto e = linalg::eigh(s);
      EXPECT_GE(e.values.front(), -1e-10 * std::max(1.0, e.values.back()));
    }
  }
  for (int t = 0; t < 1000; ++t) {
    const auto s = generate_covariance(10, CovarianceLaw{}, rng);
    ASSERT_GE(linalg::eigh(s).values.front(), -1e-8);
  }
  CovarianceLaw low_rank{0.0, 1.0, 2};
  const auto e = linalg::eigh(generate_covariance(6, low_rank, rng));
  EXPECT_NEAR(e.values[3], 0.0, 1e-10);
  EXPECT_GT(e.values[4], 1e-6);
}

TEST(CovarianceTest, SingleFeatureIsNonNegative) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto s = generate_covariance(1, 0.7, 2.0, rng);
    EXPECT_GE(s(0, 0), 0.0);
  }
}

TEST(CovarianceTest, DefaultLawHasIdentityMean) {
  Rng rng(3);
  const std::size_t f = 3;
  const int draws = 4000;
  linalg::Matrix acc(f, f);
  for (int t = 0; t < draws; ++t) {
    const auto s = generate_covariance(f, CovarianceLaw{}, rng);
    for (std::size_t i = 0; i < f * f; ++i) acc.data()[i] += s.dense().data()[i] / draws;
  }
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) EXPECT_NEAR(acc(i, j), i == j ? 1.0 : 0.0, 0.06);
}

TEST(GenerateClassTest, AlphaDividesSpread) {
  Rng rng(4);
  ClassModel model{linalg::SymmetricMatrix::identity(2), {0.0, 0.0}, 2.0};
  const std::size_t n = 100000;
  const auto x = generate_class(model, n, rng);
  for (std::size_t d = 0; d < 2; ++d) {
    double sum = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += x(i, d);
      sq += x(i, d) * x(i, d);
    }
    const double mean = sum / n;
    EXPECT_NEAR(sq / n - mean * mean, 0.25, 0.05 * 0.25);
  }
}

TEST(GenerateClassTest, RejectsBadModels) {
  Rng rng(5);
  const auto id = linalg::SymmetricMatrix::identity(2);
  EXPECT_THROW(generate_class({id, {0.0}, 1.0}, 3, rng), Error);
  EXPECT_THROW(generate_class({id, {0.0, 0.0}, 0.0}, 3, rng), Error);
  EXPECT_THROW(generate_class({id, {0.0, 1.5}, 1.0}, 3, rng), Error);
  linalg::SymmetricMatrix indefinite(2);
  indefinite.set(0, 0, 1.0);
  indefinite.set(1, 1, -1.0);
  try {
    generate_class({indefinite, {0.0, 0.0}, 1.0}, 3, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_model);
  }
}

// Kolmogorov-Smirnov statistic against U(-1, 1).
double ks_uniform(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double d = 0.0;
  const double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double cdf = (v[i] + 1.0) / 2.0;
    d = std::max({d, (i + 1) / n - cdf, cdf - i / n});
  }
  return d;
}

TEST(GenerateDatasetTest, ShiftsAreUniform) {
  // With a huge alpha every object sits on its class shift.
  DatasetSpec spec{50, 50, 1, 1e12, 9, 0};
  const auto ds = generate_dataset(spec);
  std::vector<double> shifts(ds.features.data().begin(), ds.features.data().end());
  ASSERT_EQ(shifts.size(), 2500u);
  for (double s : shifts) ASSERT_LE(std::abs(s), 1.0 + 1e-9);
  // 1% critical value is 1.63 / sqrt(n).
  EXPECT_LT(ks_uniform(shifts), 1.63 / std::sqrt(2500.0));
}

TEST(GenerateDatasetTest, ShapeLabelsAndDeterminism) {
  DatasetSpec spec{3, 4, 7, 1.5, 11, 2};
  const auto a = generate_dataset(spec);
  EXPECT_EQ(a.features.rows(), 21u);
  EXPECT_EQ(a.num_features(), 4u);
  EXPECT_EQ(a.labels, (std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(a.id(), "DB3C4F-Ne7-r2");
  EXPECT_EQ(generate_dataset(spec).features, a.features);
  spec.realization_index = 3;
  EXPECT_NE(generate_dataset(spec).features, a.features);
  EXPECT_THROW(generate_dataset({0, 2, 2, 1.0, 0, 0}), Error);

  const auto tiny = generate_dataset({1, 1, 5, 1.0, 3, 0});
  EXPECT_EQ(tiny.features.rows(), 5u);
  EXPECT_EQ(tiny.labels, std::vector<int>(5, 0));
}

TEST(GenerateCorpusTest, FullGrid) {
  const auto grid = full_grid(1.0);
  ASSERT_EQ(grid.size(), 27u);
  std::vector<GridCell> small;
  for (const auto& c : grid)
    if (c.num_classes * c.objects_per_class <= 500) small.push_back(c);
  const auto corpus = generate_corpus(small, 2, 7);
  EXPECT_EQ(corpus.size(), small.size() * 2);
  std::set<std::string> ids;
  for (const auto& ds : corpus) {
    ids.insert(ds.id());
    EXPECT_EQ(ds.size(), ds.spec.num_classes * ds.spec.objects_per_class);
    EXPECT_EQ(ds.num_features(), ds.spec.num_features);
  }
  EXPECT_EQ(ids.size(), corpus.size());
  EXPECT_THROW(generate_corpus(small, 0, 7), Error);
}

metrics::Partition half_right(const Dataset& ds) {
  std::vector<int> labels = ds.labels;
  for (std::size_t i = 0; i < labels.size(); i += 2) labels[i] = 0;
  return metrics::Partition(labels, static_cast<int>(ds.spec.num_classes));
}

TEST(TuneAlphaTest, WideBandAcceptsInitialAlpha) {
  DatasetSpec spec{2, 2, 20, 1.0, 5, 0};
  TuneOptions opts;
  opts.low = 0.0;
  opts.high = 1.0;
  opts.initial_alpha = 3.5;
  const auto r = tune_alpha(spec, half_right, opts);
  EXPECT_EQ(r.alpha, 3.5);
  EXPECT_EQ(r.evaluations, 1);
}

TEST(TuneAlphaTest, UnreachableBandFails) {
  DatasetSpec spec{2, 2, 10, 1.0, 5, 0};
  TuneOptions opts;
  opts.max_iter = 6;
  auto perfect = [](const Dataset& ds) { return ds.truth(); };
  try {
    tune_alpha(spec, perfect, opts);
    FAIL();
  } catch (const TuningFailed& e) {
    EXPECT_EQ(e.kind(), ErrorKind::tuning_failed);
    EXPECT_GT(e.best_alpha(), 0.0);
    EXPECT_EQ(e.best_score(), 1.0);
  }
  opts.low = 0.5;
  opts.high = 0.5;
  EXPECT_THROW(tune_alpha(spec, perfect, opts), Error);
}

TEST(TuneAlphaTest, KMeansProbeLandsInBand) {
  DatasetSpec spec{2, 10, 50, 1.0, 2026, 0};
  const auto probe = cluster::make_probe(cluster::ClustererConfig(cluster::Algorithm::kmeans, 2), 2026);
  const auto r = tune_alpha(spec, probe);
  EXPECT_GT(r.score, 0.05);
  EXPECT_LT(r.score, 0.95);
  EXPECT_GE(r.alpha, 0.5 * 1.16);
  EXPECT_LE(r.alpha, 1.5 * 1.16);
}

}  // namespace
}  // namespace clusterbench::datagen
