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
#include <limits>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::datagen {

metrics::Partition Dataset::truth() const {
  return metrics::Partition(labels, static_cast<int>(spec.num_classes));
}

std::string Dataset::id() const {
  return corpus_name(spec.num_classes, spec.num_features) + "-Ne" + std::to_string(spec.objects_per_class) + "-r" +
         std::to_string(spec.realization_index);
}

std::string corpus_name(std::size_t num_classes, std::size_t num_features) {
  return "DB" + std::to_string(num_classes) + "C" + std::to_string(num_features) + "F";
}

linalg::SymmetricMatrix generate_covariance(std::size_t num_features, const CovarianceLaw& law, Rng& rng) {
  if (num_features == 0) throw Error(ErrorKind::invalid_dimension, "covariance needs at least one feature");
  if (!(law.moment_sd >= 0.0)) throw Error(ErrorKind::invalid_dimension, "moment_sd must be non-negative");
  const std::size_t m = law.inner_dim == 0 ? num_features : law.inner_dim;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::normal_distribution<double> entry(law.moment_mean * scale, law.moment_sd * scale);
  linalg::Matrix g(num_features, m);
  for (double& v : g.data()) v = entry(rng);
  return linalg::SymmetricMatrix::gram(g);
}

linalg::SymmetricMatrix generate_covariance(std::size_t num_features, double moment_mean, double moment_sd,
                                            Rng& rng) {
  return generate_covariance(num_features, CovarianceLaw{moment_mean, moment_sd, 0}, rng);
}

linalg::Matrix generate_class(const ClassModel& model, std::size_t n, Rng& rng) {
  const std::size_t f = model.covariance.dim();
  if (model.shift.size() != f) throw Error(ErrorKind::invalid_model, "shift length differs from covariance dimension");
  if (!(model.alpha > 0.0)) throw Error(ErrorKind::invalid_model, "alpha must be positive");
  for (double s : model.shift)
    if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::invalid_model, "shift coordinate outside [-1, 1]");

  linalg::Matrix root;
  try {
    root = linalg::psd_sqrt(model.covariance);
  } catch (const Error& e) {
    throw Error(ErrorKind::invalid_model, std::string("class covariance rejected: ") + e.what());
  }

  linalg::Matrix out(n, f);
  std::normal_distribution<double> standard(0.0, 1.0);
  std::vector<double> z(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& v : z) v = standard(rng);
    auto row = out.row(i);
    for (std::size_t a = 0; a < f; ++a) {
      double acc = 0.0;
      for (std::size_t b = 0; b < f; ++b) acc += root(a, b) * z[b];
      row[a] = acc / model.alpha + model.shift[a];
    }
  }
  return out;
}

Dataset generate_dataset(const DatasetSpec& spec, const CovarianceLaw& law) {
  if (spec.num_classes == 0 || spec.num_features == 0 || spec.objects_per_class == 0)
    throw Error(ErrorKind::invalid_dimension, "dataset needs C >= 1, F >= 1 and Ne >= 1");

  const std::size_t c = spec.num_classes;
  const std::size_t f = spec.num_features;
  const std::size_t ne = spec.objects_per_class;
  const std::uint64_t dataset_seed = derive_seed(spec.seed, {c, f, ne, spec.realization_index});

  Dataset ds;
  ds.spec = spec;
  ds.features = linalg::Matrix(c * ne, f);
  ds.labels.resize(c * ne);
  for (std::size_t cls = 0; cls < c; ++cls) {
    Rng rng(derive_seed(dataset_seed, {cls}));
    ClassModel model;
    model.covariance = generate_covariance(f, law, rng);
    model.alpha = spec.alpha;
    model.shift.resize(f);
    std::uniform_real_distribution<double> shift(-1.0, 1.0);
    for (double& s : model.shift) s = shift(rng);
    const auto block = generate_class(model, ne, rng);
    for (std::size_t i = 0; i < ne; ++i) {
      std::copy(block.row(i).begin(), block.row(i).end(), ds.features.row(cls * ne + i).begin());
      ds.labels[cls * ne + i] = static_cast<int>(cls);
    }
  }
  return ds;
}

std::vector<GridCell> full_grid(double alpha) {
  std::vector<GridCell> grid;
  for (std::size_t c : {2, 10, 50})
    for (std::size_t f : {2, 10, 50})
      for (std::size_t ne : {5, 50, 100}) grid.push_back({c, f, ne, alpha});
  return grid;
}

std::vector<Dataset> generate_corpus(std::span<const GridCell> grid, std::size_t realizations,
                                     std::uint64_t base_seed, const CovarianceLaw& law) {
  if (realizations == 0) throw Error(ErrorKind::invalid_dimension, "corpus needs at least one realization");
  std::vector<Dataset> corpus;
  corpus.reserve(grid.size() * realizations);
  for (const auto& cell : grid)
    for (std::size_t r = 0; r < realizations; ++r)
      corpus.push_back(generate_dataset(
          {cell.num_classes, cell.num_features, cell.objects_per_class, cell.alpha, base_seed, r}, law));
  return corpus;
}

TuneResult tune_alpha(const DatasetSpec& spec, const Probe& probe, const TuneOptions& options,
                      const CovarianceLaw& law) {
  if (!(options.low >= 0.0 && options.low < options.high && options.high <= 1.0))
    throw Error(ErrorKind::invalid_parameter, "tuning band must satisfy 0 <= low < high <= 1");
  if (!(options.initial_alpha > 0.0)) throw Error(ErrorKind::invalid_parameter, "initial alpha must be positive");
  if (options.pilot_realizations == 0) throw Error(ErrorKind::invalid_parameter, "pilot set is empty");

  const std::uint64_t pilot_seed = derive_seed(spec.seed, {0x70696c6f74ULL});
  TuneResult best;
  double best_distance = std::numeric_limits<double>::infinity();
  int evaluations = 0;

  auto evaluate = [&](double alpha) {
    double total = 0.0;
    for (std::size_t r = 0; r < options.pilot_realizations; ++r) {
      DatasetSpec pilot = spec;
      pilot.alpha = alpha;
      pilot.seed = pilot_seed;
      pilot.realization_index = r;
      const auto ds = generate_dataset(pilot, law);
      total += metrics::adjusted_rand(metrics::build_contingency(ds.truth(), probe(ds)));
    }
    ++evaluations;
    const double score = total / static_cast<double>(options.pilot_realizations);
    const double distance = std::max({0.0, options.low - score, score - options.high});
    if (distance < best_distance) {
      best_distance = distance;
      best = {alpha, score, evaluations};
    }
    return score;
  };
  auto in_band = [&](double s) { return s > options.low && s < options.high; };
  auto done = [&](double alpha, double s) { return TuneResult{alpha, s, evaluations}; };

  double alpha = options.initial_alpha;
  double s = evaluate(alpha);
  if (in_band(s)) return done(alpha, s);

  // Bracket: below_alpha scores <= low, above_alpha scores >= high.
  double below_alpha = 0.0;
  double above_alpha = 0.0;
  const bool too_hard = s <= options.low;
  (too_hard ? below_alpha : above_alpha) = alpha;
  while (evaluations < options.max_iter) {
    alpha = too_hard ? alpha * 2.0 : alpha * 0.5;
    s = evaluate(alpha);
    if (in_band(s)) return done(alpha, s);
    if (too_hard && s >= options.high) {
      above_alpha = alpha;
      break;
    }
    if (!too_hard && s <= options.low) {
      below_alpha = alpha;
      break;
    }
    (too_hard ? below_alpha : above_alpha) = alpha;
  }

  while (evaluations < options.max_iter && below_alpha > 0.0 && above_alpha > 0.0) {
    alpha = std::sqrt(below_alpha * above_alpha);
    s = evaluate(alpha);
    if (in_band(s)) return done(alpha, s);
    (s <= options.low ? below_alpha : above_alpha) = alpha;
  }

  throw TuningFailed("alpha tuning did not reach (" + std::to_string(options.low) + ", " +
                         std::to_string(options.high) + ") in " + std::to_string(options.max_iter) + " evaluations",
                     best.alpha, best.score);
}

}  // namespace clusterbench::datagen
