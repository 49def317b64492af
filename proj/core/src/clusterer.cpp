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

#include "clusterbench/clusterer.hpp"

#include "clusterbench/em.hpp"
#include "clusterbench/hierarchical.hpp"
#include "clusterbench/kmeans.hpp"
#include "clusterbench/pam.hpp"
#include "clusterbench/random.hpp"
#include "clusterbench/spectral.hpp"

namespace clusterbench::cluster {

ProblemShape shape_of(const linalg::Matrix& data, std::size_t k) { return {data.rows(), k, data.cols()}; }

ClusterResult run_clusterer(const ClustererConfig& config, const linalg::Matrix& data, std::uint64_t seed) {
  const auto shape = shape_of(data, config.k());
  config.validate(shape);
  Rng rng(seed);
  const std::size_t k = config.k();
  switch (config.algorithm()) {
    case Algorithm::kmeans: {
      KMeansOptions o;
      o.k = k;
      o.iter_max = static_cast<int>(config.integer("iter_max", shape));
      o.nstart = static_cast<int>(config.integer("nstart", shape));
      o.variant = parse_kmeans_variant(config.choice("variant", shape));
      return kmeans(data, o, rng);
    }
    case Algorithm::clara: {
      ClaraOptions o;
      o.k = k;
      o.samples = static_cast<int>(config.integer("samples", shape));
      o.sampsize = static_cast<std::size_t>(config.integer("sampsize", shape));
      o.metric = parse_metric(config.choice("metric", shape));
      return clara(data, o, rng);
    }
    case Algorithm::hierarchical: {
      HierarchicalOptions o;
      o.k = k;
      o.metric = parse_metric(config.choice("metric", shape));
      o.method = parse_linkage(config.choice("method", shape));
      o.par_method = config.real("par_method", shape);
      return hierarchical(data, o);
    }
    case Algorithm::em: {
      EmOptions o;
      o.k = k;
      o.model = parse_covariance_model(config.choice("model", shape));
      o.init = parse_em_init(config.choice("init", shape));
      return em_gmm(data, o, rng).result;
    }
    case Algorithm::spectral: {
      SpectralOptions o;
      o.k = k;
      o.kernel = parse_kernel(config.choice("kernel", shape));
      o.kernel_scale = config.real("kernel_scale", shape);
      o.iter = static_cast<int>(config.integer("iter", shape));
      return spectral(data, o, rng);
    }
  }
  return {};
}

ClusterResult run_clusterer(const ClustererConfig& config, const datagen::Dataset& dataset, std::uint64_t seed) {
  return run_clusterer(config, dataset.features, seed);
}

datagen::Probe make_probe(ClustererConfig config, std::uint64_t seed) {
  return [config, seed](const datagen::Dataset& ds) mutable {
    config.set_k(ds.spec.num_classes);
    return run_clusterer(config, ds, derive_seed(seed, {hash_bytes(ds.id())})).partition;
  };
}

}  // namespace clusterbench::cluster
