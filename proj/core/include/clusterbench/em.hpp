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
#include <string_view>
#include <vector>

#include "clusterbench/cluster_types.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::cluster {

// Covariance constraints, from most to least restricted:
// sigma^2 I shared, sigma_k^2 I, diag_k, full Sigma_k.
enum class CovarianceModel { spherical_shared, spherical_varying, diagonal_varying, full_varying };
enum class EmInit { random_z, kmeans_z };

CovarianceModel parse_covariance_model(std::string_view name);
EmInit parse_em_init(std::string_view name);

struct EmOptions {
  std::size_t k = 2;
  CovarianceModel model = CovarianceModel::spherical_varying;
  EmInit init = EmInit::random_z;
  int max_iter = 200;
  // Stop once the objective gains less than tol * |objective| in one iteration.
  double tol = 1e-8;
};

struct GaussianMixture {
  CovarianceModel model = CovarianceModel::spherical_varying;
  std::vector<double> weights;
  linalg::Matrix means;                         // k x F
  linalg::Matrix variances;                     // k x F diagonal; unused for full_varying
  std::vector<linalg::SymmetricMatrix> covariances;  // full_varying only

  // Materialized covariance of component c for any model.
  linalg::SymmetricMatrix covariance(std::size_t c) const;
};

struct EmFit {
  ClusterResult result;  // trace = penalized log-likelihood after every E-step
  GaussianMixture mixture;
  double log_likelihood = 0.0;  // unpenalized, at the final parameters
  // Scatter-matrix ridge psi. Each M-step solves Sigma_k = (W_k + psi I) / n_k, which is
  // the exact maximizer of loglik - psi/2 * sum_k tr(Sigma_k^-1); EM is therefore monotone
  // in that objective. psi = 1e-6 * mean feature variance * N / k, i.e. a diagonal lift
  // of about 1e-6 * mean variance for a balanced component.
  double ridge = 0.0;
  // Trace indices produced right after a collapsed component was reseeded.
  std::vector<std::size_t> reseed_iterations;
};

// Expectation-maximization for a Gaussian mixture. A component whose responsibility
// mass vanishes is reseeded at the object with the lowest mixture likelihood; more than
// three reseeds throw degenerate_fit. Partition = argmax responsibility.
EmFit em_gmm(const linalg::Matrix& data, const EmOptions& options, Rng& rng);

}  // namespace clusterbench::cluster
