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
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "clusterbench/error.hpp"
#include "clusterbench/kmeans.hpp"

namespace clusterbench::cluster {

CovarianceModel parse_covariance_model(std::string_view name) {
  if (name == "spherical-shared") return CovarianceModel::spherical_shared;
  if (name == "spherical-varying") return CovarianceModel::spherical_varying;
  if (name == "diagonal-varying") return CovarianceModel::diagonal_varying;
  if (name == "full-varying") return CovarianceModel::full_varying;
  throw Error(ErrorKind::invalid_parameter, "unknown covariance model '" + std::string(name) + "'");
}

EmInit parse_em_init(std::string_view name) {
  if (name == "random-z") return EmInit::random_z;
  if (name == "kmeans-z") return EmInit::kmeans_z;
  throw Error(ErrorKind::invalid_parameter, "unknown EM initialization '" + std::string(name) + "'");
}

linalg::SymmetricMatrix GaussianMixture::covariance(std::size_t c) const {
  if (model == CovarianceModel::full_varying) return covariances[c];
  linalg::SymmetricMatrix s(means.cols());
  for (std::size_t d = 0; d < means.cols(); ++d) s.set(d, d, variances(c, d));
  return s;
}

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)
constexpr int kMaxReseeds = 3;

class EmSolver {
 public:
  EmSolver(const linalg::Matrix& x, const EmOptions& opt) : x_(x), opt_(opt), n_(x.rows()), f_(x.cols()), k_(opt.k) {
    // Mean per-feature population variance of the data.
    double total = 0.0;
    for (std::size_t d = 0; d < f_; ++d) {
      double mean = 0.0;
      for (std::size_t i = 0; i < n_; ++i) mean += x_(i, d);
      mean /= static_cast<double>(n_);
      double var = 0.0;
      for (std::size_t i = 0; i < n_; ++i) var += (x_(i, d) - mean) * (x_(i, d) - mean);
      total += var / static_cast<double>(n_);
    }
    mean_variance_ = total / static_cast<double>(f_);
    if (!(mean_variance_ > 0.0)) throw Error(ErrorKind::degenerate_fit, "EM: data has zero variance");
    ridge_ = 1e-6 * mean_variance_ * static_cast<double>(n_) / static_cast<double>(k_);

    mix_.model = opt.model;
    mix_.weights.assign(k_, 1.0 / static_cast<double>(k_));
    mix_.means = linalg::Matrix(k_, f_);
    mix_.variances = linalg::Matrix(k_, f_, mean_variance_);
    if (opt.model == CovarianceModel::full_varying) {
      mix_.covariances.assign(k_, linalg::SymmetricMatrix(f_));
      chol_inv_.assign(k_, linalg::Matrix(f_, f_));
      log_det_.assign(k_, 0.0);
    }
    z_ = linalg::Matrix(n_, k_);
    lse_.assign(n_, 0.0);
  }

  linalg::Matrix& responsibilities() { return z_; }
  double ridge() const { return ridge_; }
  const GaussianMixture& mixture() const { return mix_; }
  double log_likelihood() const { return loglik_; }
  const std::vector<double>& lse() const { return lse_; }

  // Returns components whose responsibility mass is below the collapse threshold.
  std::vector<std::size_t> m_step() {
    std::vector<std::size_t> collapsed;
    std::vector<double> nk(k_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t c = 0; c < k_; ++c) nk[c] += z_(i, c);
    const double threshold = 1e-8 * static_cast<double>(n_);

    double shared_scatter = 0.0;
    for (std::size_t c = 0; c < k_; ++c) {
      if (nk[c] < threshold) {
        collapsed.push_back(c);
        placeholder(c);
        continue;
      }
      auto mu = mix_.means.row(c);
      std::fill(mu.begin(), mu.end(), 0.0);
      for (std::size_t i = 0; i < n_; ++i) {
        const double w = z_(i, c);
        if (w == 0.0) continue;
        auto xi = x_.row(i);
        for (std::size_t d = 0; d < f_; ++d) mu[d] += w * xi[d];
      }
      for (double& v : mu) v /= nk[c];
      mix_.weights[c] = nk[c] / static_cast<double>(n_);

      if (opt_.model == CovarianceModel::full_varying) {
        linalg::Matrix w(f_, f_);
        std::vector<double> dx(f_);
        for (std::size_t i = 0; i < n_; ++i) {
          const double zc = z_(i, c);
          if (zc == 0.0) continue;
          for (std::size_t d = 0; d < f_; ++d) dx[d] = x_(i, d) - mu[d];
          for (std::size_t a = 0; a < f_; ++a)
            for (std::size_t b = a; b < f_; ++b) w(a, b) += zc * dx[a] * dx[b];
        }
        linalg::SymmetricMatrix sigma(f_);
        for (std::size_t a = 0; a < f_; ++a)
          for (std::size_t b = a; b < f_; ++b) sigma.set(a, b, (w(a, b) + (a == b ? ridge_ : 0.0)) / nk[c]);
        set_full(c, std::move(sigma));
        continue;
      }

      std::vector<double> diag_scatter(f_, 0.0);
      for (std::size_t i = 0; i < n_; ++i) {
        const double zc = z_(i, c);
        if (zc == 0.0) continue;
        for (std::size_t d = 0; d < f_; ++d) {
          const double dx = x_(i, d) - mu[d];
          diag_scatter[d] += zc * dx * dx;
        }
      }
      const double fd = static_cast<double>(f_);
      double trace = 0.0;
      for (double v : diag_scatter) trace += v;
      switch (opt_.model) {
        case CovarianceModel::spherical_varying: {
          const double var = (trace + fd * ridge_) / (fd * nk[c]);
          for (std::size_t d = 0; d < f_; ++d) mix_.variances(c, d) = var;
          break;
        }
        case CovarianceModel::diagonal_varying:
          for (std::size_t d = 0; d < f_; ++d) mix_.variances(c, d) = (diag_scatter[d] + ridge_) / nk[c];
          break;
        case CovarianceModel::spherical_shared:
          shared_scatter += trace;
          break;
        case CovarianceModel::full_varying:
          break;
      }
    }
    if (opt_.model == CovarianceModel::spherical_shared) {
      const double fd = static_cast<double>(f_);
      const double var = (shared_scatter + static_cast<double>(k_) * fd * ridge_) / (static_cast<double>(n_) * fd);
      for (std::size_t c = 0; c < k_; ++c)
        if (std::find(collapsed.begin(), collapsed.end(), c) == collapsed.end())
          for (std::size_t d = 0; d < f_; ++d) mix_.variances(c, d) = var;
    }
    normalize_weights();
    return collapsed;
  }

  // Updates responsibilities; returns the penalized log-likelihood.
  double e_step() {
    std::vector<double> log_w(k_);
    for (std::size_t c = 0; c < k_; ++c) log_w[c] = std::log(mix_.weights[c]);
    std::vector<double> lr(k_);
    std::vector<double> dx(f_), y(f_);
    double loglik = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      auto xi = x_.row(i);
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k_; ++c) {
        auto mu = mix_.means.row(c);
        double quad = 0.0;
        double log_det = 0.0;
        if (opt_.model == CovarianceModel::full_varying) {
          for (std::size_t d = 0; d < f_; ++d) dx[d] = xi[d] - mu[d];
          const auto& li = chol_inv_[c];
          for (std::size_t a = 0; a < f_; ++a) {
            double s = 0.0;
            for (std::size_t b = 0; b <= a; ++b) s += li(a, b) * dx[b];
            quad += s * s;
          }
          log_det = log_det_[c];
        } else {
          for (std::size_t d = 0; d < f_; ++d) {
            const double diff = xi[d] - mu[d];
            const double var = mix_.variances(c, d);
            quad += diff * diff / var;
            log_det += std::log(var);
          }
        }
        lr[c] = log_w[c] - 0.5 * (static_cast<double>(f_) * kLog2Pi + log_det + quad);
        top = std::max(top, lr[c]);
      }
      double sum = 0.0;
      for (std::size_t c = 0; c < k_; ++c) sum += std::exp(lr[c] - top);
      const double lse = top + std::log(sum);
      lse_[i] = lse;
      loglik += lse;
      for (std::size_t c = 0; c < k_; ++c) z_(i, c) = std::exp(lr[c] - lse);
    }
    loglik_ = loglik;
    return loglik - 0.5 * ridge_ * inverse_trace();
  }

  // Centers each collapsed component on the object with the lowest mixture likelihood.
  void reseed(const std::vector<std::size_t>& collapsed) {
    std::vector<char> used(n_, 0);
    for (std::size_t c : collapsed) {
      std::size_t worst = n_;
      for (std::size_t i = 0; i < n_; ++i)
        if (!used[i] && (worst == n_ || lse_[i] < lse_[worst])) worst = i;
      used[worst] = 1;
      std::copy(x_.row(worst).begin(), x_.row(worst).end(), mix_.means.row(c).begin());
      set_isotropic(c, mean_variance_);
      mix_.weights[c] = 1.0 / static_cast<double>(n_);
    }
    normalize_weights();
  }

 private:
  void placeholder(std::size_t c) {
    auto mu = mix_.means.row(c);
    for (std::size_t d = 0; d < f_; ++d) {
      double m = 0.0;
      for (std::size_t i = 0; i < n_; ++i) m += x_(i, d);
      mu[d] = m / static_cast<double>(n_);
    }
    set_isotropic(c, mean_variance_);
    mix_.weights[c] = 1.0 / static_cast<double>(n_);
  }

  void set_isotropic(std::size_t c, double var) {
    if (opt_.model == CovarianceModel::full_varying) {
      linalg::SymmetricMatrix s(f_);
      for (std::size_t d = 0; d < f_; ++d) s.set(d, d, var);
      set_full(c, std::move(s));
    } else {
      for (std::size_t d = 0; d < f_; ++d) mix_.variances(c, d) = var;
    }
  }

  void set_full(std::size_t c, linalg::SymmetricMatrix sigma) {
    const auto l = linalg::cholesky(sigma);
    double log_det = 0.0;
    for (std::size_t d = 0; d < f_; ++d) log_det += 2.0 * std::log(l(d, d));
    chol_inv_[c] = linalg::lower_triangular_inverse(l);
    log_det_[c] = log_det;
    mix_.covariances[c] = std::move(sigma);
  }

  void normalize_weights() {
    double s = 0.0;
    for (double w : mix_.weights) s += w;
    for (double& w : mix_.weights) w /= s;
  }

  // sum_c tr(Sigma_c^-1)
  double inverse_trace() const {
    double t = 0.0;
    for (std::size_t c = 0; c < k_; ++c) {
      if (opt_.model == CovarianceModel::full_varying) {
        for (double v : chol_inv_[c].data()) t += v * v;
      } else {
        for (std::size_t d = 0; d < f_; ++d) t += 1.0 / mix_.variances(c, d);
      }
    }
    return t;
  }

  const linalg::Matrix& x_;
  const EmOptions& opt_;
  std::size_t n_, f_, k_;
  double mean_variance_ = 0.0;
  double ridge_ = 0.0;
  double loglik_ = 0.0;
  GaussianMixture mix_;
  std::vector<linalg::Matrix> chol_inv_;
  std::vector<double> log_det_;
  linalg::Matrix z_;
  std::vector<double> lse_;
};

}  // namespace

EmFit em_gmm(const linalg::Matrix& data, const EmOptions& options, Rng& rng) {
  const std::size_t n = data.rows();
  if (options.k < 1 || options.k > n)
    throw Error(ErrorKind::invalid_k, "EM: k = " + std::to_string(options.k) + " with N = " + std::to_string(n));
  if (data.cols() < 1) throw Error(ErrorKind::invalid_dimension, "EM: data has no features");
  if (options.max_iter < 1) throw Error(ErrorKind::invalid_parameter, "EM: max_iter must be positive");

  EmSolver solver(data, options);
  auto& z = solver.responsibilities();
  if (options.init == EmInit::random_z) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < options.k; ++c) s += (z(i, c) = u(rng));
      for (std::size_t c = 0; c < options.k; ++c) z(i, c) /= s;
    }
  } else {
    const auto km = kmeans(data, KMeansOptions{options.k, 10, 1, KMeansVariant::lloyd}, rng);
    for (std::size_t i = 0; i < n; ++i) z(i, static_cast<std::size_t>(km.partition[i])) = 1.0;
  }

  EmFit fit;
  fit.ridge = solver.ridge();
  auto& trace = fit.result.trace;
  int reseeds = 0;
  int iterations = 0;
  bool converged = false;

  while (iterations < options.max_iter) {
    ++iterations;
    const auto collapsed = solver.m_step();
    double objective = solver.e_step();
    if (!collapsed.empty()) {
      if (++reseeds > kMaxReseeds)
        throw Error(ErrorKind::degenerate_fit, "EM: mixture components keep collapsing");
      solver.reseed(collapsed);
      objective = solver.e_step();
      fit.reseed_iterations.push_back(trace.size());
    }
    const bool reseeded = !collapsed.empty();
    trace.push_back(objective);
    if (!std::isfinite(objective)) throw Error(ErrorKind::degenerate_fit, "EM: log-likelihood is not finite");
    if (trace.size() >= 2 && !reseeded) {
      const double gain = trace.back() - trace[trace.size() - 2];
      if (gain < options.tol * std::abs(trace.back())) {
        converged = true;
        break;
      }
    }
  }

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < options.k; ++c)
      if (z(i, c) > z(i, best)) best = c;
    labels[i] = static_cast<int>(best);
  }
  fit.result.partition = metrics::Partition(std::move(labels), static_cast<int>(options.k));
  fit.result.objective = trace.back();
  fit.result.iterations_used = iterations;
  fit.result.converged = converged;
  fit.mixture = solver.mixture();
  fit.log_likelihood = solver.log_likelihood();
  return fit;
}

}  // namespace clusterbench::cluster
