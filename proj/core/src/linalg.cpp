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

#include "clusterbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "clusterbench/error.hpp"

namespace clusterbench::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::invalid_dimension, "multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::invalid_dimension, "multiply_transposed: column counts differ");
  Matrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ar = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      auto br = b.row(j);
      c(i, j) = std::inner_product(ar.begin(), ar.end(), br.begin(), 0.0);
    }
  }
  return c;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

SymmetricMatrix SymmetricMatrix::from_dense(const Matrix& dense) {
  if (dense.rows() != dense.cols()) throw Error(ErrorKind::invalid_dimension, "symmetric matrix must be square");
  for (std::size_t i = 0; i < dense.rows(); ++i)
    for (std::size_t j = i + 1; j < dense.cols(); ++j)
      if (dense(i, j) != dense(j, i)) throw Error(ErrorKind::invalid_dimension, "matrix is not symmetric");
  SymmetricMatrix s(dense.rows());
  s.m_ = dense;
  return s;
}

SymmetricMatrix SymmetricMatrix::gram(const Matrix& g) {
  SymmetricMatrix s(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    auto gi = g.row(i);
    for (std::size_t j = i; j < g.rows(); ++j) {
      auto gj = g.row(j);
      s.set(i, j, std::inner_product(gi.begin(), gi.end(), gj.begin(), 0.0));
    }
  }
  return s;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  SymmetricMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i) s.set(i, i, 1.0);
  return s;
}

double SymmetricMatrix::max_diagonal() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) best = std::max(best, m_(i, i));
  return best;
}

EigenDecomposition eigh(const SymmetricMatrix& m, int max_sweeps) {
  const std::size_t n = m.dim();
  if (n == 0) throw Error(ErrorKind::invalid_dimension, "eigh: empty matrix");

  Matrix a = m.dense();
  Matrix vt = Matrix::identity(n);  // row k holds eigenvector k
  const double tol = 1e-12 * frobenius_norm(a);

  auto off_diagonal_max = [&] {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, std::abs(a(i, j)));
    return best;
  };

  int sweep = 0;
  while (off_diagonal_max() >= tol && tol > 0.0) {
    if (sweep == max_sweeps)
      throw Error(ErrorKind::convergence_failure,
                  "eigh: Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < tol) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        auto rp = a.row(p);
        auto rq = a.row(q);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = rp[r];
          const double h = rq[r];
          const double gp = g - s * (h + g * tau);
          const double hq = h + s * (g - h * tau);
          rp[r] = gp;
          rq[r] = hq;
          a(r, q) = hq;
        }
        auto vp = vt.row(p);
        auto vq = vt.row(q);
        for (std::size_t r = 0; r < n; ++r) {
          const double g = vp[r];
          const double h = vq[r];
          vp[r] = g - s * (h + g * tau);
          vq[r] = h + s * (g - h * tau);
        }
      }
      // Column p is only read through row p inside the q loop; sync it once.
      for (std::size_t r = 0; r < n; ++r)
        if (r != p) a(r, p) = a(p, r);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    const auto src = vt.row(order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = src[r];
  }
  return out;
}

Matrix psd_sqrt(const SymmetricMatrix& m, double tolerance) {
  const auto eig = eigh(m);
  const double floor = -tolerance * m.max_diagonal();
  const std::size_t n = m.dim();
  std::vector<double> root(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] < floor)
      throw Error(ErrorKind::not_psd, "psd_sqrt: eigenvalue " + std::to_string(eig.values[k]) + " is negative");
    root[k] = std::sqrt(std::max(eig.values[k], 0.0));
  }
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += eig.vectors(i, k) * root[k] * eig.vectors(j, k);
      s(i, j) = acc;
      s(j, i) = acc;
    }
  }
  return s;
}

Matrix cholesky(const SymmetricMatrix& m) {
  const std::size_t n = m.dim();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw Error(ErrorKind::not_psd, "cholesky: matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

Matrix lower_triangular_inverse(const Matrix& l) {
  const std::size_t n = l.rows();
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s -= l(i, k) * inv(k, j);
      inv(i, j) = s / l(i, i);
    }
  }
  return inv;
}

}  // namespace clusterbench::linalg
