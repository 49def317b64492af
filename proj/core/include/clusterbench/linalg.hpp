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
#include <span>
#include <vector>

namespace clusterbench::linalg {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
// a * b^T
Matrix multiply_transposed(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
// Maximum absolute row sum.
double inf_norm(const Matrix& a);

// Square symmetric matrix. Both triangles are stored; every write is mirrored, so
// entries(i, j) == entries(j, i) holds exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t dim = 0) : m_(dim, dim) {}

  // Throws invalid_dimension unless `dense` is square and exactly symmetric.
  static SymmetricMatrix from_dense(const Matrix& dense);
  // g * g^T, computed on one triangle and mirrored.
  static SymmetricMatrix gram(const Matrix& g);
  static SymmetricMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  double max_diagonal() const noexcept;

  const Matrix& dense() const noexcept { return m_; }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
  int sweeps = 0;
};

// Full decomposition by cyclic Jacobi rotations. Converged once every off-diagonal
// magnitude is below 1e-12 * ||A||_F; throws convergence_failure after max_sweeps.
EigenDecomposition eigh(const SymmetricMatrix& m, int max_sweeps = 100);

// Symmetric square root V * sqrt(max(L, 0)) * V^T. Eigenvalues below
// -tolerance * max_diagonal are reported as not_psd; smaller negatives are clipped.
Matrix psd_sqrt(const SymmetricMatrix& m, double tolerance = 1e-8);

// Lower-triangular L with L * L^T = m. Throws not_psd on a non-positive pivot.
Matrix cholesky(const SymmetricMatrix& m);

// Inverse of a lower-triangular matrix with non-zero diagonal.
Matrix lower_triangular_inverse(const Matrix& l);

}  // namespace clusterbench::linalg
