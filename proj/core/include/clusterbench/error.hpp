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

#include <stdexcept>
#include <string>

namespace clusterbench {

enum class ErrorKind {
  invalid_dimension,
  invalid_model,
  tuning_failed,
  incompatible_partitions,
  undefined_index,
  convergence_failure,
  not_psd,
  invalid_k,
  invalid_sampsize,
  invalid_parameter,
  degenerate_fit,
  degenerate_data,
  invalid_grid,
  parse_error,
  config_error,
  io_error,
};

const char* to_string(ErrorKind kind) noexcept;

// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when alpha tuning cannot reach the requested band; carries the closest value seen.
class TuningFailed : public Error {
 public:
  TuningFailed(const std::string& what, double best_alpha, double best_score)
      : Error(ErrorKind::tuning_failed, what), best_alpha_(best_alpha), best_score_(best_score) {}

  double best_alpha() const noexcept { return best_alpha_; }
  double best_score() const noexcept { return best_score_; }

 private:
  double best_alpha_;
  double best_score_;
};

// Raised by the dataset reader; line and column are 1-based, column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse_error,
              what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace clusterbench
