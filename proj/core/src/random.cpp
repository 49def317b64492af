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

#include "clusterbench/random.hpp"

#include <numeric>

#include "clusterbench/error.hpp"

namespace clusterbench {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::invalid_model: return "invalid-model";
    case ErrorKind::tuning_failed: return "tuning-failed";
    case ErrorKind::incompatible_partitions: return "incompatible-partitions";
    case ErrorKind::undefined_index: return "undefined-index";
    case ErrorKind::convergence_failure: return "convergence-failure";
    case ErrorKind::not_psd: return "not-psd";
    case ErrorKind::invalid_k: return "invalid-k";
    case ErrorKind::invalid_sampsize: return "invalid-sampsize";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::degenerate_fit: return "degenerate-fit";
    case ErrorKind::degenerate_data: return "degenerate-data";
    case ErrorKind::invalid_grid: return "invalid-grid";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::config_error: return "config-error";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t h = mix64(base);
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

std::uint64_t hash_bytes(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw Error(ErrorKind::invalid_k, "cannot sample more items than available");
  // Partial Fisher-Yates.
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace clusterbench
