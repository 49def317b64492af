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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace clusterbench {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive 64-bit hash of (base, parts...). Used to derive child seeds so that
// any unit of work can be regenerated without replaying a shared generator.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) noexcept;

// FNV-1a over bytes.
std::uint64_t hash_bytes(std::string_view bytes) noexcept;

// k distinct indices drawn uniformly from [0, n), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

}  // namespace clusterbench
