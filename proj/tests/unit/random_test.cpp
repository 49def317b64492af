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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

namespace clusterbench {
namespace {

TEST(DeriveSeedTest, DependsOnEveryPartAndOrder) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(2, {2, 3}));
  EXPECT_NE(derive_seed(1, {2}), derive_seed(1, {2, 0}));
}

TEST(HashBytesTest, MatchesFnv1aVectors) {
  EXPECT_EQ(hash_bytes(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(hash_bytes("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(SampleWithoutReplacementTest, DistinctAndInRange) {
  Rng rng(5);
  for (std::size_t k : {0, 1, 7, 20}) {
    const auto s = sample_without_replacement(20, k, rng);
    ASSERT_EQ(s.size(), k);
    std::set<std::size_t> seen(s.begin(), s.end());
    EXPECT_EQ(seen.size(), k);
    EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](std::size_t i) { return i < 20; }));
  }
}

}  // namespace
}  // namespace clusterbench
