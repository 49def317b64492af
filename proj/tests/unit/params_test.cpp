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

#include "clusterbench/params.hpp"

#include <gtest/gtest.h>

#include "clusterbench/error.hpp"

namespace clusterbench::cluster {
namespace {

TEST(ParameterSpaceTest, Defaults) {
  const ProblemShape shape{100, 4, 3};
  ClustererConfig km(Algorithm::kmeans, 4);
  EXPECT_EQ(km.integer("iter_max", shape), 10);
  EXPECT_EQ(km.integer("nstart", shape), 1);
  EXPECT_EQ(km.choice("variant", shape), "lloyd");

  ClustererConfig cl(Algorithm::clara, 4);
  EXPECT_EQ(cl.integer("samples", shape), 5);
  EXPECT_EQ(cl.integer("sampsize", shape), 48);
  EXPECT_EQ(cl.integer("sampsize", {20, 4, 3}), 20);

  ClustererConfig hc(Algorithm::hierarchical, 4);
  EXPECT_EQ(hc.choice("method", shape), "average");
  EXPECT_EQ(hc.choice("metric", shape), "euclidean");

  ClustererConfig em(Algorithm::em, 4);
  EXPECT_EQ(em.choice("model", shape), "spherical-varying");
  EXPECT_EQ(em.choice("init", shape), "random-z");
  EXPECT_THROW(em.set("tol", 1e-3), Error);

  ClustererConfig sp(Algorithm::spectral, 4);
  EXPECT_EQ(sp.choice("kernel", shape), "rbf");
  EXPECT_EQ(sp.real("kernel_scale", shape), 1.0);
}

TEST(ParameterSpaceTest, DefaultsAreAdmissible) {
  for (Algorithm a : kAllAlgorithms)
    for (const auto& d : parameter_space(a, {100, 4, 3})) EXPECT_TRUE(d.admits(d.default_value)) << d.name;
}

TEST(ClustererConfigTest, SetAndValidate) {
  ClustererConfig c(Algorithm::kmeans, 3);
  c.set("nstart", std::int64_t{5}).set("variant", std::string("macqueen"));
  EXPECT_NO_THROW(c.validate({10, 3, 2}));
  EXPECT_EQ(c.label(), "nstart=5;variant=macqueen");
  EXPECT_THROW(c.set("bogus", 1.0), Error);

  c.set("nstart", 2.5);
  EXPECT_THROW(c.validate({10, 3, 2}), Error);
  c.set("nstart", std::int64_t{1});
  c.set("variant", std::string("hartigan"));
  EXPECT_THROW(c.validate({10, 3, 2}), Error);
}

ErrorKind kind_of(const ClustererConfig& c, const ProblemShape& s) {
  try {
    c.validate(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::io_error;
}

TEST(ClustererConfigTest, ErrorKinds) {
  EXPECT_EQ(kind_of(ClustererConfig(Algorithm::kmeans, 11), {10, 11, 2}), ErrorKind::invalid_k);
  EXPECT_EQ(kind_of(ClustererConfig(Algorithm::kmeans, 0), {10, 0, 2}), ErrorKind::invalid_k);

  ClustererConfig cl(Algorithm::clara, 5);
  cl.set("sampsize", std::int64_t{5});
  EXPECT_EQ(kind_of(cl, {50, 5, 2}), ErrorKind::invalid_sampsize);
  cl.set("sampsize", std::int64_t{51});
  EXPECT_EQ(kind_of(cl, {50, 5, 2}), ErrorKind::invalid_sampsize);
  cl.set("sampsize", std::int64_t{6});
  EXPECT_NO_THROW(cl.validate({50, 5, 2}));
}

TEST(AlgorithmNameTest, RoundTrip) {
  for (Algorithm a : kAllAlgorithms) EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_THROW(parse_algorithm("dbscan"), Error);
}

}  // namespace
}  // namespace clusterbench::cluster
