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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clusterbench::cluster {

enum class Algorithm { kmeans, clara, hierarchical, em, spectral };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kmeans, Algorithm::clara, Algorithm::hierarchical,
                                               Algorithm::em, Algorithm::spectral};

std::string_view to_string(Algorithm a) noexcept;
// Throws invalid_parameter for an unknown name.
Algorithm parse_algorithm(std::string_view name);

enum class ParamKind { integer_range, real_range, categorical };

using ParamValue = std::variant<std::int64_t, double, std::string>;

std::string format_value(const ParamValue& v);

struct ParamDescriptor {
  std::string name;
  ParamKind kind = ParamKind::real_range;
  ParamValue default_value;
  double low = 0.0;  // integer and real ranges, inclusive
  double high = 0.0;
  std::vector<std::string> choices;  // categorical
  bool log_scale = false;            // sweep grids are spaced geometrically

  bool admits(const ParamValue& v) const;
};

// Data-dependent inputs to a parameter space (sampsize bounds depend on N and k).
struct ProblemShape {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t features = 0;
};

// Published parameter space of an algorithm. Every default lies inside its bounds.
std::vector<ParamDescriptor> parameter_space(Algorithm a, const ProblemShape& shape);
const ParamDescriptor* find_descriptor(const std::vector<ParamDescriptor>& space, std::string_view name);

// A concrete parameter assignment. Unassigned parameters take their defaults.
class ClustererConfig {
 public:
  ClustererConfig(Algorithm algorithm, std::size_t k) : algorithm_(algorithm), k_(k) {}

  Algorithm algorithm() const noexcept { return algorithm_; }
  std::size_t k() const noexcept { return k_; }
  void set_k(std::size_t k) noexcept { k_ = k; }

  // Name is checked eagerly against the algorithm's descriptors; bounds are checked
  // by validate() once the data shape is known.
  ClustererConfig& set(const std::string& name, ParamValue value);
  const std::map<std::string, ParamValue>& assignments() const noexcept { return assignments_; }

  // Throws invalid_k / invalid_parameter when an assignment does not fit `shape`.
  void validate(const ProblemShape& shape) const;

  std::int64_t integer(const std::string& name, const ProblemShape& shape) const;
  double real(const std::string& name, const ProblemShape& shape) const;
  std::string choice(const std::string& name, const ProblemShape& shape) const;

  // "name=value;..." over assignments in name order; empty when everything is default.
  std::string label() const;

 private:
  const ParamValue& lookup(const std::string& name, const ProblemShape& shape, ParamValue& scratch) const;

  Algorithm algorithm_;
  std::size_t k_;
  std::map<std::string, ParamValue> assignments_;
};

// Throws invalid_parameter when `name` is not a parameter of `a`.
void require_parameter(Algorithm a, std::string_view name);

}  // namespace clusterbench::cluster
