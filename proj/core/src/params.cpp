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

#include <algorithm>
#include <cmath>

#include "clusterbench/dataset_io.hpp"
#include "clusterbench/error.hpp"

namespace clusterbench::cluster {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kmeans: return "kmeans";
    case Algorithm::clara: return "clara";
    case Algorithm::hierarchical: return "hierarchical";
    case Algorithm::em: return "em";
    case Algorithm::spectral: return "spectral";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (to_string(a) == name) return a;
  throw Error(ErrorKind::invalid_parameter, "unknown algorithm '" + std::string(name) + "'");
}

std::string format_value(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>)
          return x;
        else if constexpr (std::is_same_v<T, double>)
          return io::format_real(x);
        else
          return std::to_string(x);
      },
      v);
}

bool ParamDescriptor::admits(const ParamValue& v) const {
  switch (kind) {
    case ParamKind::integer_range: {
      const auto* i = std::get_if<std::int64_t>(&v);
      return i && static_cast<double>(*i) >= low && static_cast<double>(*i) <= high;
    }
    case ParamKind::real_range: {
      const auto* d = std::get_if<double>(&v);
      return d && std::isfinite(*d) && *d >= low && *d <= high;
    }
    case ParamKind::categorical: {
      const auto* s = std::get_if<std::string>(&v);
      return s && std::find(choices.begin(), choices.end(), *s) != choices.end();
    }
  }
  return false;
}

namespace {

ParamDescriptor integer_param(std::string name, std::int64_t def, double low, double high, bool log_scale) {
  return {std::move(name), ParamKind::integer_range, def, low, high, {}, log_scale};
}

ParamDescriptor real_param(std::string name, double def, double low, double high, bool log_scale) {
  return {std::move(name), ParamKind::real_range, def, low, high, {}, log_scale};
}

ParamDescriptor categorical_param(std::string name, std::vector<std::string> choices) {
  ParamDescriptor d{std::move(name), ParamKind::categorical, choices.front(), 0.0, 0.0, std::move(choices), false};
  return d;
}

}  // namespace

std::vector<ParamDescriptor> parameter_space(Algorithm a, const ProblemShape& shape) {
  switch (a) {
    case Algorithm::kmeans:
      return {integer_param("iter_max", 10, 1, 100, true), integer_param("nstart", 1, 1, 50, true),
              categorical_param("variant", {"lloyd", "macqueen"})};
    case Algorithm::clara: {
      const double n = static_cast<double>(std::max<std::size_t>(shape.n, 1));
      const double k = static_cast<double>(shape.k);
      const double low = std::min(k + 1.0, n);
      const auto def = static_cast<std::int64_t>(std::max(low, std::min(n, 40.0 + 2.0 * k)));
      return {integer_param("samples", 5, 1, 50, true), integer_param("sampsize", def, low, n, false),
              categorical_param("metric", {"euclidean", "manhattan"})};
    }
    case Algorithm::hierarchical:
      return {categorical_param("metric", {"euclidean", "manhattan"}),
              categorical_param("method", {"average", "single", "complete", "ward", "weighted"}),
              real_param("par_method", 0.0, 0.0, 1.0, false)};
    case Algorithm::em:
      return {categorical_param("model", {"spherical-varying", "spherical-shared", "diagonal-varying", "full-varying"}),
              categorical_param("init", {"random-z", "kmeans-z"})};
    case Algorithm::spectral:
      return {categorical_param("kernel", {"rbf", "laplace", "polynomial", "linear"}),
              real_param("kernel_scale", 1.0, 0.05, 20.0, true), integer_param("iter", 200, 1, 1000, true)};
  }
  return {};
}

const ParamDescriptor* find_descriptor(const std::vector<ParamDescriptor>& space, std::string_view name) {
  for (const auto& d : space)
    if (d.name == name) return &d;
  return nullptr;
}

void require_parameter(Algorithm a, std::string_view name) {
  const auto space = parameter_space(a, {1, 1, 1});
  if (!find_descriptor(space, name))
    throw Error(ErrorKind::invalid_parameter,
                "algorithm " + std::string(to_string(a)) + " has no parameter '" + std::string(name) + "'");
}

ClustererConfig& ClustererConfig::set(const std::string& name, ParamValue value) {
  require_parameter(algorithm_, name);
  assignments_[name] = std::move(value);
  return *this;
}

void ClustererConfig::validate(const ProblemShape& shape) const {
  if (k_ < 1) throw Error(ErrorKind::invalid_k, "k must be at least 1");
  if (k_ > shape.n) throw Error(ErrorKind::invalid_k, "k exceeds the number of objects");
  const auto space = parameter_space(algorithm_, shape);
  for (const auto& [name, value] : assignments_) {
    const auto* d = find_descriptor(space, name);
    if (!d) throw Error(ErrorKind::invalid_parameter, "unknown parameter '" + name + "'");
    if (!d->admits(value))
      throw Error(name == "sampsize" ? ErrorKind::invalid_sampsize : ErrorKind::invalid_parameter,
                  "value " + format_value(value) + " is not admissible for '" + name + "'");
  }
}

const ParamValue& ClustererConfig::lookup(const std::string& name, const ProblemShape& shape,
                                          ParamValue& scratch) const {
  if (auto it = assignments_.find(name); it != assignments_.end()) return it->second;
  const auto space = parameter_space(algorithm_, shape);
  const auto* d = find_descriptor(space, name);
  if (!d) throw Error(ErrorKind::invalid_parameter, "unknown parameter '" + name + "'");
  scratch = d->default_value;
  return scratch;
}

std::int64_t ClustererConfig::integer(const std::string& name, const ProblemShape& shape) const {
  ParamValue scratch;
  const auto& v = lookup(name, shape, scratch);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  throw Error(ErrorKind::invalid_parameter, "parameter '" + name + "' is not an integer");
}

double ClustererConfig::real(const std::string& name, const ProblemShape& shape) const {
  ParamValue scratch;
  const auto& v = lookup(name, shape, scratch);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  throw Error(ErrorKind::invalid_parameter, "parameter '" + name + "' is not real-valued");
}

std::string ClustererConfig::choice(const std::string& name, const ProblemShape& shape) const {
  ParamValue scratch;
  const auto& v = lookup(name, shape, scratch);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw Error(ErrorKind::invalid_parameter, "parameter '" + name + "' is not categorical");
}

std::string ClustererConfig::label() const {
  std::string out;
  for (const auto& [name, value] : assignments_) {
    if (!out.empty()) out += ';';
    out += name + '=' + format_value(value);
  }
  return out;
}

}  // namespace clusterbench::cluster
