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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clusterbench/datagen.hpp"
#include "clusterbench/params.hpp"

namespace clusterbench::harness {

struct AlgorithmSelection {
  cluster::Algorithm algorithm = cluster::Algorithm::kmeans;
  std::map<std::string, cluster::ParamValue> overrides;
};

struct CorpusConfig {
  std::vector<std::size_t> classes{2, 10, 50};
  std::vector<std::size_t> features{2, 10, 50};
  std::vector<std::size_t> objects_per_class{5, 50, 100};
  std::optional<double> alpha;  // unset: tuned per (C, F, Ne) cell with a k-means probe
  std::size_t realizations = 10;
  datagen::CovarianceLaw law;
  datagen::TuneOptions tune;
};

// One-dimensional sweep target; an empty parameter list means every parameter.
struct OneDimTarget {
  cluster::Algorithm algorithm = cluster::Algorithm::kmeans;
  std::vector<std::string> parameters;
};

struct RunConfig {
  CorpusConfig corpus;
  std::vector<AlgorithmSelection> algorithms;  // empty: all algorithms with defaults
  std::vector<std::size_t> k_values;           // empty: 2..20
  std::vector<OneDimTarget> one_dim;           // empty: every parameter of every selected algorithm
  std::size_t draws = 500;
  std::string bounds = "full";  // "full" or "derived" (reads sweep1d/bounds.jsonl)

  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::filesystem::path out = "results";
  std::filesystem::path corpus_dir;  // empty: <out>/corpus
  bool force = false;

  std::vector<AlgorithmSelection> selected() const;
  std::vector<std::size_t> ks() const;
  std::filesystem::path corpus_path() const;

  // Sorted-key JSON of every field that affects results (not workers, out, corpus_dir, force).
  std::string canonical_json() const;
  // FNV-1a of canonical_json(), 16 hex digits.
  std::string config_hash() const;
};

// Strict: unknown keys, algorithms or parameter names throw config_error /
// invalid_parameter before anything runs.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

// Generates the configured corpus, tuning alpha per cell when unset. `alphas`, when
// given, receives one (corpus cell label, alpha) entry per cell.
std::vector<datagen::Dataset> build_corpus(const RunConfig& config,
                                           std::vector<std::pair<std::string, double>>* alphas = nullptr,
                                           std::ostream* log = nullptr);

// Loads every *.csv in `dir` in file name order. Throws io_error when the directory is
// missing or holds no datasets.
std::vector<datagen::Dataset> load_corpus(const std::filesystem::path& dir);

// Subcommands. Each writes under <out>/<name>/ and refuses to touch a non-empty target
// unless config.force is set.
void command_gen(const RunConfig& config, std::ostream& log);
void command_run(const RunConfig& config, std::ostream& log);
void command_vary_k(const RunConfig& config, std::ostream& log);
void command_sweep1d(const RunConfig& config, std::ostream& log);
void command_sweepnd(const RunConfig& config, std::ostream& log);
void command_report(const RunConfig& config, std::ostream& log);

// Dispatches on "gen", "run", "vary-k", "sweep1d", "sweepnd", "report".
void run_command(std::string_view name, const RunConfig& config, std::ostream& log);

}  // namespace clusterbench::harness
