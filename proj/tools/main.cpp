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

// clusterbench: generate corpora, run the default / vary-k / sweep evaluations and
// merge their summaries.
//
//   clusterbench gen     --config cfg.json --out results
//   clusterbench run     --config cfg.json --out results --workers 4
//   clusterbench report  --out results

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "clusterbench/error.hpp"
#include "clusterbench/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Clustering benchmark on synthetic Gaussian corpora"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string out;
  std::string corpus;
  bool force = false;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Master seed (overrides the config)");
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "Output directory (default: results)");
  app.add_option("--corpus", corpus, "Corpus directory (default: <out>/corpus)");
  app.add_flag("--force", force, "Overwrite existing results");

  const std::pair<const char*, const char*> commands[] = {
      {"gen", "Write the synthetic corpus"},
      {"run", "Default-parameter evaluation"},
      {"vary-k", "Accuracy versus expected cluster count"},
      {"sweep1d", "One-parameter sensitivity sweeps"},
      {"sweepnd", "Random multi-parameter sweeps"},
      {"report", "Merge summaries and run Kruskal-Wallis tests"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    auto cfg = config_path.empty() ? clusterbench::harness::RunConfig{}
                                   : clusterbench::harness::load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (workers) cfg.workers = *workers;
    if (!out.empty()) cfg.out = out;
    if (!corpus.empty()) cfg.corpus_dir = corpus;
    cfg.force = force;
    const auto* sub = app.get_subcommands().front();
    clusterbench::harness::run_command(sub->get_name(), cfg, std::cerr);
  } catch (const clusterbench::Error& e) {
    std::cerr << "clusterbench: " << clusterbench::to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "clusterbench: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
