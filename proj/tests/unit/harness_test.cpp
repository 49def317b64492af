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

#include "clusterbench/harness.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "clusterbench/error.hpp"

namespace clusterbench::harness {
namespace {

namespace fs = std::filesystem;

class HarnessTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("clusterbench_harness_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  RunConfig tiny(const std::string& extra = "") const {
    auto cfg = parse_config(R"({"seed": 12, "corpus": {"classes": [2, 3], "features": [2], "objects_per_class": [10],
                                 "alpha": 2.0, "realizations": 2},
                                "algorithms": ["kmeans", "hierarchical"], "vary_k": {"k": [2, 3, 4]},
                                "sweepnd": {"draws": 20})" + extra + "}");
    cfg.out = root_ / "out";
    return cfg;
  }

  fs::path root_;
};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::undefined_index;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ParseConfigTest, Errors) {
  EXPECT_EQ(kind_of([] { parse_config(R"({"algorithms": [{"name": "kmeans", "params": {"bogus": 1}}]})"); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { parse_config(R"({"algorithms": [{"name": "kmeans", "params": {"nstart": "x"}}]})"); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { parse_config(R"({"algorithms": ["dbscan"]})"); }), ErrorKind::config_error);
  EXPECT_EQ(kind_of([] { parse_config(R"({"sed": 3})"); }), ErrorKind::config_error);
  EXPECT_EQ(kind_of([] { parse_config(R"({"sweep1d": {"parameters": ["em.bogus"]}})"); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { parse_config("{"); }), ErrorKind::config_error);
}

TEST(ParseConfigTest, DefaultsAndHash) {
  const auto a = parse_config(R"({"seed": 4})");
  EXPECT_EQ(a.selected().size(), 5u);
  EXPECT_EQ(a.ks().front(), 2u);
  EXPECT_EQ(a.ks().back(), 20u);
  EXPECT_FALSE(a.corpus.alpha.has_value());
  EXPECT_EQ(a.config_hash().size(), 16u);
  const auto b = parse_config(R"({"seed": 4, "workers": 7, "out": "elsewhere"})");
  EXPECT_EQ(a.config_hash(), b.config_hash());
  EXPECT_NE(a.config_hash(), parse_config(R"({"seed": 5})").config_hash());
}

TEST_F(HarnessTest, GenWritesFullGrid) {
  auto cfg = parse_config(R"({"seed": 1, "corpus": {"alpha": 1.0}})");
  cfg.out = root_;
  std::ostringstream log;
  command_gen(cfg, log);
  std::size_t csv = 0;
  for (const auto& e : fs::directory_iterator(root_ / "corpus")) csv += e.path().extension() == ".csv";
  EXPECT_EQ(csv, 270u);
  EXPECT_EQ(load_corpus(root_ / "corpus").size(), 270u);
}

TEST_F(HarnessTest, RunOnEmptyCorpusFails) {
  auto cfg = tiny();
  cfg.corpus_dir = root_ / "empty";
  fs::create_directories(cfg.corpus_dir);
  std::ostringstream log;
  EXPECT_EQ(kind_of([&] { command_run(cfg, log); }), ErrorKind::io_error);
  EXPECT_FALSE(fs::exists(cfg.out / "run"));
  cfg.corpus_dir = root_ / "missing";
  EXPECT_EQ(kind_of([&] { command_run(cfg, log); }), ErrorKind::io_error);
}

TEST_F(HarnessTest, RefusesToOverwrite) {
  auto cfg = tiny();
  std::ostringstream log;
  command_gen(cfg, log);
  command_run(cfg, log);
  EXPECT_EQ(kind_of([&] { command_run(cfg, log); }), ErrorKind::io_error);
  EXPECT_EQ(kind_of([&] { command_gen(cfg, log); }), ErrorKind::io_error);
  cfg.force = true;
  EXPECT_NO_THROW(command_run(cfg, log));
}

TEST_F(HarnessTest, HistogramCountsSumToDraws) {
  auto cfg = parse_config(R"({"seed": 3, "corpus": {"classes": [2], "features": [2], "objects_per_class": [10],
                              "alpha": 2.0, "realizations": 1}, "algorithms": ["kmeans"], "sweepnd": {"draws": 500}})");
  cfg.out = root_ / "out";
  std::ostringstream log;
  command_gen(cfg, log);
  command_sweepnd(cfg, log);
  std::ifstream in(cfg.out / "sweepnd" / "histograms" / "DB2C2F_kmeans.tsv");
  ASSERT_TRUE(in);
  std::string line;
  std::size_t total = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("lower", 0) == 0) continue;
    std::istringstream cols(line);
    std::string lo, hi;
    std::size_t count = 0;
    cols >> lo >> hi >> count;
    total += count;
  }
  EXPECT_EQ(total, 500u);
}

TEST_F(HarnessTest, DerivedBoundsFallBackToFullRangeForUnsweptParameters) {
  auto cfg = tiny(R"(, "sweep1d": {"parameters": ["kmeans.nstart"]})");
  cfg.bounds = "derived";
  std::ostringstream log;
  command_gen(cfg, log);
  EXPECT_EQ(kind_of([&] { command_sweepnd(cfg, log); }), ErrorKind::io_error);
  command_sweep1d(cfg, log);
  command_sweepnd(cfg, log);
  EXPECT_NE(log.str().find("kmeans.iter_max: not swept"), std::string::npos);
  EXPECT_TRUE(fs::exists(cfg.out / "sweepnd" / "summary.tsv"));
}

TEST_F(HarnessTest, PipelineIsBitwiseReproducibleAcrossWorkers) {
  const char* commands[] = {"gen", "run", "vary-k", "sweep1d", "sweepnd", "report"};
  std::vector<fs::path> outs;
  for (std::size_t workers : {1, 3}) {
    auto cfg = tiny(R"(, "sweep1d": {"parameters": ["kmeans.nstart", "hierarchical.method"]})");
    cfg.workers = workers;
    cfg.out = root_ / ("w" + std::to_string(workers));
    std::ostringstream log;
    for (const char* c : commands) run_command(c, cfg, log);
    outs.push_back(cfg.out);
  }
  std::size_t compared = 0;
  for (const auto& e : fs::recursive_directory_iterator(outs[0])) {
    if (!e.is_regular_file() || e.path().filename() == "timings.tsv") continue;
    const auto rel = fs::relative(e.path(), outs[0]);
    EXPECT_EQ(slurp(e.path()), slurp(outs[1] / rel)) << rel;
    ++compared;
  }
  EXPECT_GT(compared, 10u);
}

TEST_F(HarnessTest, UnknownCommand) {
  std::ostringstream log;
  EXPECT_THROW(run_command("explode", tiny(), log), Error);
}

}  // namespace
}  // namespace clusterbench::harness
