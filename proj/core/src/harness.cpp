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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "clusterbench/clusterer.hpp"
#include "clusterbench/dataset_io.hpp"
#include "clusterbench/error.hpp"
#include "clusterbench/random.hpp"
#include "clusterbench/stats.hpp"
#include "clusterbench/sweep.hpp"

namespace clusterbench::harness {

namespace fs = std::filesystem;
using json = nlohmann::json;
using cluster::Algorithm;
using cluster::ParamValue;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::config_error, msg); }

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json value_json(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

json real_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Any shape works here: only names and kinds are looked up.
const cluster::ParamDescriptor& descriptor_for(Algorithm a, const std::string& name) {
  static const cluster::ProblemShape kShape{100, 2, 2};
  thread_local std::vector<cluster::ParamDescriptor> space;
  space = cluster::parameter_space(a, kShape);
  const auto* d = cluster::find_descriptor(space, name);
  if (!d)
    throw Error(ErrorKind::invalid_parameter,
                "unknown parameter '" + name + "' for algorithm " + std::string(cluster::to_string(a)));
  static thread_local cluster::ParamDescriptor copy;
  copy = *d;
  return copy;
}

ParamValue parse_value(Algorithm a, const std::string& name, const json& j) {
  const auto& d = descriptor_for(a, name);
  switch (d.kind) {
    case cluster::ParamKind::integer_range:
      if (j.is_number_integer()) return j.get<std::int64_t>();
      if (j.is_number_float() && std::floor(j.get<double>()) == j.get<double>())
        return static_cast<std::int64_t>(j.get<double>());
      break;
    case cluster::ParamKind::real_range:
      if (j.is_number()) return j.get<double>();
      break;
    case cluster::ParamKind::categorical:
      if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (std::find(d.choices.begin(), d.choices.end(), s) == d.choices.end())
          throw Error(ErrorKind::invalid_parameter, "'" + s + "' is not a choice of " + name);
        return s;
      }
      break;
  }
  throw Error(ErrorKind::invalid_parameter, "wrong value type for parameter " + name + ": " + j.dump());
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) config_error(where + " must be an object");
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      config_error("unknown key '" + key + "' in " + where);
}

template <typename T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    config_error("bad value for " + what + ": " + j.dump());
  }
}

std::vector<std::size_t> size_list(const json& j, const std::string& what) {
  auto v = get_as<std::vector<std::size_t>>(j, what);
  if (v.empty()) config_error(what + " must not be empty");
  return v;
}

Algorithm algorithm_named(const std::string& s) {
  try {
    return cluster::parse_algorithm(s);
  } catch (const Error&) {
    config_error("unknown algorithm '" + s + "'");
  }
}

// ---- output helpers ----

fs::path prepare_output(const RunConfig& cfg, const std::string& name) {
  const fs::path dir = cfg.out / name;
  if (fs::exists(dir) && !fs::is_empty(dir)) {
    if (!cfg.force)
      throw Error(ErrorKind::io_error, dir.string() + " already holds results; pass --force to overwrite");
    fs::remove_all(dir);
  }
  fs::create_directories(dir);
  return dir;
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + p.string());
  return out;
}

std::string tsv_header(const RunConfig& cfg, std::string_view command) {
  return "# clusterbench " + std::string(command) + "; seed=" + std::to_string(cfg.seed) +
         "; config_hash=" + cfg.config_hash() + "\n";
}

json jsonl_header(const RunConfig& cfg, std::string_view command) {
  return {{"type", "header"}, {"command", command}, {"seed", cfg.seed}, {"config_hash", cfg.config_hash()}};
}

json record_json(const sweep::RunRecord& r) {
  json j{{"type", "record"},
         {"dataset", r.dataset_id},
         {"C", r.num_classes},
         {"F", r.num_features},
         {"Ne", r.objects_per_class},
         {"algorithm", cluster::to_string(r.algorithm)},
         {"k", r.k},
         {"config", r.config},
         {"index", r.index},
         {"failed", r.failed}};
  if (r.failed) {
    j["error"] = r.error;
  } else {
    j["jaccard"] = r.scores.jaccard;
    j["ari"] = r.scores.ari;
    j["fm"] = r.scores.fowlkes_mallows;
    j["nmi"] = r.scores.nmi;
  }
  return j;
}

class RecordSink {
 public:
  RecordSink(const fs::path& dir, const RunConfig& cfg, std::string_view command)
      : records_(open_out(dir / "records.jsonl")), timings_(open_out(dir / "timings.tsv")) {
    records_ << jsonl_header(cfg, command).dump() << '\n';
    timings_ << tsv_header(cfg, command) << "dataset\talgorithm\tk\tindex\tcontext\twall_seconds\n";
  }

  void write(const std::vector<sweep::RunRecord>& recs, const json& context = json::object()) {
    std::string ctx;
    for (const auto& [k, v] : context.items()) ctx += (ctx.empty() ? "" : ";") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& r : recs) {
      auto j = record_json(r);
      for (const auto& [k, v] : context.items()) j[k] = v;
      records_ << j.dump() << '\n';
      timings_ << r.dataset_id << '\t' << cluster::to_string(r.algorithm) << '\t' << r.k << '\t' << r.index << '\t'
               << (ctx.empty() ? "-" : ctx) << '\t' << fmt(r.wall_seconds) << '\n';
    }
  }

 private:
  std::ofstream records_;
  std::ofstream timings_;
};

std::vector<cluster::ClustererConfig> configs_of(const RunConfig& cfg) {
  std::vector<cluster::ClustererConfig> out;
  for (const auto& sel : cfg.selected()) {
    cluster::ClustererConfig c(sel.algorithm, 0);
    for (const auto& [name, value] : sel.overrides) c.set(name, value);
    out.push_back(std::move(c));
  }
  return out;
}

// Datasets grouped by corpus name (DB<C>C<F>F), in name order.
std::map<std::string, std::vector<datagen::Dataset>> families(std::vector<datagen::Dataset> corpus) {
  std::map<std::string, std::vector<datagen::Dataset>> out;
  for (auto& ds : corpus) {
    const auto name = datagen::corpus_name(ds.spec.num_classes, ds.num_features());
    out[name].push_back(std::move(ds));
  }
  return out;
}

cluster::ProblemShape family_shape(const std::vector<datagen::Dataset>& fam) {
  return {fam.front().size(), fam.front().spec.num_classes, fam.front().num_features()};
}

std::string kind_name(cluster::ParamKind k) {
  switch (k) {
    case cluster::ParamKind::integer_range: return "integer";
    case cluster::ParamKind::real_range: return "real";
    case cluster::ParamKind::categorical: return "categorical";
  }
  return "?";
}

cluster::ParamKind parse_kind(const std::string& s) {
  if (s == "integer") return cluster::ParamKind::integer_range;
  if (s == "real") return cluster::ParamKind::real_range;
  if (s == "categorical") return cluster::ParamKind::categorical;
  throw Error(ErrorKind::parse_error, "unknown parameter kind '" + s + "'");
}

std::vector<json> read_jsonl(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + p.string());
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(p.string() + ": " + e.what(), lineno, 1);
    }
  }
  return out;
}

}  // namespace

// ---- RunConfig ----

std::vector<AlgorithmSelection> RunConfig::selected() const {
  if (!algorithms.empty()) return algorithms;
  std::vector<AlgorithmSelection> all;
  for (Algorithm a : cluster::kAllAlgorithms) all.push_back({a, {}});
  return all;
}

std::vector<std::size_t> RunConfig::ks() const {
  if (!k_values.empty()) return k_values;
  std::vector<std::size_t> out;
  for (std::size_t k = 2; k <= 20; ++k) out.push_back(k);
  return out;
}

fs::path RunConfig::corpus_path() const { return corpus_dir.empty() ? out / "corpus" : corpus_dir; }

std::string RunConfig::canonical_json() const {
  json algs = json::array();
  for (const auto& sel : selected()) {
    json params = json::object();
    for (const auto& [name, value] : sel.overrides) params[name] = value_json(value);
    algs.push_back({{"name", cluster::to_string(sel.algorithm)}, {"params", params}});
  }
  json targets = json::array();
  for (const auto& t : one_dim) targets.push_back({{"algorithm", cluster::to_string(t.algorithm)}, {"parameters", t.parameters}});
  json j{
      {"seed", seed},
      {"corpus",
       {{"classes", corpus.classes},
        {"features", corpus.features},
        {"objects_per_class", corpus.objects_per_class},
        {"alpha", corpus.alpha ? json(*corpus.alpha) : json("auto")},
        {"realizations", corpus.realizations},
        {"covariance",
         {{"moment_mean", corpus.law.moment_mean},
          {"moment_sd", corpus.law.moment_sd},
          {"inner_dim", corpus.law.inner_dim}}},
        {"tune",
         {{"low", corpus.tune.low},
          {"high", corpus.tune.high},
          {"max_iter", corpus.tune.max_iter},
          {"initial_alpha", corpus.tune.initial_alpha},
          {"pilot", corpus.tune.pilot_realizations}}}}},
      {"algorithms", algs},
      {"vary_k", {{"k", ks()}}},
      {"sweep1d", {{"targets", targets}}},
      {"sweepnd", {{"draws", draws}, {"bounds", bounds}}},
  };
  return j.dump();
}

std::string RunConfig::config_hash() const {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << hash_bytes(canonical_json());
  return s.str();
}

RunConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
  check_keys(j, {"seed", "workers", "out", "corpus_dir", "corpus", "algorithms", "vary_k", "sweep1d", "sweepnd"},
             "config");
  RunConfig cfg;
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j["seed"], "seed");
  if (j.contains("workers")) cfg.workers = std::max<std::size_t>(1, get_as<std::size_t>(j["workers"], "workers"));
  if (j.contains("out")) cfg.out = get_as<std::string>(j["out"], "out");
  if (j.contains("corpus_dir")) cfg.corpus_dir = get_as<std::string>(j["corpus_dir"], "corpus_dir");

  if (j.contains("corpus")) {
    const auto& c = j["corpus"];
    check_keys(c, {"classes", "features", "objects_per_class", "alpha", "realizations", "covariance", "tune"}, "corpus");
    auto& cc = cfg.corpus;
    if (c.contains("classes")) cc.classes = size_list(c["classes"], "corpus.classes");
    if (c.contains("features")) cc.features = size_list(c["features"], "corpus.features");
    if (c.contains("objects_per_class")) cc.objects_per_class = size_list(c["objects_per_class"], "corpus.objects_per_class");
    if (c.contains("alpha")) {
      const auto& a = c["alpha"];
      if (a.is_string() && a.get<std::string>() == "auto") {
        cc.alpha.reset();
      } else if (a.is_number() && a.get<double>() > 0.0) {
        cc.alpha = a.get<double>();
      } else {
        config_error("corpus.alpha must be a positive number or \"auto\"");
      }
    }
    if (c.contains("realizations")) {
      cc.realizations = get_as<std::size_t>(c["realizations"], "corpus.realizations");
      if (cc.realizations < 1) config_error("corpus.realizations must be at least 1");
    }
    if (c.contains("covariance")) {
      const auto& v = c["covariance"];
      check_keys(v, {"moment_mean", "moment_sd", "inner_dim"}, "corpus.covariance");
      if (v.contains("moment_mean")) cc.law.moment_mean = get_as<double>(v["moment_mean"], "moment_mean");
      if (v.contains("moment_sd")) cc.law.moment_sd = get_as<double>(v["moment_sd"], "moment_sd");
      if (v.contains("inner_dim")) cc.law.inner_dim = get_as<std::size_t>(v["inner_dim"], "inner_dim");
    }
    if (c.contains("tune")) {
      const auto& t = c["tune"];
      check_keys(t, {"low", "high", "max_iter", "initial_alpha", "pilot"}, "corpus.tune");
      if (t.contains("low")) cc.tune.low = get_as<double>(t["low"], "tune.low");
      if (t.contains("high")) cc.tune.high = get_as<double>(t["high"], "tune.high");
      if (t.contains("max_iter")) cc.tune.max_iter = get_as<int>(t["max_iter"], "tune.max_iter");
      if (t.contains("initial_alpha")) cc.tune.initial_alpha = get_as<double>(t["initial_alpha"], "tune.initial_alpha");
      if (t.contains("pilot")) cc.tune.pilot_realizations = get_as<std::size_t>(t["pilot"], "tune.pilot");
    }
  }

  if (j.contains("algorithms")) {
    const auto& list = j["algorithms"];
    if (!list.is_array() || list.empty()) config_error("algorithms must be a non-empty array");
    for (const auto& item : list) {
      AlgorithmSelection sel;
      if (item.is_string()) {
        sel.algorithm = algorithm_named(item.get<std::string>());
      } else {
        check_keys(item, {"name", "params"}, "algorithm entry");
        if (!item.contains("name")) config_error("algorithm entry without a name");
        sel.algorithm = algorithm_named(get_as<std::string>(item["name"], "algorithm name"));
        if (item.contains("params")) {
          if (!item["params"].is_object()) config_error("params must be an object");
          for (const auto& [name, value] : item["params"].items())
            sel.overrides[name] = parse_value(sel.algorithm, name, value);
        }
      }
      cfg.algorithms.push_back(std::move(sel));
    }
  }

  if (j.contains("vary_k")) {
    check_keys(j["vary_k"], {"k"}, "vary_k");
    if (j["vary_k"].contains("k")) cfg.k_values = size_list(j["vary_k"]["k"], "vary_k.k");
  }

  if (j.contains("sweep1d")) {
    check_keys(j["sweep1d"], {"parameters"}, "sweep1d");
    if (j["sweep1d"].contains("parameters")) {
      // "algorithm" or "algorithm.parameter"
      std::map<Algorithm, std::vector<std::string>> picked;
      std::vector<Algorithm> order;
      for (const auto& s : get_as<std::vector<std::string>>(j["sweep1d"]["parameters"], "sweep1d.parameters")) {
        const auto dot = s.find('.');
        const Algorithm a = algorithm_named(s.substr(0, dot));
        if (!picked.count(a)) order.push_back(a);
        auto& params = picked[a];
        if (dot != std::string::npos) {
          const auto name = s.substr(dot + 1);
          descriptor_for(a, name);
          params.push_back(name);
        }
      }
      for (Algorithm a : order) cfg.one_dim.push_back({a, picked[a]});
    }
  }

  if (j.contains("sweepnd")) {
    check_keys(j["sweepnd"], {"draws", "bounds"}, "sweepnd");
    if (j["sweepnd"].contains("draws")) cfg.draws = get_as<std::size_t>(j["sweepnd"]["draws"], "sweepnd.draws");
    if (j["sweepnd"].contains("bounds")) {
      cfg.bounds = get_as<std::string>(j["sweepnd"]["bounds"], "sweepnd.bounds");
      if (cfg.bounds != "full" && cfg.bounds != "derived") config_error("sweepnd.bounds must be \"full\" or \"derived\"");
    }
  }
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---- corpus ----

std::vector<datagen::Dataset> build_corpus(const RunConfig& cfg, std::vector<std::pair<std::string, double>>* alphas,
                                           std::ostream* log) {
  std::vector<datagen::GridCell> grid;
  for (std::size_t c : cfg.corpus.classes)
    for (std::size_t f : cfg.corpus.features)
      for (std::size_t ne : cfg.corpus.objects_per_class) {
        double alpha = cfg.corpus.alpha.value_or(0.0);
        if (!cfg.corpus.alpha) {
          datagen::DatasetSpec spec{c, f, ne, 1.0, derive_seed(cfg.seed, {c, f, ne}), 0};
          const auto probe = cluster::make_probe(cluster::ClustererConfig(Algorithm::kmeans, c), cfg.seed);
          try {
            alpha = datagen::tune_alpha(spec, probe, cfg.corpus.tune, cfg.corpus.law).alpha;
          } catch (const TuningFailed& e) {
            alpha = e.best_alpha();
            if (log) *log << "warning: " << e.what() << "; using alpha=" << fmt(alpha) << "\n";
          }
        }
        if (alphas) alphas->emplace_back(datagen::corpus_name(c, f) + "-Ne" + std::to_string(ne), alpha);
        grid.push_back({c, f, ne, alpha});
      }
  return datagen::generate_corpus(grid, cfg.corpus.realizations, cfg.seed, cfg.corpus.law);
}

std::vector<datagen::Dataset> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::io_error, "corpus directory " + dir.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  if (files.empty()) throw Error(ErrorKind::io_error, "corpus directory " + dir.string() + " holds no datasets");
  std::sort(files.begin(), files.end());
  std::vector<datagen::Dataset> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(io::load_dataset(f));
  return out;
}

// ---- commands ----

void command_gen(const RunConfig& cfg, std::ostream& log) {
  const fs::path dir = cfg.corpus_path();
  if (fs::exists(dir) && !fs::is_empty(dir)) {
    if (!cfg.force) throw Error(ErrorKind::io_error, dir.string() + " already holds datasets; pass --force to overwrite");
    fs::remove_all(dir);
  }
  std::vector<std::pair<std::string, double>> alphas;
  const auto corpus = build_corpus(cfg, &alphas, &log);
  fs::create_directories(dir);
  for (const auto& ds : corpus) io::write_dataset(dir / (ds.id() + ".csv"), ds);
  auto out = open_out(dir / "alpha.tsv");
  out << tsv_header(cfg, "gen") << "cell\talpha\n";
  for (const auto& [cell, alpha] : alphas) out << cell << '\t' << fmt(alpha) << '\n';
  log << "wrote " << corpus.size() << " datasets to " << dir.string() << "\n";
}

void command_run(const RunConfig& cfg, std::ostream& log) {
  const auto corpus = load_corpus(cfg.corpus_path());
  const auto configs = configs_of(cfg);
  const auto dir = prepare_output(cfg, "run");
  const auto rep = sweep::run_default(corpus, configs, {cfg.seed, cfg.workers});

  RecordSink sink(dir, cfg, "run");
  sink.write(rep.records);

  const auto header = tsv_header(cfg, "run");
  auto table = open_out(dir / "default_scores.tsv");
  table << header << "index\talgorithm";
  for (Algorithm a : rep.algorithms) table << '\t' << cluster::to_string(a);
  table << "\tMAcc\n";
  auto summary = open_out(dir / "summary.jsonl");
  summary << jsonl_header(cfg, "run").dump() << '\n';
  for (const auto& t : rep.tables) {
    for (std::size_t i = 0; i < rep.algorithms.size(); ++i) {
      table << sweep::to_string(t.index) << '\t' << cluster::to_string(rep.algorithms[i]);
      for (std::size_t j = 0; j < rep.algorithms.size(); ++j) table << '\t' << (i == j ? "-" : fmt(t.difference(i, j)));
      table << '\t' << fmt(t.macc[i]) << '\n';
      summary << json{{"type", "macc"},
                      {"index", sweep::to_string(t.index)},
                      {"algorithm", cluster::to_string(rep.algorithms[i])},
                      {"value", real_json(t.macc[i])}}
                     .dump()
              << '\n';
    }
  }
  for (const std::string factor : {"F", "Ne"}) {
    auto g = open_out(dir / ("groups_" + factor + ".tsv"));
    g << header << factor << "\talgorithm\tjaccard\tari\tfm\tnmi\truns\tmissing\n";
    for (const auto& m : rep.groups) {
      if (m.factor != factor) continue;
      g << m.level << '\t' << cluster::to_string(m.algorithm) << '\t' << fmt(m.mean.jaccard) << '\t' << fmt(m.mean.ari)
        << '\t' << fmt(m.mean.fowlkes_mallows) << '\t' << fmt(m.mean.nmi) << '\t' << m.runs << '\t' << m.missing << '\n';
      summary << json{{"type", "group"},
                      {"factor", factor},
                      {"level", m.level},
                      {"algorithm", cluster::to_string(m.algorithm)},
                      {"jaccard", real_json(m.mean.jaccard)},
                      {"ari", real_json(m.mean.ari)},
                      {"fm", real_json(m.mean.fowlkes_mallows)},
                      {"nmi", real_json(m.mean.nmi)},
                      {"runs", m.runs},
                      {"missing", m.missing}}
                     .dump()
              << '\n';
    }
  }
  for (const auto& m : rep.missing) summary << json{{"type", "missing"}, {"detail", m}}.dump() << '\n';
  log << "run: " << rep.records.size() << " records, " << rep.missing.size() << " missing\n";
}

void command_vary_k(const RunConfig& cfg, std::ostream& log) {
  auto fams = families(load_corpus(cfg.corpus_path()));
  const auto configs = configs_of(cfg);
  const auto ks = cfg.ks();
  const auto dir = prepare_output(cfg, "vary-k");
  RecordSink sink(dir, cfg, "vary-k");
  auto curves = open_out(dir / "curves.tsv");
  curves << tsv_header(cfg, "vary-k") << "family\talgorithm\tk\ttrue_k\tari\tjaccard\truns\n";
  auto summary = open_out(dir / "summary.jsonl");
  summary << jsonl_header(cfg, "vary-k").dump() << '\n';
  for (const auto& [name, fam] : fams) {
    const auto rep = sweep::vary_k(fam, configs, ks, {cfg.seed, cfg.workers});
    sink.write(rep.records, {{"family", name}});
    for (const auto& p : rep.curve) {
      const bool truth = std::find(rep.true_classes.begin(), rep.true_classes.end(), p.k) != rep.true_classes.end();
      curves << name << '\t' << cluster::to_string(p.algorithm) << '\t' << p.k << '\t' << (truth ? 1 : 0) << '\t'
             << fmt(p.mean_ari) << '\t' << fmt(p.mean_jaccard) << '\t' << p.runs << '\n';
      summary << json{{"type", "curve"},   {"family", name},
                      {"algorithm", cluster::to_string(p.algorithm)},
                      {"k", p.k},          {"true_k", truth},
                      {"ari", real_json(p.mean_ari)},
                      {"jaccard", real_json(p.mean_jaccard)},
                      {"runs", p.runs}}
                     .dump()
              << '\n';
    }
    for (const auto& s : rep.skipped) summary << json{{"type", "skipped"}, {"family", name}, {"detail", s}}.dump() << '\n';
    log << "vary-k " << name << ": " << rep.records.size() << " records\n";
  }
}

void command_sweep1d(const RunConfig& cfg, std::ostream& log) {
  auto fams = families(load_corpus(cfg.corpus_path()));
  std::vector<OneDimTarget> targets = cfg.one_dim;
  if (targets.empty())
    for (const auto& sel : cfg.selected()) targets.push_back({sel.algorithm, {}});
  const auto dir = prepare_output(cfg, "sweep1d");
  const auto header = tsv_header(cfg, "sweep1d");
  RecordSink sink(dir, cfg, "sweep1d");
  auto table = open_out(dir / "summary.tsv");
  table << header << "family\talgorithm\tparameter\tmean_S\tsd_S\tmax_S\tmean_max_acc\tgrid_size\n";
  auto traces = open_out(dir / "traces.tsv");
  traces << header << "family\talgorithm\tparameter\tvalue\tis_default\tgamma\tgamma_default\n";
  auto bounds = open_out(dir / "bounds.jsonl");
  bounds << jsonl_header(cfg, "sweep1d").dump() << '\n';
  auto summary = open_out(dir / "summary.jsonl");
  summary << jsonl_header(cfg, "sweep1d").dump() << '\n';

  for (const auto& [name, fam] : fams) {
    const auto shape = family_shape(fam);
    for (const auto& target : targets) {
      const auto space = cluster::parameter_space(target.algorithm, shape);
      std::vector<std::string> params = target.parameters;
      if (params.empty())
        for (const auto& d : space) params.push_back(d.name);
      for (const auto& p : params) {
        const auto grid = sweep::default_grid(*cluster::find_descriptor(space, p));
        const auto res = sweep::one_dim_sweep(fam, target.algorithm, p, grid, {cfg.seed, cfg.workers});
        const std::string alg(cluster::to_string(target.algorithm));
        sink.write(res.records, {{"family", name}, {"parameter", p}});
        const auto& s = res.summary;
        table << name << '\t' << alg << '\t' << p << '\t' << fmt(s.mean_gain) << '\t' << fmt(s.sd_gain) << '\t'
              << fmt(s.max_gain) << '\t' << fmt(s.mean_best) << '\t' << s.grid_size << '\n';
        summary << json{{"type", "one_dim"},         {"family", name},
                        {"algorithm", alg},          {"parameter", p},
                        {"mean_S", s.mean_gain},     {"sd_S", s.sd_gain},
                        {"max_S", s.max_gain},       {"mean_max_acc", s.mean_best},
                        {"grid_size", s.grid_size},  {"gamma_default", res.trace.gamma_default}}
                       .dump()
                << '\n';
        for (std::size_t g = 0; g < res.trace.grid.size(); ++g)
          traces << name << '\t' << alg << '\t' << p << '\t' << cluster::format_value(res.trace.grid[g]) << '\t'
                 << (res.trace.grid[g] == res.trace.default_value ? 1 : 0) << '\t' << fmt(res.trace.gamma[g]) << '\t'
                 << fmt(res.trace.gamma_default) << '\n';
        const auto b = sweep::derive_bounds(res.trace);
        bounds << json{{"type", "bounds"}, {"family", name},   {"algorithm", alg},     {"parameter", p},
                       {"kind", kind_name(b.kind)}, {"low", b.low}, {"high", b.high}, {"choices", b.choices}}
                      .dump()
               << '\n';
        log << "sweep1d " << name << " " << alg << "." << p << ": <S>=" << fmt(s.mean_gain) << "\n";
      }
    }
  }
}

void command_sweepnd(const RunConfig& cfg, std::ostream& log) {
  auto fams = families(load_corpus(cfg.corpus_path()));
  std::vector<json> derived;
  if (cfg.bounds == "derived") {
    const auto path = cfg.out / "sweep1d" / "bounds.jsonl";
    if (!fs::exists(path)) throw Error(ErrorKind::io_error, "derived bounds need " + path.string() + "; run sweep1d first");
    derived = read_jsonl(path);
  }
  // Resolve bounds for every family before computing anything.
  std::map<std::pair<std::string, Algorithm>, std::vector<sweep::ParamBounds>> plan;
  for (const auto& [name, fam] : fams)
    for (const auto& sel : cfg.selected()) {
      auto b = sweep::full_bounds(sel.algorithm, family_shape(fam));
      if (cfg.bounds == "derived") {
        for (auto& pb : b) {
          const auto it = std::find_if(derived.begin(), derived.end(), [&](const json& j) {
            return j.value("type", "") == "bounds" && j.value("family", "") == name &&
                   j.value("algorithm", "") == cluster::to_string(sel.algorithm) && j.value("parameter", "") == pb.parameter;
          });
          if (it == derived.end()) {
            log << "sweepnd " << name << " " << cluster::to_string(sel.algorithm) << "." << pb.parameter
                << ": not swept, using the full range\n";
            continue;
          }
          pb.kind = parse_kind((*it)["kind"].get<std::string>());
          pb.low = (*it)["low"].get<double>();
          pb.high = (*it)["high"].get<double>();
          pb.choices = (*it)["choices"].get<std::vector<std::string>>();
        }
      }
      plan[{name, sel.algorithm}] = std::move(b);
    }

  const auto dir = prepare_output(cfg, "sweepnd");
  const auto header = tsv_header(cfg, "sweepnd");
  RecordSink sink(dir, cfg, "sweepnd");
  auto table = open_out(dir / "summary.tsv");
  table << header << "family\talgorithm\tdraws\tfailed_draws\tgamma_default\tp_value\tmean_R\tsd_R\tmax_R\tmean_max_ari\n";
  auto summary = open_out(dir / "summary.jsonl");
  summary << jsonl_header(cfg, "sweepnd").dump() << '\n';
  for (const auto& [name, fam] : fams)
    for (const auto& sel : cfg.selected()) {
      const auto& b = plan.at({name, sel.algorithm});
      const auto res = sweep::random_sweep(fam, sel.algorithm, b, cfg.draws, {cfg.seed, cfg.workers});
      const std::string alg(cluster::to_string(sel.algorithm));
      sink.write(res.records, {{"family", name}});
      const auto& s = res.summary;
      table << name << '\t' << alg << '\t' << s.draws << '\t' << s.failed_draws << '\t' << fmt(s.gamma_default) << '\t'
            << fmt(s.p_value) << '\t' << fmt(s.mean_improvement) << '\t' << fmt(s.sd_improvement) << '\t'
            << fmt(s.max_improvement) << '\t' << fmt(s.mean_best) << '\n';
      summary << json{{"type", "random"},
                      {"family", name},
                      {"algorithm", alg},
                      {"draws", s.draws},
                      {"failed_draws", s.failed_draws},
                      {"gamma_default", s.gamma_default},
                      {"p_value", s.p_value},
                      {"mean_R", s.mean_improvement},
                      {"sd_R", s.sd_improvement},
                      {"max_R", s.max_improvement},
                      {"mean_max_ari", real_json(s.mean_best)}}
                     .dump()
              << '\n';
      for (std::size_t i = 0; i < res.draws.size(); ++i)
        summary << json{{"type", "draw"}, {"family", name}, {"algorithm", alg}, {"draw", i},
                        {"config", res.draws[i].label()}, {"ari", res.draw_ari[i]}}
                       .dump()
                << '\n';
      auto hist = open_out(dir / "histograms" / (name + "_" + alg + ".tsv"));
      hist << header << "# default_ari=" << fmt(s.gamma_default) << "; draws=" << s.draws << "\n"
           << "lower\tupper\tcount\timproving\n";
      for (std::size_t slot = 0; slot < s.histogram.counts.size(); ++slot)
        hist << fmt(s.histogram.lower_edge(slot)) << '\t' << fmt(s.histogram.upper_edge(slot)) << '\t'
             << s.histogram.counts[slot] << '\t' << (s.histogram.first_bin + static_cast<int>(slot) >= 1 ? 1 : 0) << '\n';
      log << "sweepnd " << name << " " << alg << ": p=" << fmt(s.p_value) << "\n";
    }
}

void command_report(const RunConfig& cfg, std::ostream& log) {
  const auto run_records = cfg.out / "run" / "records.jsonl";
  if (!fs::exists(run_records)) throw Error(ErrorKind::io_error, "report needs " + run_records.string() + "; run `run` first");
  const auto lines = read_jsonl(run_records);

  // (F) -> algorithm -> (C, Ne) -> (sum, count)
  std::map<std::size_t, std::map<std::string, std::map<std::pair<std::size_t, std::size_t>, std::pair<double, std::size_t>>>> cells;
  std::vector<std::string> alg_order;
  for (const auto& j : lines) {
    if (j.value("type", "") != "record") continue;
    const auto alg = j["algorithm"].get<std::string>();
    if (std::find(alg_order.begin(), alg_order.end(), alg) == alg_order.end()) alg_order.push_back(alg);
    auto& cell = cells[j["F"].get<std::size_t>()][alg][{j["C"].get<std::size_t>(), j["Ne"].get<std::size_t>()}];
    if (j["failed"].get<bool>()) continue;
    cell.first += j["ari"].get<double>();
    ++cell.second;
  }

  const auto dir = prepare_output(cfg, "report");
  auto kw = open_out(dir / "kruskal.tsv");
  kw << tsv_header(cfg, "report") << "F\tgroups\tcells\tH\tdf\tp_value\tnote\n";
  auto summary = open_out(dir / "summary.jsonl");
  summary << jsonl_header(cfg, "report").dump() << '\n';
  for (const std::string src : {"run", "vary-k", "sweep1d", "sweepnd"}) {
    const auto p = cfg.out / src / "summary.jsonl";
    if (!fs::exists(p)) continue;
    for (auto j : read_jsonl(p)) {
      if (j.value("type", "") == "header") continue;
      j["source"] = src;
      summary << j.dump() << '\n';
    }
  }
  for (const auto& [f, algs] : cells) {
    std::vector<std::vector<double>> groups;
    std::size_t ncells = 0;
    for (const auto& alg : alg_order) {
      const auto it = algs.find(alg);
      if (it == algs.end()) continue;
      std::vector<double> g;
      for (const auto& [key, acc] : it->second)
        if (acc.second) g.push_back(acc.first / static_cast<double>(acc.second));
      ncells = std::max(ncells, g.size());
      if (!g.empty()) groups.push_back(std::move(g));
    }
    json row{{"type", "kruskal"}, {"F", f}, {"groups", groups.size()}, {"cells", ncells}};
    try {
      const auto r = stats::kruskal_wallis(groups);
      kw << f << '\t' << groups.size() << '\t' << ncells << '\t' << fmt(r.h_statistic) << '\t' << r.degrees_of_freedom
         << '\t' << fmt(r.p_value) << "\t-\n";
      row["H"] = r.h_statistic;
      row["df"] = r.degrees_of_freedom;
      row["p_value"] = r.p_value;
    } catch (const Error& e) {
      kw << f << '\t' << groups.size() << '\t' << ncells << "\tnan\tnan\tnan\t" << to_string(e.kind()) << '\n';
      row["note"] = to_string(e.kind());
    }
    summary << row.dump() << '\n';
  }
  log << "report written to " << dir.string() << "\n";
}

void run_command(std::string_view name, const RunConfig& cfg, std::ostream& log) {
  if (name == "gen") return command_gen(cfg, log);
  if (name == "run") return command_run(cfg, log);
  if (name == "vary-k") return command_vary_k(cfg, log);
  if (name == "sweep1d") return command_sweep1d(cfg, log);
  if (name == "sweepnd") return command_sweepnd(cfg, log);
  if (name == "report") return command_report(cfg, log);
  throw Error(ErrorKind::config_error, "unknown command '" + std::string(name) + "'");
}

}  // namespace clusterbench::harness
