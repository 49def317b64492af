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

#include "clusterbench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "clusterbench/clusterer.hpp"
#include "clusterbench/error.hpp"
#include "clusterbench/random.hpp"

namespace clusterbench::sweep {

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first;
  std::mutex mu;
  auto body = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

std::uint64_t clustering_seed(std::uint64_t master, const std::string& dataset_id, Algorithm a) {
  return derive_seed(master, {hash_bytes(dataset_id), static_cast<std::uint64_t>(a)});
}

RunRecord evaluate(const datagen::Dataset& dataset, const cluster::ClustererConfig& config, std::uint64_t master_seed,
                   std::int64_t index) {
  RunRecord r;
  r.dataset_id = dataset.id();
  r.num_classes = dataset.spec.num_classes;
  r.num_features = dataset.num_features();
  r.objects_per_class = dataset.spec.objects_per_class;
  r.algorithm = config.algorithm();
  r.k = config.k();
  r.config = config.label();
  r.index = index;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto result = cluster::run_clusterer(config, dataset, clustering_seed(master_seed, r.dataset_id, r.algorithm));
    r.scores = metrics::score(dataset.truth(), result.partition);
  } catch (const Error& e) {
    r.failed = true;
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void sort_records(std::vector<RunRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.dataset_id, a.algorithm, a.k, a.index) < std::tie(b.dataset_id, b.algorithm, b.k, b.index);
  });
}

std::string_view to_string(Index i) noexcept {
  switch (i) {
    case Index::jaccard: return "jaccard";
    case Index::ari: return "ari";
    case Index::fowlkes_mallows: return "fm";
    case Index::nmi: return "nmi";
  }
  return "?";
}

double index_value(const metrics::Scores& s, Index i) noexcept {
  switch (i) {
    case Index::jaccard: return s.jaccard;
    case Index::ari: return s.ari;
    case Index::fowlkes_mallows: return s.fowlkes_mallows;
    case Index::nmi: return s.nmi;
  }
  return 0.0;
}

namespace {

struct Accumulator {
  metrics::Scores sum;
  std::size_t runs = 0;
  std::size_t missing = 0;

  void add(const RunRecord& r) {
    if (r.failed) {
      ++missing;
      return;
    }
    sum.jaccard += r.scores.jaccard;
    sum.ari += r.scores.ari;
    sum.fowlkes_mallows += r.scores.fowlkes_mallows;
    sum.nmi += r.scores.nmi;
    ++runs;
  }

  metrics::Scores mean() const {
    const double n = runs ? static_cast<double>(runs) : std::nan("");
    return {sum.jaccard / n, sum.ari / n, sum.fowlkes_mallows / n, sum.nmi / n};
  }
};

std::size_t algorithm_slot(std::span<const Algorithm> algorithms, Algorithm a) {
  const auto it = std::find(algorithms.begin(), algorithms.end(), a);
  if (it == algorithms.end()) throw Error(ErrorKind::invalid_parameter, "record for an unlisted algorithm");
  return static_cast<std::size_t>(it - algorithms.begin());
}

double ari_or_zero(const RunRecord& r) { return r.failed ? 0.0 : r.scores.ari; }

double as_number(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return 0.0;
}

}  // namespace

DefaultReport summarize_default(std::vector<RunRecord> records, std::span<const Algorithm> algorithms) {
  sort_records(records);
  DefaultReport rep;
  rep.algorithms.assign(algorithms.begin(), algorithms.end());
  const std::size_t na = algorithms.size();

  std::map<std::size_t, std::vector<Accumulator>> by_f, by_ne;
  std::vector<Accumulator> overall(na);
  for (const auto& r : records) {
    const std::size_t a = algorithm_slot(algorithms, r.algorithm);
    auto& f = by_f[r.num_features];
    auto& ne = by_ne[r.objects_per_class];
    f.resize(na);
    ne.resize(na);
    f[a].add(r);
    ne[a].add(r);
    overall[a].add(r);
    if (r.failed) rep.missing.push_back(r.dataset_id + " " + std::string(cluster::to_string(r.algorithm)) + ": " + r.error);
  }
  auto emit = [&](const std::string& factor, const std::map<std::size_t, std::vector<Accumulator>>& groups) {
    for (const auto& [level, accs] : groups)
      for (std::size_t a = 0; a < na; ++a)
        rep.groups.push_back({factor, level, algorithms[a], accs[a].mean(), accs[a].runs, accs[a].missing});
  };
  emit("F", by_f);
  emit("Ne", by_ne);

  for (Index idx : kAllIndices) {
    IndexTable t;
    t.index = idx;
    for (std::size_t a = 0; a < na; ++a) t.macc.push_back(index_value(overall[a].mean(), idx));
    t.difference = linalg::Matrix(na, na);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) t.difference(i, j) = i == j ? 0.0 : t.macc[i] - t.macc[j];
    rep.tables.push_back(std::move(t));
  }
  rep.records = std::move(records);
  return rep;
}

namespace {

std::vector<cluster::ClustererConfig> default_configs(std::span<const Algorithm> algorithms) {
  std::vector<cluster::ClustererConfig> out;
  for (Algorithm a : algorithms) out.emplace_back(a, 0);
  return out;
}

}  // namespace

DefaultReport run_default(std::span<const datagen::Dataset> corpus, std::span<const Algorithm> algorithms,
                          const RunOptions& options) {
  return run_default(corpus, default_configs(algorithms), options);
}

DefaultReport run_default(std::span<const datagen::Dataset> corpus, std::span<const cluster::ClustererConfig> configs,
                          const RunOptions& options) {
  if (corpus.empty()) throw Error(ErrorKind::invalid_parameter, "default evaluation needs a non-empty corpus");
  const std::size_t na = configs.size();
  std::vector<Algorithm> algorithms;
  for (const auto& c : configs) algorithms.push_back(c.algorithm());
  std::vector<RunRecord> records(corpus.size() * na);
  parallel_for(records.size(), options.workers, [&](std::size_t t) {
    const auto& ds = corpus[t / na];
    auto cfg = configs[t % na];
    cfg.set_k(ds.spec.num_classes);
    records[t] = evaluate(ds, cfg, options.seed);
  });
  return summarize_default(std::move(records), algorithms);
}

VaryKReport vary_k(std::span<const datagen::Dataset> corpus, std::span<const Algorithm> algorithms,
                   std::span<const std::size_t> k_values, const RunOptions& options) {
  return vary_k(corpus, default_configs(algorithms), k_values, options);
}

VaryKReport vary_k(std::span<const datagen::Dataset> corpus, std::span<const cluster::ClustererConfig> configs,
                   std::span<const std::size_t> k_values, const RunOptions& options) {
  std::vector<Algorithm> algorithms;
  for (const auto& c : configs) algorithms.push_back(c.algorithm());
  if (k_values.empty()) throw Error(ErrorKind::invalid_grid, "vary-k needs at least one k");
  VaryKReport rep;
  struct Task {
    std::size_t dataset, alg, k;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a < algorithms.size(); ++a)
    for (std::size_t ki = 0; ki < k_values.size(); ++ki)
      for (std::size_t d = 0; d < corpus.size(); ++d) {
        if (k_values[ki] < 1 || k_values[ki] > corpus[d].size()) {
          rep.skipped.push_back(corpus[d].id() + " " + std::string(cluster::to_string(algorithms[a])) +
                                ": k = " + std::to_string(k_values[ki]) + " exceeds N");
          continue;
        }
        tasks.push_back({d, a, k_values[ki]});
      }
  std::vector<RunRecord> records(tasks.size());
  parallel_for(tasks.size(), options.workers, [&](std::size_t t) {
    const auto& task = tasks[t];
    auto cfg = configs[task.alg];
    cfg.set_k(task.k);
    records[t] = evaluate(corpus[task.dataset], cfg, options.seed);
  });

  for (Algorithm a : algorithms)
    for (std::size_t k : k_values) {
      KCurvePoint p;
      p.algorithm = a;
      p.k = k;
      for (const auto& r : records) {
        if (r.algorithm != a || r.k != k || r.failed) continue;
        p.mean_ari += r.scores.ari;
        p.mean_jaccard += r.scores.jaccard;
        ++p.runs;
      }
      if (p.runs) {
        p.mean_ari /= static_cast<double>(p.runs);
        p.mean_jaccard /= static_cast<double>(p.runs);
      } else {
        p.mean_ari = p.mean_jaccard = std::nan("");
      }
      rep.curve.push_back(p);
    }
  for (const auto& r : records)
    if (r.failed) rep.skipped.push_back(r.dataset_id + " " + std::string(cluster::to_string(r.algorithm)) + ": " + r.error);
  std::set<std::size_t> classes;
  for (const auto& ds : corpus) classes.insert(ds.spec.num_classes);
  rep.true_classes.assign(classes.begin(), classes.end());
  sort_records(records);
  rep.records = std::move(records);
  return rep;
}

OneDimSummary summarize_one_dim(double gamma_default, std::span<const double> gamma,
                                std::span<const std::vector<double>> ari) {
  if (gamma.empty()) throw Error(ErrorKind::invalid_grid, "one-dimensional sweep grid is empty");
  OneDimSummary s;
  const double np = static_cast<double>(gamma.size());
  s.grid_size = gamma.size();
  s.max_gain = -std::numeric_limits<double>::infinity();
  for (double g : gamma) {
    const double gain = g - gamma_default;
    s.mean_gain += gain;
    s.max_gain = std::max(s.max_gain, gain);
  }
  s.mean_gain /= np;
  double var = 0.0;
  for (double g : gamma) {
    const double dev = g - gamma_default - s.mean_gain;
    var += dev * dev;
  }
  s.sd_gain = std::sqrt(var / np);

  if (!ari.empty() && !ari.front().empty()) {
    const std::size_t nd = ari.front().size();
    for (std::size_t d = 0; d < nd; ++d) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& row : ari) best = std::max(best, row[d]);
      s.mean_best += best;
    }
    s.mean_best /= static_cast<double>(nd);
  }
  return s;
}

std::vector<ParamValue> default_grid(const cluster::ParamDescriptor& desc) {
  using cluster::ParamKind;
  std::vector<ParamValue> grid;
  if (desc.kind == ParamKind::categorical) {
    for (const auto& c : desc.choices) grid.emplace_back(c);
    return grid;
  }
  constexpr int kPoints = 10;
  std::vector<double> xs;
  for (int i = 0; i < kPoints; ++i) {
    const double t = static_cast<double>(i) / (kPoints - 1);
    double x = desc.log_scale && desc.low > 0.0 ? desc.low * std::pow(desc.high / desc.low, t)
                                                : desc.low + t * (desc.high - desc.low);
    if (i == kPoints - 1) x = desc.high;
    xs.push_back(x);
  }
  xs.push_back(as_number(desc.default_value));
  if (desc.kind == ParamKind::integer_range) {
    std::set<std::int64_t> ints;
    for (double x : xs) ints.insert(std::llround(x));
    for (auto v : ints)
      if (desc.admits(ParamValue{v})) grid.emplace_back(v);
  } else {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs) grid.emplace_back(x);
  }
  return grid;
}

OneDimResult one_dim_sweep(std::span<const datagen::Dataset> corpus, Algorithm algorithm, const std::string& parameter,
                           std::vector<ParamValue> grid, const RunOptions& options) {
  if (grid.empty()) throw Error(ErrorKind::invalid_grid, "one-dimensional sweep grid is empty");
  if (corpus.empty()) throw Error(ErrorKind::invalid_parameter, "one-dimensional sweep needs a non-empty corpus");
  cluster::require_parameter(algorithm, parameter);
  const auto first_shape = cluster::ProblemShape{corpus.front().size(), corpus.front().spec.num_classes,
                                                 corpus.front().num_features()};
  const auto space = cluster::parameter_space(algorithm, first_shape);
  const auto* desc = cluster::find_descriptor(space, parameter);
  for (const auto& v : grid)
    if (!desc->admits(v))
      throw Error(ErrorKind::invalid_grid, "grid value " + cluster::format_value(v) + " is outside " + parameter);
  if (desc->kind != cluster::ParamKind::categorical)
    std::stable_sort(grid.begin(), grid.end(), [](const ParamValue& a, const ParamValue& b) { return as_number(a) < as_number(b); });

  const std::size_t nd = corpus.size();
  const std::size_t ng = grid.size();
  // Slot 0..nd-1: defaults; then grid point g on dataset d at nd + g*nd + d.
  std::vector<RunRecord> records(nd * (ng + 1));
  parallel_for(records.size(), options.workers, [&](std::size_t t) {
    const auto& ds = corpus[t % nd];
    cluster::ClustererConfig cfg(algorithm, ds.spec.num_classes);
    std::int64_t index = -1;
    if (t >= nd) {
      index = static_cast<std::int64_t>(t / nd - 1);
      cfg.set(parameter, grid[static_cast<std::size_t>(index)]);
    }
    records[t] = evaluate(ds, cfg, options.seed, index);
  });

  OneDimResult out;
  auto& tr = out.trace;
  tr.algorithm = algorithm;
  tr.parameter = parameter;
  tr.default_value = desc->default_value;
  for (std::size_t d = 0; d < nd; ++d) tr.gamma_default += ari_or_zero(records[d]);
  tr.gamma_default /= static_cast<double>(nd);
  tr.grid = grid;
  tr.ari.assign(ng, std::vector<double>(nd));
  for (std::size_t g = 0; g < ng; ++g) {
    double sum = 0.0;
    for (std::size_t d = 0; d < nd; ++d) sum += (tr.ari[g][d] = ari_or_zero(records[nd + g * nd + d]));
    tr.gamma.push_back(sum / static_cast<double>(nd));
  }
  out.summary = summarize_one_dim(tr.gamma_default, tr.gamma, tr.ari);
  out.summary.algorithm = algorithm;
  out.summary.parameter = parameter;
  sort_records(records);
  out.records = std::move(records);
  return out;
}

ParamBounds derive_bounds(const OneDimTrace& trace) {
  ParamBounds b;
  b.parameter = trace.parameter;
  if (const auto* s = std::get_if<std::string>(&trace.default_value)) {
    b.kind = cluster::ParamKind::categorical;
    for (const auto& v : trace.grid)
      if (const auto* c = std::get_if<std::string>(&v)) b.choices.push_back(*c);
    if (b.choices.empty()) b.choices.push_back(*s);
    return b;
  }
  b.kind = std::holds_alternative<std::int64_t>(trace.default_value) ? cluster::ParamKind::integer_range
                                                                     : cluster::ParamKind::real_range;
  const double def = as_number(trace.default_value);
  std::size_t d = trace.grid.size();
  for (std::size_t i = 0; i < trace.grid.size(); ++i)
    if (as_number(trace.grid[i]) == def) d = i;
  if (d == trace.grid.size()) {
    b.low = b.high = def;
    return b;
  }
  const double g0 = trace.gamma_default;
  auto expand = [&](int dir) {
    std::size_t i = d;
    bool moved = false;
    int flat = 0;
    for (;;) {
      if ((dir < 0 && i == 0) || (dir > 0 && i + 1 == trace.grid.size())) return i;
      const std::size_t next = dir < 0 ? i - 1 : i + 1;
      if (trace.gamma[next] < g0 - kDegradation) return i;
      if (std::abs(trace.gamma[next] - g0) >= kPlateauStep) moved = true;
      flat = std::abs(trace.gamma[next] - trace.gamma[i]) < kPlateauStep ? flat + 1 : 0;
      i = next;
      if (moved && flat >= 2) return i;
    }
  };
  b.low = as_number(trace.grid[expand(-1)]);
  b.high = as_number(trace.grid[expand(+1)]);
  return b;
}

std::vector<ParamBounds> full_bounds(Algorithm algorithm, const cluster::ProblemShape& shape) {
  std::vector<ParamBounds> out;
  for (const auto& d : cluster::parameter_space(algorithm, shape)) {
    ParamBounds b;
    b.parameter = d.name;
    b.kind = d.kind;
    b.low = d.low;
    b.high = d.high;
    b.choices = d.choices;
    out.push_back(std::move(b));
  }
  return out;
}

double Histogram::lower_edge(std::size_t slot) const noexcept {
  return origin + static_cast<double>(first_bin + static_cast<int>(slot) - 1) * width;
}

double Histogram::upper_edge(std::size_t slot) const noexcept {
  return origin + static_cast<double>(first_bin + static_cast<int>(slot)) * width;
}

std::size_t Histogram::total() const noexcept {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::size_t Histogram::improving() const noexcept {
  std::size_t t = 0;
  for (std::size_t s = 0; s < counts.size(); ++s)
    if (first_bin + static_cast<int>(s) >= 1) t += counts[s];
  return t;
}

Histogram make_histogram(std::span<const double> values, double origin, double width) {
  Histogram h;
  h.origin = origin;
  h.width = width;
  h.first_bin = static_cast<int>(std::ceil((-1.0 - origin) / width));
  const int last = static_cast<int>(std::ceil((1.0 - origin) / width));
  h.counts.assign(static_cast<std::size_t>(last - h.first_bin + 1), 0);
  for (double v : values) {
    const int j = std::clamp(static_cast<int>(std::ceil((v - origin) / width)), h.first_bin, last);
    ++h.counts[static_cast<std::size_t>(j - h.first_bin)];
  }
  return h;
}

RandomSweepSummary summarize_random(double gamma_default, std::span<const double> draw_ari,
                                    std::span<const double> best_per_dataset) {
  RandomSweepSummary s;
  s.draws = draw_ari.size();
  s.gamma_default = gamma_default;
  std::vector<double> gains;
  for (double v : draw_ari)
    if (v > gamma_default) gains.push_back(v - gamma_default);
  if (s.draws) s.p_value = 100.0 * static_cast<double>(gains.size()) / static_cast<double>(s.draws);
  if (!gains.empty()) {
    const double n = static_cast<double>(gains.size());
    for (double g : gains) {
      s.mean_improvement += g;
      s.max_improvement = std::max(s.max_improvement, g);
    }
    s.mean_improvement /= n;
    double var = 0.0;
    for (double g : gains) var += (g - s.mean_improvement) * (g - s.mean_improvement);
    s.sd_improvement = std::sqrt(var / n);
  }
  for (double b : best_per_dataset) s.mean_best += b;
  if (!best_per_dataset.empty()) s.mean_best /= static_cast<double>(best_per_dataset.size());
  s.histogram = make_histogram(draw_ari, gamma_default);
  return s;
}

cluster::ClustererConfig draw_config(Algorithm algorithm, std::size_t k, std::span<const ParamBounds> bounds, Rng& rng) {
  cluster::ClustererConfig cfg(algorithm, k);
  // Declared order fixes the draw sequence; the shape only matters for sampsize defaults.
  for (const auto& d : cluster::parameter_space(algorithm, {std::max<std::size_t>(k + 1, 1), k, 1})) {
    const auto it = std::find_if(bounds.begin(), bounds.end(), [&](const ParamBounds& b) { return b.parameter == d.name; });
    if (it == bounds.end())
      throw Error(ErrorKind::invalid_parameter, "random sweep has no bounds for " + d.name);
    switch (d.kind) {
      case cluster::ParamKind::categorical: {
        if (it->choices.empty()) throw Error(ErrorKind::invalid_parameter, "empty choice set for " + d.name);
        std::uniform_int_distribution<std::size_t> pick(0, it->choices.size() - 1);
        cfg.set(d.name, it->choices[pick(rng)]);
        break;
      }
      case cluster::ParamKind::integer_range: {
        const auto lo = static_cast<std::int64_t>(std::ceil(it->low));
        const auto hi = std::max(lo, static_cast<std::int64_t>(std::floor(it->high)));
        std::uniform_int_distribution<std::int64_t> pick(lo, hi);
        cfg.set(d.name, pick(rng));
        break;
      }
      case cluster::ParamKind::real_range: {
        if (!(it->high > it->low)) {
          cfg.set(d.name, it->low);
          break;
        }
        std::uniform_real_distribution<double> pick(it->low, it->high);
        cfg.set(d.name, pick(rng));
        break;
      }
    }
  }
  return cfg;
}

RandomSweepResult random_sweep(std::span<const datagen::Dataset> corpus, Algorithm algorithm,
                               std::span<const ParamBounds> bounds, std::size_t n_draws, const RunOptions& options) {
  if (corpus.empty()) throw Error(ErrorKind::invalid_parameter, "random sweep needs a non-empty corpus");
  RandomSweepResult out;
  Rng rng(derive_seed(options.seed, {hash_bytes("random-sweep"), static_cast<std::uint64_t>(algorithm)}));
  const std::size_t k0 = corpus.front().spec.num_classes;
  for (std::size_t i = 0; i < n_draws; ++i) out.draws.push_back(draw_config(algorithm, k0, bounds, rng));

  const std::size_t nd = corpus.size();
  std::vector<RunRecord> records(nd * (n_draws + 1));
  parallel_for(records.size(), options.workers, [&](std::size_t t) {
    const auto& ds = corpus[t % nd];
    std::int64_t index = -1;
    cluster::ClustererConfig cfg(algorithm, ds.spec.num_classes);
    if (t >= nd) {
      index = static_cast<std::int64_t>(t / nd - 1);
      cfg = out.draws[static_cast<std::size_t>(index)];
      cfg.set_k(ds.spec.num_classes);
    }
    records[t] = evaluate(ds, cfg, options.seed, index);
  });

  double gamma_default = 0.0;
  for (std::size_t d = 0; d < nd; ++d) gamma_default += ari_or_zero(records[d]);
  gamma_default /= static_cast<double>(nd);
  std::vector<double> best(nd, -std::numeric_limits<double>::infinity());
  std::size_t failed = 0;
  for (std::size_t i = 0; i < n_draws; ++i) {
    double sum = 0.0;
    bool any_failed = false;
    for (std::size_t d = 0; d < nd; ++d) {
      const auto& r = records[nd + i * nd + d];
      any_failed = any_failed || r.failed;
      const double a = ari_or_zero(r);
      sum += a;
      best[d] = std::max(best[d], a);
    }
    failed += any_failed;
    out.draw_ari.push_back(sum / static_cast<double>(nd));
  }
  if (n_draws == 0) best.clear();
  out.summary = summarize_random(gamma_default, out.draw_ari, best);
  out.summary.algorithm = algorithm;
  out.summary.failed_draws = failed;
  sort_records(records);
  out.records = std::move(records);
  return out;
}

}  // namespace clusterbench::sweep
