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

// Slow, definition-level reference implementations used by the unit and acceptance
// tests. Nothing here shares code with the library beyond plain data types.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "clusterbench/linalg.hpp"

namespace clusterbench::oracle {

struct PairTally {
  std::int64_t a = 0;  // together in both
  std::int64_t b = 0;  // together only in the first
  std::int64_t c = 0;  // together only in the second
  std::int64_t d = 0;  // apart in both
};

inline PairTally enumerate_pairs(const std::vector<int>& u, const std::vector<int>& v) {
  PairTally t;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const bool su = u[i] == u[j];
      const bool sv = v[i] == v[j];
      if (su && sv) ++t.a;
      else if (su) ++t.b;
      else if (sv) ++t.c;
      else ++t.d;
    }
  return t;
}

inline double jaccard(const PairTally& t) {
  const double den = static_cast<double>(t.a + t.b + t.c);
  return den == 0 ? 1.0 : static_cast<double>(t.a) / den;
}

inline double fowlkes_mallows(const PairTally& t) {
  if (t.a + t.b + t.c == 0) return 1.0;
  const double ab = static_cast<double>(t.a + t.b);
  const double ac = static_cast<double>(t.a + t.c);
  if (ab == 0 || ac == 0) return 0.0;
  return static_cast<double>(t.a) / std::sqrt(ab * ac);
}

// Hubert-Arabie ARI written in the four pair counts.
inline double adjusted_rand(const PairTally& t) {
  const long double a = t.a, b = t.b, c = t.c, d = t.d;
  const long double num = 2 * (a * d - b * c);
  const long double den = (a + b) * (b + d) + (a + c) * (c + d);
  if (den == 0) return num == 0 ? 1.0 : 0.0;
  return static_cast<double>(num / den);
}

inline long double entropy_of(const std::map<std::pair<int, int>, int>& counts, std::size_t n) {
  long double h = 0;
  for (const auto& [_, c] : counts) {
    const long double p = static_cast<long double>(c) / n;
    h -= p * std::log(p);
  }
  return h;
}

// I(U;V) / sqrt(H(U) H(V)) from H(U) + H(V) - H(U,V), counted directly on objects.
inline double nmi(const std::vector<int>& u, const std::vector<int>& v) {
  std::map<std::pair<int, int>, int> cu, cv, cj;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++cu[{u[i], 0}];
    ++cv[{v[i], 0}];
    ++cj[{u[i], v[i]}];
  }
  const long double hu = entropy_of(cu, u.size());
  const long double hv = entropy_of(cv, u.size());
  const long double hj = entropy_of(cj, u.size());
  if (cj.size() == cu.size() && cj.size() == cv.size()) return 1.0;
  if (hu == 0 && hv == 0) return 1.0;
  if (hu == 0 || hv == 0) return 0.0;
  return static_cast<double>(std::clamp((hu + hv - hj) / std::sqrt(hu * hv), 0.0L, 1.0L));
}

// Minimum total dissimilarity over every k-subset of medoids.
inline double pam_brute_force(const linalg::Matrix& d, std::size_t k) {
  const std::size_t n = d.rows();
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j)
        if (pick[j]) m = std::min(m, d(i, j));
      total += m;
    }
    best = std::min(best, total);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Components left after deleting the k-1 heaviest edges of a Prim minimum spanning tree.
// Returned as a canonical label vector (first appearance order).
inline std::vector<int> mst_cut(const linalg::Matrix& d, std::size_t k) {
  const std::size_t n = d.rows();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, n);
  std::vector<char> in(n, 0);
  best[0] = 0;
  struct Edge {
    double w;
    std::size_t u, v;
  };
  std::vector<Edge> edges;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!in[i] && (u == n || best[i] < best[u])) u = i;
    in[u] = 1;
    if (parent[u] != n) edges.push_back({best[u], parent[u], u});
    for (std::size_t i = 0; i < n; ++i)
      if (!in[i] && d(u, i) < best[i]) {
        best[i] = d(u, i);
        parent[i] = u;
      }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.w < y.w; });
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t e = 0; e + (k - 1) < edges.size(); ++e) root[find(edges[e].u)] = find(edges[e].v);
  std::vector<int> labels(n);
  std::map<std::size_t, int> ids;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
    labels[i] = it->second;
  }
  return labels;
}

// Same partition up to relabeling.
inline bool same_partition(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) return false;
  std::map<int, int> fw, bw;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (fw.emplace(u[i], v[i]).first->second != v[i]) return false;
    if (bw.emplace(v[i], u[i]).first->second != u[i]) return false;
  }
  return true;
}

// Untied Kruskal-Wallis H from precomputed ranks.
inline double kruskal_h(const std::vector<double>& pooled_ranks, const std::vector<int>& group_of,
                        const std::vector<std::size_t>& sizes) {
  const double n = static_cast<double>(pooled_ranks.size());
  std::vector<double> sums(sizes.size(), 0.0);
  for (std::size_t i = 0; i < pooled_ranks.size(); ++i) sums[static_cast<std::size_t>(group_of[i])] += pooled_ranks[i];
  double h = 0;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    const double diff = sums[g] / static_cast<double>(sizes[g]) - (n + 1) / 2;
    h += static_cast<double>(sizes[g]) * diff * diff;
  }
  return h * 12.0 / (n * (n + 1));
}

// Exact permutation p-value of H over every relabeling of the pooled sample into
// groups of the given sizes.
inline double permutation_p(const std::vector<std::vector<double>>& groups) {
  std::vector<double> pooled;
  std::vector<int> labels;
  std::vector<std::size_t> sizes;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    sizes.push_back(groups[g].size());
    for (double x : groups[g]) {
      pooled.push_back(x);
      labels.push_back(static_cast<int>(g));
    }
  }
  std::vector<double> ranks(pooled.size());
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    double less = 0, equal = 0;
    for (double y : pooled) {
      less += y < pooled[i];
      equal += y == pooled[i];
    }
    ranks[i] = less + (equal + 1) / 2;
  }
  const double observed = kruskal_h(ranks, labels, sizes);
  std::vector<int> perm = labels;
  std::sort(perm.begin(), perm.end());
  std::size_t total = 0, extreme = 0;
  do {
    ++total;
    if (kruskal_h(ranks, perm, sizes) >= observed - 1e-12) ++extreme;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// Upper chi-square tail by the lower-gamma power series in long double, only for
// moderate x where the series converges quickly.
inline long double chi_square_tail_series(long double x, int df) {
  const long double a = df / 2.0L;
  const long double z = x / 2.0L;
  if (z == 0) return 1.0L;
  long double term = 1.0L / a;
  long double sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= z / (a + n);
    sum += term;
    if (term < sum * 1e-21L) break;
  }
  const long double lower = sum * std::exp(a * std::log(z) - z - std::lgamma(a));
  return 1.0L - lower;
}

}  // namespace clusterbench::oracle
