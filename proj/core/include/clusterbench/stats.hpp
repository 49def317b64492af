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

#include <span>
#include <vector>

namespace clusterbench::stats {

struct KruskalResult {
  double h_statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Mid-ranks (1-based) of the values; ties share the average of their positions.
std::vector<double> mid_ranks(std::span<const double> values);

// Tie-corrected Kruskal-Wallis H with a chi-square approximation for p.
// Throws invalid_parameter for fewer than two groups or an empty group and
// degenerate_data when every pooled value is equal.
KruskalResult kruskal_wallis(std::span<const std::vector<double>> groups);

// Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_upper(double a, double x);

// P(X > x) for X ~ chi^2(df).
double chi_square_upper_tail(double x, int df);

}  // namespace clusterbench::stats
