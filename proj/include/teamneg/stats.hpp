// Copyright 2026 The teamneg Authors
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

#ifndef TEAMNEG_STATS_HPP_
#define TEAMNEG_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace teamneg {

using Sample = std::vector<double>;

struct AnovaResult {
  double f = 0.0;
  double p = 1.0;
  double df_between = 0.0;
  double df_within = 0.0;
};

// One-way ANOVA. Needs at least two groups of at least two samples each.
// With zero within-group variance F is +inf and p = 0 when the means differ;
// when everything is equal F = 0 and p = 1.
AnovaResult anova_oneway(std::span<const Sample> groups);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Holm step-down adjustment; the output is in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

struct PairwiseComparison {
  std::size_t first = 0;
  std::size_t second = 0;
  double raw_p = 1.0;
  double adjusted_p = 1.0;
};

struct PosthocResult {
  std::vector<PairwiseComparison> pairs;
  // Index of the group with the highest mean (lowest index on ties).
  std::size_t top = 0;
  // Groups not significantly worse than `top` at `alpha`.
  std::vector<bool> best;
};

// Welch t-tests over every pair of groups, Holm-adjusted together.
PosthocResult posthoc_pairwise(std::span<const Sample> groups, double alpha = 0.05);

struct GroupComparison {
  std::vector<double> means;
  AnovaResult anova;
  PosthocResult posthoc;
};

GroupComparison compare_groups(std::span<const Sample> groups, double alpha = 0.05);

double mean(std::span<const double> xs);
// Unbiased (n - 1) sample variance.
double sample_variance(std::span<const double> xs);

}  // namespace teamneg

#endif  // TEAMNEG_STATS_HPP_
