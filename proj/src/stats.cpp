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

#include "teamneg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "teamneg/error.hpp"

namespace teamneg {

namespace {

void check_groups(std::span<const Sample> groups) {
  if (groups.size() < 2) throw InvalidArgument("at least two groups are required");
  for (const auto& g : groups) {
    if (g.size() < 2) throw InvalidArgument("every group needs at least two samples");
  }
}

// Upper tail of the F distribution.
double f_upper_tail(double f, double d1, double d2) {
  if (!(f > 0.0)) return 1.0;
  if (std::isinf(f)) return 0.0;
  return boost::math::ibeta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

// Two-sided tail of Student's t.
double t_two_sided(double t, double df) {
  if (std::isinf(t)) return 0.0;
  return boost::math::ibeta(df / 2.0, 0.5, df / (df + t * t));
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw InvalidArgument("variance needs at least two samples");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

AnovaResult anova_oneway(std::span<const Sample> groups) {
  check_groups(groups);
  std::size_t n = 0;
  double total = 0.0;
  for (const auto& g : groups) {
    n += g.size();
    total += std::accumulate(g.begin(), g.end(), 0.0);
  }
  const double grand = total / static_cast<double>(n);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& g : groups) {
    const double m = mean(g);
    ss_between += static_cast<double>(g.size()) * (m - grand) * (m - grand);
    for (double x : g) ss_within += (x - m) * (x - m);
  }

  AnovaResult r;
  r.df_between = static_cast<double>(groups.size() - 1);
  r.df_within = static_cast<double>(n - groups.size());
  if (ss_within == 0.0) {
    if (ss_between == 0.0) {
      r.f = 0.0;
      r.p = 1.0;
    } else {
      r.f = std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.f = (ss_between / r.df_between) / (ss_within / r.df_within);
  r.p = f_upper_tail(r.f, r.df_between, r.df_within);
  return r;
}

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InvalidArgument("Welch test needs at least two samples per group");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sample_variance(a) / na;
  const double vb = sample_variance(b) / nb;
  const double diff = mean(a) - mean(b);

  WelchResult r;
  const double se2 = va + vb;
  if (se2 == 0.0) {
    r.t = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    r.df = na + nb - 2.0;
    r.p = diff == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.t = diff / std::sqrt(se2);
  r.df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  r.p = t_two_sided(r.t, r.df);
  return r;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p_values[a] < p_values[b];
  });
  std::vector<double> adjusted(m);
  double running = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double scaled =
        std::min(1.0, static_cast<double>(m - k) * p_values[order[k]]);
    running = std::max(running, scaled);
    adjusted[order[k]] = running;
  }
  return adjusted;
}

PosthocResult posthoc_pairwise(std::span<const Sample> groups, double alpha) {
  check_groups(groups);
  PosthocResult r;
  std::vector<double> raw;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const double p = welch_t_test(groups[i], groups[j]).p;
      r.pairs.push_back({i, j, p, p});
      raw.push_back(p);
    }
  }
  const auto adjusted = holm_adjust(raw);
  for (std::size_t k = 0; k < r.pairs.size(); ++k) r.pairs[k].adjusted_p = adjusted[k];

  double top_mean = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double m = mean(groups[g]);
    if (m > top_mean) {
      top_mean = m;
      r.top = g;
    }
  }
  r.best.assign(groups.size(), false);
  r.best[r.top] = true;
  for (const auto& pair : r.pairs) {
    if (pair.first != r.top && pair.second != r.top) continue;
    const std::size_t other = pair.first == r.top ? pair.second : pair.first;
    if (pair.adjusted_p >= alpha) r.best[other] = true;
  }
  return r;
}

GroupComparison compare_groups(std::span<const Sample> groups, double alpha) {
  GroupComparison c;
  for (const auto& g : groups) c.means.push_back(mean(g));
  c.anova = anova_oneway(groups);
  c.posthoc = posthoc_pairwise(groups, alpha);
  return c;
}

}  // namespace teamneg
