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

#include "teamneg/tactics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "teamneg/error.hpp"

namespace teamneg {

void TimeTactic::validate() const {
  if (!(reservation_utility >= 0.0 && reservation_utility < 1.0)) {
    throw ConfigError("reservation utility must lie in [0, 1), got " +
                      std::to_string(reservation_utility));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ConfigError("concession speed beta must be positive, got " +
                      std::to_string(beta));
  }
}

double demand(const TimeTactic& tactic, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidArgument("normalized time " + std::to_string(t) +
                          " outside [0, 1]");
  }
  if (t == 1.0) return tactic.reservation_utility;
  return 1.0 - (1.0 - tactic.reservation_utility) * std::pow(t, 1.0 / tactic.beta);
}

void IsoSamplerConfig::validate() const {
  if (candidate_count < 1) throw ConfigError("candidate_count must be >= 1");
  if (!(utility_tolerance > 0.0)) {
    throw ConfigError("utility_tolerance must be positive");
  }
}

namespace {

// Linear utility u(x) = offset + gradient . x.
struct LinearUtility {
  explicit LinearUtility(const PreferenceProfile& profile) {
    gradient.resize(profile.size());
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (profile.directions[j] == Direction::kIncreasing) {
        gradient[j] = profile.weights[j];
      } else {
        gradient[j] = -profile.weights[j];
        offset += profile.weights[j];
      }
    }
    gradient_sq.resize(gradient.size());
    for (std::size_t j = 0; j < gradient.size(); ++j) {
      gradient_sq[j] = gradient[j] * gradient[j];
    }
  }

  double operator()(std::span<const double> x) const {
    double u = offset;
    for (std::size_t j = 0; j < x.size(); ++j) u += gradient[j] * x[j];
    return u;
  }

  std::vector<double> gradient;
  std::vector<double> gradient_sq;
  double offset = 0.0;
};

// Far below any useful sampler tolerance.
constexpr double kConverged = 1e-14;

double project(const LinearUtility& u, std::span<double> x, double target,
               int max_passes) {
  const std::size_t n = x.size();
  const double* g = u.gradient.data();
  const double* g2 = u.gradient_sq.data();
  double* v = x.data();
  double current = u(x);
  for (int pass = 0; pass < max_passes; ++pass) {
    const double residual = target - current;
    if (std::abs(residual) <= kConverged) break;
    const double sign = residual > 0.0 ? 1.0 : -1.0;
    double norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = sign * g[j];
      if ((d > 0.0 && v[j] < 1.0) || (d < 0.0 && v[j] > 0.0)) norm += g2[j];
    }
    if (norm == 0.0) break;
    const double step = residual / norm;
    double next = u.offset;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = sign * g[j];
      if ((d > 0.0 && v[j] < 1.0) || (d < 0.0 && v[j] > 0.0)) {
        v[j] = std::clamp(v[j] + step * g[j], 0.0, 1.0);
      }
      next += g[j] * v[j];
    }
    if (std::abs(target - next) >= std::abs(residual)) {
      current = next;
      break;
    }
    current = next;
  }
  return current;
}

}  // namespace

double project_to_iso_utility(const PreferenceProfile& profile,
                              std::span<double> point, double target,
                              int max_passes) {
  return project(LinearUtility(profile), point, target, max_passes);
}

double similarity_cost(std::span<const double> offer,
                       std::span<const Offer> references) {
  double cost = 0.0;
  for (const auto& ref : references) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < offer.size(); ++j) {
      const double d = offer[j] - ref.values[j];
      d2 += d * d;
    }
    cost += std::sqrt(d2);
  }
  return cost;
}

std::size_t select_most_similar(std::span<const Offer> candidates,
                                std::span<const Offer> references) {
  if (candidates.empty()) throw InvalidArgument("no candidate offers");
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double cost = similarity_cost(candidates[i].values, references);
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  return best;
}

Offer sample_iso_offer(const PreferenceProfile& profile, double target,
                       std::span<const Offer> references,
                       const IsoSamplerConfig& config, Rng& rng) {
  target = std::clamp(target, 0.0, 1.0);
  if (target >= 1.0) return ideal_offer(profile);

  const LinearUtility u(profile);
  const std::size_t n = profile.size();
  std::vector<double> x(n);
  std::vector<double> best;
  double best_cost = std::numeric_limits<double>::infinity();

  for (int c = 0; c < config.candidate_count; ++c) {
    for (auto& v : x) v = uniform01(rng);
    const double reached = project(u, x, target, 10);
    if (std::abs(reached - target) > config.utility_tolerance) continue;
    const double cost =
        references.empty() ? -reached : similarity_cost(x, references);
    if (cost < best_cost) {
      best_cost = cost;
      best = x;
    }
  }
  if (best.empty()) return ideal_offer(profile);
  return Offer{std::move(best)};
}

}  // namespace teamneg
