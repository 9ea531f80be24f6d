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

#ifndef TEAMNEG_TACTICS_HPP_
#define TEAMNEG_TACTICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/random.hpp"

namespace teamneg {

// Time-dependent demand curve over normalized time, deadline 1.0.
// beta < 1 concedes late (Boulware), beta > 1 early (Conceder).
struct TimeTactic {
  double reservation_utility = 0.0;
  double beta = 1.0;

  void validate() const;
};

// s(t) = 1 - (1 - RU) * t^(1/beta). Throws InvalidArgument for t outside
// [0, 1].
double demand(const TimeTactic& tactic, double t);

struct IsoSamplerConfig {
  int candidate_count = 500;
  double utility_tolerance = 1e-6;

  void validate() const;
  bool operator==(const IsoSamplerConfig&) const = default;
};

// Moves `point` onto the hyperplane utility == target inside the unit box.
// Each pass steps along the utility gradient restricted to coordinates that
// are not pinned at the bound blocking the move, then clips; at most
// `max_passes` passes. Returns the final utility.
double project_to_iso_utility(const PreferenceProfile& profile,
                              std::span<double> point, double target,
                              int max_passes = 10);

// Sum of Euclidean distances from `offer` to every reference.
double similarity_cost(std::span<const double> offer,
                       std::span<const Offer> references);

// Index of the candidate with the smallest similarity cost; ties go to the
// lowest index. Requires a non-empty candidate list.
std::size_t select_most_similar(std::span<const Offer> candidates,
                                std::span<const Offer> references);

// Draws `candidate_count` random points, projects each onto the iso-utility
// surface at `target`, and returns the one closest to the references. With no
// references the candidate with the highest utility wins. A target of 1 (or a
// surface no candidate reaches) yields the ideal offer.
Offer sample_iso_offer(const PreferenceProfile& profile, double target,
                       std::span<const Offer> references,
                       const IsoSamplerConfig& config, Rng& rng);

}  // namespace teamneg

#endif  // TEAMNEG_TACTICS_HPP_
