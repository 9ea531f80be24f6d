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

#ifndef TEAMNEG_DOMAIN_HPP_
#define TEAMNEG_DOMAIN_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teamneg {

struct Issue {
  std::string name;
  std::size_t index = 0;
  bool operator==(const Issue&) const = default;
};

// Ordered set of continuous issues, each scaled to [0, 1].
class NegotiationDomain {
 public:
  NegotiationDomain() = default;
  explicit NegotiationDomain(const std::vector<std::string>& issue_names);

  const std::vector<Issue>& issues() const { return issues_; }
  std::size_t size() const { return issues_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const NegotiationDomain&) const = default;

 private:
  std::vector<Issue> issues_;
};

struct Offer {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  bool operator==(const Offer&) const = default;
};

// Throws InvalidArgument unless `offer` has `issue_count` values in [0, 1].
void validate_offer(const Offer& offer, std::size_t issue_count);

// An offer under construction: attributes are set one at a time.
class PartialOffer {
 public:
  explicit PartialOffer(std::size_t issue_count) : values_(issue_count) {}

  std::size_t size() const { return values_.size(); }
  bool is_set(std::size_t issue) const { return values_.at(issue).has_value(); }
  std::optional<double> get(std::size_t issue) const { return values_.at(issue); }
  void set(std::size_t issue, double value);
  bool complete() const;
  std::size_t set_count() const;

  // Throws InvalidArgument when an attribute is still unset.
  Offer to_offer() const;

 private:
  std::vector<std::optional<double>> values_;
};

enum class Direction { kIncreasing, kDecreasing };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

// Additive linear preferences. Weights are non-negative and sum to one.
struct PreferenceProfile {
  std::string name;
  std::vector<double> weights;
  std::vector<Direction> directions;
  double reservation_utility = 0.0;

  std::size_t size() const { return weights.size(); }
  void validate(std::size_t issue_count) const;
  bool operator==(const PreferenceProfile&) const = default;
};

// Linear valuation: x for increasing issues, 1 - x for decreasing ones.
double valuation(const PreferenceProfile& profile, std::size_t issue,
                 double value);

double utility(const PreferenceProfile& profile, const Offer& offer);

// Sum over the attributes that are set; an empty partial offer is worth 0.
double partial_utility(const PreferenceProfile& profile,
                       const PartialOffer& partial);

// Every attribute at the profile's favourable extreme (utility 1).
Offer ideal_offer(const PreferenceProfile& profile);
// Every attribute at the unfavourable extreme (utility 0).
Offer worst_offer(const PreferenceProfile& profile);

// Value in [0, 1] whose valuation under `direction` equals `v`.
inline double value_for_valuation(Direction direction, double v) {
  return direction == Direction::kIncreasing ? v : 1.0 - v;
}

struct Scenario {
  std::string name;
  NegotiationDomain domain;
  std::vector<PreferenceProfile> team;
  PreferenceProfile opponent;

  // Throws ConfigError on any inconsistency.
  void validate() const;
  bool operator==(const Scenario&) const = default;
};

// Hotel group booking: issues pp, cf, pd, db; team members a1..a3 and the
// hotel `op`.
Scenario hotel_booking_scenario();

// Built-in scenarios by name ("hotel-booking"). Throws ConfigError otherwise.
Scenario builtin_scenario(std::string_view name);

}  // namespace teamneg

#endif  // TEAMNEG_DOMAIN_HPP_
