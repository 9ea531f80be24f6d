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

#include "teamneg/domain.hpp"

#include <cmath>
#include <set>
#include <string>

#include "teamneg/error.hpp"

namespace teamneg {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

void check_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(value) +
                          " outside [0, 1]");
  }
}

}  // namespace

NegotiationDomain::NegotiationDomain(
    const std::vector<std::string>& issue_names) {
  if (issue_names.empty()) {
    throw ConfigError("a negotiation domain needs at least one issue");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < issue_names.size(); ++i) {
    if (issue_names[i].empty()) throw ConfigError("issue names must be non-empty");
    if (!seen.insert(issue_names[i]).second) {
      throw ConfigError("duplicate issue name '" + issue_names[i] + "'");
    }
    issues_.push_back(Issue{issue_names[i], i});
  }
}

std::optional<std::size_t> NegotiationDomain::index_of(
    std::string_view name) const {
  for (const auto& issue : issues_) {
    if (issue.name == name) return issue.index;
  }
  return std::nullopt;
}

void validate_offer(const Offer& offer, std::size_t issue_count) {
  if (offer.size() != issue_count) {
    throw InvalidArgument("offer has " + std::to_string(offer.size()) +
                          " values, domain has " + std::to_string(issue_count) +
                          " issues");
  }
  for (double v : offer.values) check_unit_interval(v, "offer value");
}

void PartialOffer::set(std::size_t issue, double value) {
  check_unit_interval(value, "partial offer value");
  values_.at(issue) = value;
}

bool PartialOffer::complete() const { return set_count() == values_.size(); }

std::size_t PartialOffer::set_count() const {
  std::size_t n = 0;
  for (const auto& v : values_) n += v.has_value() ? 1 : 0;
  return n;
}

Offer PartialOffer::to_offer() const {
  Offer offer;
  offer.values.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i]) {
      throw InvalidArgument("attribute " + std::to_string(i) + " is not set");
    }
    offer.values.push_back(*values_[i]);
  }
  return offer;
}

std::string_view to_string(Direction d) {
  return d == Direction::kIncreasing ? "increasing" : "decreasing";
}

Direction parse_direction(std::string_view text) {
  if (text == "increasing" || text == "up") return Direction::kIncreasing;
  if (text == "decreasing" || text == "down") return Direction::kDecreasing;
  throw ConfigError("unknown valuation direction '" + std::string(text) + "'");
}

void PreferenceProfile::validate(std::size_t issue_count) const {
  const std::string who = "profile '" + name + "': ";
  if (weights.size() != issue_count) {
    throw ConfigError(who + "expected " + std::to_string(issue_count) +
                      " weights, got " + std::to_string(weights.size()));
  }
  if (directions.size() != issue_count) {
    throw ConfigError(who + "expected " + std::to_string(issue_count) +
                      " directions, got " + std::to_string(directions.size()));
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ConfigError(who + "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw ConfigError(who + "weights sum to " + std::to_string(sum) +
                      ", expected 1");
  }
  if (!(reservation_utility >= 0.0 && reservation_utility <= 1.0)) {
    throw ConfigError(who + "reservation utility outside [0, 1]");
  }
}

double valuation(const PreferenceProfile& profile, std::size_t issue,
                 double value) {
  if (issue >= profile.directions.size()) {
    throw InvalidArgument("issue index " + std::to_string(issue) +
                          " out of range");
  }
  check_unit_interval(value, "attribute value");
  return profile.directions[issue] == Direction::kIncreasing ? value
                                                             : 1.0 - value;
}

double utility(const PreferenceProfile& profile, const Offer& offer) {
  if (offer.size() != profile.size()) {
    throw InvalidArgument("offer dimension " + std::to_string(offer.size()) +
                          " does not match profile dimension " +
                          std::to_string(profile.size()));
  }
  double u = 0.0;
  for (std::size_t j = 0; j < offer.size(); ++j) {
    u += profile.weights[j] * valuation(profile, j, offer[j]);
  }
  return u;
}

double partial_utility(const PreferenceProfile& profile,
                       const PartialOffer& partial) {
  double u = 0.0;
  for (std::size_t j = 0; j < partial.size() && j < profile.size(); ++j) {
    if (auto v = partial.get(j)) u += profile.weights[j] * valuation(profile, j, *v);
  }
  return u;
}

Offer ideal_offer(const PreferenceProfile& profile) {
  Offer offer;
  for (Direction d : profile.directions) offer.values.push_back(value_for_valuation(d, 1.0));
  return offer;
}

Offer worst_offer(const PreferenceProfile& profile) {
  Offer offer;
  for (Direction d : profile.directions) offer.values.push_back(value_for_valuation(d, 0.0));
  return offer;
}

void Scenario::validate() const {
  if (domain.size() == 0) throw ConfigError("scenario has no issues");
  if (team.empty()) throw ConfigError("scenario has no team members");
  std::set<std::string> names;
  for (const auto& p : team) {
    p.validate(domain.size());
    if (!names.insert(p.name).second) {
      throw ConfigError("duplicate profile name '" + p.name + "'");
    }
  }
  opponent.validate(domain.size());
}

Scenario hotel_booking_scenario() {
  using enum Direction;
  const std::vector<Direction> team_dirs = {kDecreasing, kDecreasing,
                                            kIncreasing, kIncreasing};
  const std::vector<Direction> hotel_dirs = {kIncreasing, kIncreasing,
                                             kDecreasing, kDecreasing};
  Scenario s;
  s.name = "hotel-booking";
  s.domain = NegotiationDomain({"pp", "cf", "pd", "db"});
  s.team = {
      {"a1", {0.50, 0.10, 0.05, 0.35}, team_dirs, 0.0},
      {"a2", {0.25, 0.25, 0.25, 0.25}, team_dirs, 0.0},
      {"a3", {0.30, 0.50, 0.05, 0.15}, team_dirs, 0.0},
  };
  s.opponent = {"op", {0.10, 0.50, 0.25, 0.15}, hotel_dirs, 0.0};
  return s;
}

Scenario builtin_scenario(std::string_view name) {
  if (name == "hotel-booking") return hotel_booking_scenario();
  throw ConfigError("unknown built-in scenario '" + std::string(name) + "'");
}

}  // namespace teamneg
