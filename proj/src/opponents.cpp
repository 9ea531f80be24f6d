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

#include "teamneg/opponents.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "teamneg/error.hpp"

namespace teamneg {

namespace {

struct ParamSpec {
  const char* key;
  double default_value;
  double low;
  double high;
};

std::vector<ParamSpec> param_specs(Archetype a) {
  switch (a) {
    case Archetype::kTimeTactic:
      return {{"beta", 1.0, 1e-9, 1e9}, {"reservation_utility", 0.0, 0.0, 0.999999}};
    case Archetype::kCrazyHaggler:
      return {{"threshold", 0.9, 0.0, 1.0}};
    case Archetype::kHagglerAdaptive:
      return {{"start", 0.85, 0.0, 1.0}, {"slope", 0.25, 0.0, 1.0}, {"spread", 2.0, 0.0, 10.0}};
    case Archetype::kAgentKLike:
      return {{"gamma", 3.0, 1e-9, 1e9}};
    case Archetype::kSmithLike:
      return {{"final_phase", 2.0 / 3.0, 1e-9, 1.0}, {"floor", 0.5, 0.0, 1.0}};
    case Archetype::kNiceTftLike:
      return {{"nash_floor", 0.5, 0.0, 1.0}, {"endgame", 0.95, 0.0, 1.0}};
  }
  return {};
}

constexpr double kRelativeConcessionEpsilon = 1e-9;

}  // namespace

std::string_view to_string(Archetype a) {
  switch (a) {
    case Archetype::kTimeTactic: return "time_tactic";
    case Archetype::kCrazyHaggler: return "crazy_haggler";
    case Archetype::kHagglerAdaptive: return "haggler_adaptive";
    case Archetype::kAgentKLike: return "agent_k_like";
    case Archetype::kSmithLike: return "smith_like";
    case Archetype::kNiceTftLike: return "nice_tft_like";
  }
  return "time_tactic";
}

Archetype parse_archetype(std::string_view text) {
  for (Archetype a : {Archetype::kTimeTactic, Archetype::kCrazyHaggler,
                      Archetype::kHagglerAdaptive, Archetype::kAgentKLike,
                      Archetype::kSmithLike, Archetype::kNiceTftLike}) {
    if (to_string(a) == text) return a;
  }
  throw ConfigError("unknown opponent archetype '" + std::string(text) + "'");
}

void OpponentConfig::validate() const {
  const auto specs = param_specs(archetype);
  for (const auto& [key, value] : params) {
    auto it = std::find_if(specs.begin(), specs.end(),
                           [&](const ParamSpec& s) { return key == s.key; });
    if (it == specs.end()) {
      throw ConfigError("archetype " + std::string(to_string(archetype)) +
                        " has no parameter '" + key + "'");
    }
    if (!(value >= it->low && value <= it->high)) {
      throw ConfigError("parameter '" + key + "' = " + std::to_string(value) +
                        " outside [" + std::to_string(it->low) + ", " +
                        std::to_string(it->high) + "]");
    }
  }
}

double OpponentConfig::param(const std::string& key) const {
  if (auto it = params.find(key); it != params.end()) return it->second;
  for (const auto& s : param_specs(archetype)) {
    if (key == s.key) return s.default_value;
  }
  throw ConfigError("archetype " + std::string(to_string(archetype)) +
                    " has no parameter '" + key + "'");
}

void OpponentBeliefs::observe(const Offer& offer, double own_utility) {
  ++count_;
  const double delta = own_utility - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (own_utility - mean_);
  if (count_ == 1) {
    first_utility_ = own_utility;
    offer_sum_.assign(offer.size(), 0.0);
  }
  if (!best_offer_ || own_utility > best_utility_) {
    best_utility_ = own_utility;
    best_offer_ = offer;
  }
  last_offer_ = offer;
  last_utility_ = own_utility;
  for (std::size_t j = 0; j < offer.size(); ++j) offer_sum_[j] += offer[j];
}

double OpponentBeliefs::stddev() const {
  if (count_ < 2) return 0.0;
  return std::sqrt(std::max(0.0, m2_ / static_cast<double>(count_)));
}

Offer OpponentBeliefs::mean_offer() const {
  Offer mean;
  for (double s : offer_sum_) {
    mean.values.push_back(std::clamp(s / static_cast<double>(count_), 0.0, 1.0));
  }
  return mean;
}

SingleAgent::SingleAgent(PreferenceProfile profile, IsoSamplerConfig sampler,
                         std::uint64_t seed, std::string name)
    : profile_(std::move(profile)),
      sampler_(sampler),
      rng_(seed),
      name_(std::move(name)) {
  profile_.validate(profile_.size());
  sampler_.validate();
}

void SingleAgent::receive_offer(const Offer& offer, double /*t*/) {
  beliefs_.observe(offer, utility(profile_, offer));
}

Offer SingleAgent::propose_at(double target,
                              std::span<const Offer> references) {
  return sample_iso_offer(profile_, target, references, sampler_, rng_);
}

Action SingleAgent::propose_and_remember(Offer offer) {
  last_sent_ = offer;
  return Propose{std::move(offer)};
}

TimeTacticAgent::TimeTacticAgent(PreferenceProfile profile, TimeTactic tactic,
                                 IsoSamplerConfig sampler, std::uint64_t seed,
                                 bool reference_own_last)
    : SingleAgent(std::move(profile), sampler, seed, "time_tactic"),
      tactic_(tactic),
      reference_own_last_(reference_own_last) {
  tactic_.validate();
}

Action TimeTacticAgent::choose_action(double t) {
  const double s = target(t);
  if (has_offer() && beliefs_.last_utility() >= s) return Accept{};
  std::vector<Offer> refs;
  if (beliefs_.last_offer()) refs.push_back(*beliefs_.last_offer());
  if (reference_own_last_ && last_sent_) refs.push_back(*last_sent_);
  return propose_and_remember(propose_at(s, refs));
}

CrazyHaggler::CrazyHaggler(PreferenceProfile profile, double threshold,
                           IsoSamplerConfig sampler, std::uint64_t seed)
    : SingleAgent(std::move(profile), sampler, seed, "crazy_haggler"),
      threshold_(threshold) {}

Action CrazyHaggler::choose_action(double /*t*/) {
  if (has_offer() && beliefs_.last_utility() >= threshold_) return Accept{};
  std::vector<double> x(profile_.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    const double target = uniform(rng_, threshold_, 1.0);
    for (auto& v : x) v = uniform01(rng_);
    project_to_iso_utility(profile_, x, target);
    Offer offer{x};
    if (utility(profile_, offer) >= threshold_) return propose_and_remember(std::move(offer));
  }
  return propose_and_remember(ideal_offer(profile_));
}

AgentKLike::AgentKLike(PreferenceProfile profile, double gamma,
                       IsoSamplerConfig sampler, std::uint64_t seed)
    : SingleAgent(std::move(profile), sampler, seed, "agent_k_like"),
      gamma_(gamma) {}

double AgentKLike::target(double t) const {
  const double emax = has_offer()
                          ? std::clamp(beliefs_.mean() + beliefs_.stddev(), 0.0, 1.0)
                          : 0.0;
  return std::max(emax, 1.0 - (1.0 - emax) * std::pow(t, gamma_));
}

Action AgentKLike::choose_action(double t) {
  const double goal = target(t);
  if (has_offer() && beliefs_.last_utility() >= goal) return Accept{};
  if (has_offer() && beliefs_.best_utility() >= goal) {
    return propose_and_remember(*beliefs_.best_offer());
  }
  std::vector<Offer> refs;
  if (beliefs_.last_offer()) refs.push_back(*beliefs_.last_offer());
  return propose_and_remember(propose_at(goal, refs));
}

SmithLike::SmithLike(PreferenceProfile profile, double final_phase,
                     double floor, IsoSamplerConfig sampler, std::uint64_t seed)
    : SingleAgent(std::move(profile), sampler, seed, "smith_like"),
      final_phase_(final_phase),
      floor_(floor) {}

double SmithLike::target(double t) const {
  return 1.0 - (1.0 - floor_) * std::min(t, final_phase_);
}

Action SmithLike::choose_action(double t) {
  if (t >= final_phase_) {
    if (!has_offer()) return propose_and_remember(propose_at(target(t), {}));
    if (beliefs_.last_utility() >= beliefs_.best_utility()) return Accept{};
    return propose_and_remember(*beliefs_.best_offer());
  }
  const double goal = target(t);
  if (has_offer() && beliefs_.last_utility() >= goal) return Accept{};
  std::vector<Offer> refs;
  if (has_offer()) refs.push_back(beliefs_.mean_offer());
  return propose_and_remember(propose_at(goal, refs));
}

NiceTftLike::NiceTftLike(PreferenceProfile profile, double nash_floor,
                         double endgame, IsoSamplerConfig sampler,
                         std::uint64_t seed)
    : SingleAgent(std::move(profile), sampler, seed, "nice_tft_like"),
      nash_floor_(nash_floor),
      endgame_(endgame) {}

double NiceTftLike::relative_concession() const {
  if (!has_offer()) return 0.0;
  const double first = beliefs_.first_utility();
  const double r = (beliefs_.best_utility() - first) /
                   std::max(kRelativeConcessionEpsilon, 1.0 - first);
  return std::clamp(r, 0.0, 1.0);
}

double NiceTftLike::target() const {
  return 1.0 - relative_concession() * (1.0 - nash_floor_);
}

Action NiceTftLike::choose_action(double t) {
  const double goal = target();
  if (has_offer()) {
    if (beliefs_.last_utility() >= goal) return Accept{};
    if (t >= endgame_ && beliefs_.last_utility() >= beliefs_.best_utility()) {
      return Accept{};
    }
  }
  std::vector<Offer> refs;
  if (beliefs_.last_offer()) refs.push_back(*beliefs_.last_offer());
  return propose_and_remember(propose_at(goal, refs));
}

HagglerAdaptive::HagglerAdaptive(PreferenceProfile profile, double start,
                                 double slope, double spread,
                                 IsoSamplerConfig sampler, std::uint64_t seed)
    : SingleAgent(std::move(profile), sampler, seed, "haggler_adaptive"),
      start_(start),
      slope_(slope),
      spread_(spread) {}

double HagglerAdaptive::target(double t) const {
  const double observed =
      has_offer() ? beliefs_.mean() + spread_ * beliefs_.stddev() : 0.0;
  return std::max(start_ - slope_ * t, observed);
}

Action HagglerAdaptive::choose_action(double t) {
  const double goal = target(t);
  if (has_offer() && beliefs_.last_utility() >= goal) return Accept{};
  std::vector<Offer> refs;
  if (beliefs_.last_offer()) refs.push_back(*beliefs_.last_offer());
  return propose_and_remember(propose_at(std::min(goal, 1.0), refs));
}

std::unique_ptr<SingleAgent> make_opponent(const OpponentConfig& config,
                                           const PreferenceProfile& profile,
                                           const IsoSamplerConfig& sampler,
                                           std::uint64_t seed) {
  config.validate();
  switch (config.archetype) {
    case Archetype::kTimeTactic:
      return std::make_unique<TimeTacticAgent>(
          profile,
          TimeTactic{config.param("reservation_utility"), config.param("beta")},
          sampler, seed);
    case Archetype::kCrazyHaggler:
      return std::make_unique<CrazyHaggler>(profile, config.param("threshold"),
                                            sampler, seed);
    case Archetype::kHagglerAdaptive:
      return std::make_unique<HagglerAdaptive>(
          profile, config.param("start"), config.param("slope"),
          config.param("spread"), sampler, seed);
    case Archetype::kAgentKLike:
      return std::make_unique<AgentKLike>(profile, config.param("gamma"),
                                          sampler, seed);
    case Archetype::kSmithLike:
      return std::make_unique<SmithLike>(profile, config.param("final_phase"),
                                         config.param("floor"), sampler, seed);
    case Archetype::kNiceTftLike:
      return std::make_unique<NiceTftLike>(profile, config.param("nash_floor"),
                                           config.param("endgame"), sampler,
                                           seed);
  }
  throw ConfigError("unhandled archetype");
}

}  // namespace teamneg
