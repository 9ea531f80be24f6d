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

#ifndef TEAMNEG_OPPONENTS_HPP_
#define TEAMNEG_OPPONENTS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/random.hpp"
#include "teamneg/tactics.hpp"

namespace teamneg {

// Behavioural proxies for well-known competition agents. None of them models
// the other side's preferences; each keeps only the trait that puts it in its
// class (competitor, matcher or conceder).
enum class Archetype {
  kTimeTactic,
  kCrazyHaggler,
  kHagglerAdaptive,
  kAgentKLike,
  kSmithLike,
  kNiceTftLike,
};

std::string_view to_string(Archetype a);
Archetype parse_archetype(std::string_view text);

struct OpponentConfig {
  Archetype archetype = Archetype::kTimeTactic;
  // Archetype-specific numeric parameters; missing keys take defaults.
  std::map<std::string, double> params;

  // Throws ConfigError for unknown keys or out-of-range values.
  void validate() const;
  double param(const std::string& key) const;
  bool operator==(const OpponentConfig&) const = default;
};

// Running statistics over the utilities of received offers.
class OpponentBeliefs {
 public:
  void observe(const Offer& offer, double own_utility);

  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  // Population standard deviation; 0 with fewer than two observations.
  double stddev() const;
  double first_utility() const { return first_utility_; }
  double best_utility() const { return best_utility_; }
  const std::optional<Offer>& best_offer() const { return best_offer_; }
  const std::optional<Offer>& last_offer() const { return last_offer_; }
  double last_utility() const { return last_utility_; }
  // Element-wise mean of every received offer.
  Offer mean_offer() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double first_utility_ = 0.0;
  double best_utility_ = 0.0;
  double last_utility_ = 0.0;
  std::optional<Offer> best_offer_;
  std::optional<Offer> last_offer_;
  std::vector<double> offer_sum_;
};

// Shared plumbing for single-profile agents.
class SingleAgent : public Party {
 public:
  SingleAgent(PreferenceProfile profile, IsoSamplerConfig sampler,
              std::uint64_t seed, std::string name);

  void receive_offer(const Offer& offer, double t) override;
  std::size_t issue_count() const override { return profile_.size(); }
  std::string name() const override { return name_; }

  const PreferenceProfile& profile() const { return profile_; }
  const OpponentBeliefs& beliefs() const { return beliefs_; }

 protected:
  bool has_offer() const { return beliefs_.count() > 0; }
  Offer propose_at(double target, std::span<const Offer> references);
  Action propose_and_remember(Offer offer);

  PreferenceProfile profile_;
  IsoSamplerConfig sampler_;
  Rng rng_;
  OpponentBeliefs beliefs_;
  std::optional<Offer> last_sent_;

 private:
  std::string name_;
};

// Accepts when an offer meets s(t); otherwise proposes on the s(t)
// iso-surface nearest the last received offer (and, when
// `reference_own_last` is set, also the last offer it sent).
class TimeTacticAgent : public SingleAgent {
 public:
  TimeTacticAgent(PreferenceProfile profile, TimeTactic tactic,
                  IsoSamplerConfig sampler, std::uint64_t seed,
                  bool reference_own_last = false);

  Action choose_action(double t) override;
  double target(double t) const { return demand(tactic_, t); }

 private:
  TimeTactic tactic_;
  bool reference_own_last_;
};

// Take-it-or-leave-it: random offers above a fixed threshold, acceptance on
// that threshold alone, no dependence on time.
class CrazyHaggler : public SingleAgent {
 public:
  CrazyHaggler(PreferenceProfile profile, double threshold,
               IsoSamplerConfig sampler, std::uint64_t seed);

  Action choose_action(double t) override;
  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

// Target derived from the mean and spread of the other side's offers:
//   emax = clamp(mu + sigma, 0, 1)
//   target(t) = max(emax, 1 - (1 - emax) t^gamma)
// Sends back the best received offer once it clears the target.
class AgentKLike : public SingleAgent {
 public:
  AgentKLike(PreferenceProfile profile, double gamma, IsoSamplerConfig sampler,
             std::uint64_t seed);

  Action choose_action(double t) override;
  double target(double t) const;

 private:
  double gamma_;
};

// Linear concession toward `floor` until `final_phase`, proposing near the
// mean of received offers; afterwards it re-proposes the best offer received
// and accepts anything at least that good.
class SmithLike : public SingleAgent {
 public:
  SmithLike(PreferenceProfile profile, double final_phase, double floor,
            IsoSamplerConfig sampler, std::uint64_t seed);

  Action choose_action(double t) override;
  double target(double t) const;
  double final_phase() const { return final_phase_; }

 private:
  double final_phase_;
  double floor_;
};

// Reciprocates the other side's relative concession
//   r = (U_best - U_first) / max(eps, 1 - U_first)
// with target 1 - r (1 - nash_floor). From `endgame` on it accepts any offer
// that is the best received so far.
class NiceTftLike : public SingleAgent {
 public:
  NiceTftLike(PreferenceProfile profile, double nash_floor, double endgame,
              IsoSamplerConfig sampler, std::uint64_t seed);

  Action choose_action(double t) override;
  double relative_concession() const;
  double target() const;

 private:
  double nash_floor_;
  double endgame_;
};

// Competitive adaptive threshold: max(start - slope t, mu + spread sigma).
class HagglerAdaptive : public SingleAgent {
 public:
  HagglerAdaptive(PreferenceProfile profile, double start, double slope,
                  double spread, IsoSamplerConfig sampler, std::uint64_t seed);

  Action choose_action(double t) override;
  double target(double t) const;

 private:
  double start_;
  double slope_;
  double spread_;
};

std::unique_ptr<SingleAgent> make_opponent(const OpponentConfig& config,
                                           const PreferenceProfile& profile,
                                           const IsoSamplerConfig& sampler,
                                           std::uint64_t seed);

}  // namespace teamneg

#endif  // TEAMNEG_OPPONENTS_HPP_
