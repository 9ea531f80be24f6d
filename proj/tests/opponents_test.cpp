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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "teamneg/error.hpp"
#include "teamneg/team.hpp"
#include "test_util.hpp"

namespace teamneg {
namespace {

using enum Direction;

// Utility of (u, *) is exactly u.
const PreferenceProfile kFirstIssue{"first", {1.0, 0.0}, {kIncreasing, kIncreasing}, 0.0};

Offer worth(double u) { return Offer{{u, 0.5}}; }

const Offer& proposed(const Action& a) { return std::get<Propose>(a).offer; }

TEST(TimeTacticAgent, AcceptsAnythingAtDeadlineWithZeroReservation) {
  TimeTacticAgent agent(kFirstIssue, TimeTactic{0.0, 1.0}, {}, 1);
  agent.receive_offer(worth(0.0), 0.99);
  EXPECT_TRUE(std::holds_alternative<Accept>(agent.choose_action(1.0)));
}

TEST(TimeTacticAgent, OpensWithIdealOffer) {
  const auto s = hotel_booking_scenario();
  TimeTacticAgent agent(s.opponent, TimeTactic{0.0, 0.5}, {}, 1);
  EXPECT_EQ(proposed(agent.choose_action(0.0)), ideal_offer(s.opponent));
}

TEST(TimeTacticAgent, ProposesOnDemandCurve) {
  const auto s = hotel_booking_scenario();
  const TimeTactic tactic{0.1, 0.8};
  TimeTacticAgent agent(s.opponent, tactic, {}, 2);
  agent.receive_offer(worst_offer(s.opponent), 0.3);
  const auto a = agent.choose_action(0.3);
  EXPECT_NEAR(utility(s.opponent, proposed(a)), demand(tactic, 0.3), 1e-6);
}

TEST(CrazyHaggler, EveryProposalAboveThreshold) {
  const auto s = hotel_booking_scenario();
  CrazyHaggler agent(s.opponent, 0.9, {}, 3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = agent.choose_action(i / 1000.0);
    ASSERT_TRUE(std::holds_alternative<Propose>(a));
    EXPECT_GE(utility(s.opponent, proposed(a)), 0.9);
  }
}

TEST(CrazyHaggler, PureThresholdAcceptance) {
  CrazyHaggler agent(kFirstIssue, 0.9, {}, 4);
  agent.receive_offer(worth(0.95), 0.99);
  EXPECT_TRUE(std::holds_alternative<Accept>(agent.choose_action(0.99)));
  CrazyHaggler other(kFirstIssue, 0.9, {}, 4);
  other.receive_offer(worth(0.89), 0.99);
  EXPECT_TRUE(std::holds_alternative<Propose>(other.choose_action(0.99)));
}

TEST(CrazyHaggler, IgnoresTime) {
  const auto s = hotel_booking_scenario();
  CrazyHaggler early(s.opponent, 0.9, {}, 5);
  CrazyHaggler late(s.opponent, 0.9, {}, 5);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(early.choose_action(0.1), late.choose_action(0.9));
  }
}

TEST(AgentKLike, OpensAtFullTarget) {
  const auto s = hotel_booking_scenario();
  AgentKLike agent(s.opponent, 3.0, {}, 6);
  EXPECT_DOUBLE_EQ(agent.target(0.0), 1.0);
  EXPECT_EQ(proposed(agent.choose_action(0.0)), ideal_offer(s.opponent));
}

TEST(AgentKLike, SendsBackBestOfferOnceTargetFalls) {
  AgentKLike agent(kFirstIssue, 3.0, {}, 7);
  for (double u : {0.8, 0.2, 0.2, 0.2}) agent.receive_offer(worth(u), 0.1);
  // mean 0.35, population sd sqrt(0.0675): emax ~ 0.6098
  const double emax = 0.35 + std::sqrt(0.0675);
  const double t = std::cbrt(0.25 / (1.0 - emax));
  EXPECT_NEAR(agent.target(t), 0.75, 1e-12);
  EXPECT_EQ(proposed(agent.choose_action(t)), worth(0.8));
}

TEST(AgentKLike, TargetNonIncreasingWithFrozenBeliefs) {
  AgentKLike agent(kFirstIssue, 3.0, {}, 8);
  for (double u : {0.1, 0.4, 0.3}) agent.receive_offer(worth(u), 0.1);
  double previous = 1.0;
  for (int k = 0; k <= 100; ++k) {
    const double target = agent.target(k / 100.0);
    EXPECT_LE(target, previous + 1e-15);
    previous = target;
  }
}

TEST(AgentKLike, NeverProposesBelowTarget) {
  const auto s = hotel_booking_scenario();
  Rng rng(9);
  AgentKLike agent(s.opponent, 3.0, {}, 9);
  for (int k = 0; k < 300; ++k) {
    const double t = k / 300.0;
    agent.receive_offer(testing::random_offer(rng, 4), t);
    const double target = agent.target(t);
    const auto a = agent.choose_action(t);
    if (const auto* p = std::get_if<Propose>(&a)) {
      EXPECT_GE(utility(s.opponent, p->offer), target - IsoSamplerConfig{}.utility_tolerance);
    } else {
      EXPECT_GE(agent.beliefs().last_utility(), target);
    }
  }
}

TEST(SmithLike, ConcedesUntilFinalPhase) {
  SmithLike agent(kFirstIssue, 2.0 / 3.0, 0.5, {}, 10);
  EXPECT_DOUBLE_EQ(agent.target(0.0), 1.0);
  double previous = 2.0;
  for (int k = 0; k < 66; ++k) {
    const double target = agent.target(k / 100.0);
    EXPECT_LT(target, previous);
    previous = target;
  }
}

TEST(SmithLike, FinalPhaseMatchesBestReceived) {
  SmithLike agent(kFirstIssue, 2.0 / 3.0, 0.5, {}, 11);
  agent.receive_offer(worth(0.4), 0.5);
  agent.receive_offer(worth(0.3), 0.6);
  const auto a = agent.choose_action(0.7);
  EXPECT_EQ(proposed(a), worth(0.4));
  agent.receive_offer(worth(0.4), 0.7);
  EXPECT_TRUE(std::holds_alternative<Accept>(agent.choose_action(0.71)));
}

TEST(SmithLike, EarlyPhaseAcceptsAtTarget) {
  SmithLike agent(kFirstIssue, 2.0 / 3.0, 0.5, {}, 12);
  agent.receive_offer(worth(0.8), 0.4);
  EXPECT_TRUE(std::holds_alternative<Accept>(agent.choose_action(0.4)));  // target 0.8
  SmithLike picky(kFirstIssue, 2.0 / 3.0, 0.5, {}, 12);
  picky.receive_offer(worth(0.79), 0.4);
  EXPECT_TRUE(std::holds_alternative<Propose>(picky.choose_action(0.4)));
}

TEST(NiceTftLike, StonewallingOpponentGetsNothing) {
  NiceTftLike agent(kFirstIssue, 0.5, 0.95, {}, 13);
  for (int k = 0; k < 94; ++k) {
    agent.receive_offer(worth(0.2), k / 100.0);
    EXPECT_DOUBLE_EQ(agent.target(), 1.0);
    EXPECT_TRUE(std::holds_alternative<Propose>(agent.choose_action(k / 100.0)));
  }
  // End game: the best offer so far is taken.
  agent.receive_offer(worth(0.2), 0.96);
  EXPECT_TRUE(std::holds_alternative<Accept>(agent.choose_action(0.96)));
}

TEST(NiceTftLike, FullReciprocationReachesFloor) {
  NiceTftLike agent(kFirstIssue, 0.5, 0.95, {}, 14);
  agent.receive_offer(worth(0.0), 0.1);
  agent.receive_offer(worth(1.0), 0.2);
  EXPECT_DOUBLE_EQ(agent.relative_concession(), 1.0);
  EXPECT_DOUBLE_EQ(agent.target(), 0.5);
}

TEST(NiceTftLike, MonotoneConcessionGivesMonotoneTargets) {
  NiceTftLike agent(kFirstIssue, 0.5, 0.95, {}, 15);
  double previous = 1.0;
  for (int k = 0; k <= 20; ++k) {
    agent.receive_offer(worth(0.1 + 0.03 * k), k / 100.0);
    EXPECT_LE(agent.target(), previous + 1e-15);
    previous = agent.target();
  }
  EXPECT_NEAR(agent.relative_concession(), 0.6 / 0.9, 1e-12);
}

TEST(HagglerAdaptive, StartsAtDefault) {
  HagglerAdaptive agent(kFirstIssue, 0.85, 0.25, 2.0, {}, 16);
  EXPECT_DOUBLE_EQ(agent.target(0.0), 0.85);
}

TEST(HagglerAdaptive, TargetAboveObservedSpread) {
  Rng rng(17);
  HagglerAdaptive agent(kFirstIssue, 0.85, 0.25, 2.0, {}, 17);
  std::vector<double> seen;
  for (int k = 0; k < 100; ++k) {
    const double u = uniform01(rng);
    seen.push_back(u);
    agent.receive_offer(worth(u), k / 100.0);
    double mean = 0.0;
    for (double v : seen) mean += v;
    mean /= static_cast<double>(seen.size());
    double ss = 0.0;
    for (double v : seen) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(seen.size()));
    EXPECT_GE(agent.target(k / 100.0), mean + 2.0 * sd - 1e-12);
  }
}

TEST(HagglerAdaptive, NeverAcceptsBelowFloorBeforeDeadline) {
  Rng rng(18);
  for (int k = 0; k < 1000; ++k) {
    HagglerAdaptive agent(kFirstIssue, 0.85, 0.25, 2.0, {}, 18);
    const double u = uniform(rng, 0.0, 0.6);
    const double t = uniform(rng, 0.0, 0.9999);
    agent.receive_offer(worth(u), t);
    EXPECT_TRUE(std::holds_alternative<Propose>(agent.choose_action(t)));
  }
}

TEST(Beliefs, WelfordMatchesTwoPass) {
  Rng rng(19);
  OpponentBeliefs b;
  std::vector<double> seen;
  double best = -1.0;
  for (int k = 0; k < 500; ++k) {
    const double u = uniform01(rng);
    seen.push_back(u);
    b.observe(worth(u), u);
    EXPECT_GE(b.best_utility(), best);
    best = b.best_utility();
  }
  double mean = 0.0;
  for (double v : seen) mean += v;
  mean /= static_cast<double>(seen.size());
  double ss = 0.0;
  for (double v : seen) ss += (v - mean) * (v - mean);
  EXPECT_NEAR(b.mean(), mean, 1e-12);
  EXPECT_NEAR(b.stddev(), std::sqrt(ss / static_cast<double>(seen.size())), 1e-12);
  EXPECT_EQ(b.first_utility(), seen.front());
  EXPECT_EQ(b.count(), seen.size());
  EXPECT_GE(b.best_utility(), b.first_utility());
}

TEST(OpponentConfig, Validation) {
  OpponentConfig c{Archetype::kCrazyHaggler, {{"threshold", 0.95}}};
  EXPECT_NO_THROW(c.validate());
  EXPECT_DOUBLE_EQ(c.param("threshold"), 0.95);
  c.params["threshold"] = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c.params = {{"gamma", 3.0}};
  EXPECT_THROW(c.validate(), ConfigError);
  const OpponentConfig k{Archetype::kAgentKLike, {}};
  EXPECT_DOUBLE_EQ(k.param("gamma"), 3.0);
  const OpponentConfig smith{Archetype::kSmithLike, {}};
  EXPECT_DOUBLE_EQ(smith.param("final_phase"), 2.0 / 3.0);
}

TEST(Archetype, NamesRoundTrip) {
  for (auto a : {Archetype::kTimeTactic, Archetype::kCrazyHaggler, Archetype::kHagglerAdaptive,
                 Archetype::kAgentKLike, Archetype::kSmithLike, Archetype::kNiceTftLike}) {
    EXPECT_EQ(parse_archetype(to_string(a)), a);
  }
  EXPECT_THROW(parse_archetype("inverter"), ConfigError);
}

TEST(Opponents, DeterministicUnderSeed) {
  const auto s = hotel_booking_scenario();
  for (auto a : {Archetype::kTimeTactic, Archetype::kCrazyHaggler, Archetype::kHagglerAdaptive,
                 Archetype::kAgentKLike, Archetype::kSmithLike, Archetype::kNiceTftLike}) {
    auto x = make_opponent({a, {}}, s.opponent, {}, 99);
    auto y = make_opponent({a, {}}, s.opponent, {}, 99);
    Rng rng(20);
    for (int k = 0; k < 60; ++k) {
      const double t = k / 60.0;
      const Offer o = testing::random_offer(rng, 4);
      x->receive_offer(o, t);
      y->receive_offer(o, t);
      ASSERT_EQ(x->choose_action(t), y->choose_action(t)) << to_string(a);
    }
  }
}

TEST(CrazyHaggler, AgreementsHonourThreshold) {
  const auto s = hotel_booking_scenario();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TeamConfig config;
    config.strategy = TeamStrategy::kSimilarityBordaVoting;
    for (const auto& p : s.team) config.members.push_back({p, TimeTactic{0.0, 0.8}, {}});
    NegotiationTeam team(config, seed);
    CrazyHaggler crazy(s.opponent, 0.9, {}, seed);
    const auto tr = run_session(team, crazy, {300, PartyRole::kTeam, seed});
    if (tr.outcome.is_agreement()) {
      EXPECT_GE(utility(s.opponent, *tr.outcome.agreement), 0.9);
    }
  }
}

}  // namespace
}  // namespace teamneg
