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

#ifndef TEAMNEG_TOURNAMENT_HPP_
#define TEAMNEG_TOURNAMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/opponents.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/tactics.hpp"
#include "teamneg/team.hpp"

namespace teamneg {

// Closed interval for uniformly drawn concession speeds.
struct BetaRange {
  double low = 0.5;
  double high = 0.99;

  void validate() const;
  bool operator==(const BetaRange&) const = default;
};

// Per-member override: a fixed beta or a private range, and/or a reservation
// utility.
struct MemberSpec {
  std::optional<double> beta;
  std::optional<BetaRange> beta_range;
  std::optional<double> reservation_utility;

  bool operator==(const MemberSpec&) const = default;
};

struct TeamSpec {
  std::string label;
  TeamStrategy strategy = TeamStrategy::kFullUnanimityMediated;
  BetaRange beta_range;
  double reservation_utility = 0.0;
  // Empty, or one entry per scenario team profile.
  std::vector<MemberSpec> members;
  int agenda_observation_rounds = 5;
  RepresentativeKind representative = RepresentativeKind::kTimeTactic;
  double agent_k_gamma = 3.0;

  bool operator==(const TeamSpec&) const = default;
};

struct OpponentSpec {
  std::string label;
  OpponentConfig config;

  bool operator==(const OpponentSpec&) const = default;
};

struct TournamentConfig {
  Scenario scenario;
  std::vector<TeamSpec> teams;
  std::vector<OpponentSpec> opponents;
  int repetitions = 10;
  int max_rounds = 1000;
  std::uint64_t master_seed = 0;
  IsoSamplerConfig sampler;

  void validate() const;
};

// Everything needed to run (or re-run) one session.
struct SessionSpec {
  Scenario scenario;
  TeamSpec team;
  std::vector<double> betas;
  std::vector<double> reservation_utilities;
  OpponentSpec opponent;
  IsoSamplerConfig sampler;
  SessionConfig session;
  int repetition = 0;

  bool operator==(const SessionSpec&) const = default;
};

// Per-session seed from the master seed, both labels and the repetition.
std::uint64_t session_seed(std::uint64_t master_seed, std::string_view team_label,
                           std::string_view opponent_label, int repetition);

std::uint64_t team_seed(const SessionConfig& session);
std::uint64_t opponent_seed(const SessionConfig& session);

// Draws member betas and fixes the initiator: even repetitions let the team
// open, odd ones the opponent.
SessionSpec plan_session(const TournamentConfig& config, std::size_t team_index,
                         std::size_t opponent_index, int repetition);

TeamConfig make_team_config(const SessionSpec& spec);

struct SessionRun {
  Transcript transcript;
  Scores scores;
};

SessionRun execute_session(const SessionSpec& spec);

struct SessionRecord {
  std::string team;
  std::string opponent;
  int repetition = 0;
  std::uint64_t seed = 0;
  PartyRole initiator = PartyRole::kTeam;
  OutcomeKind outcome = OutcomeKind::kDeadline;
  int rounds = 0;
  double time = 0.0;
  std::vector<double> member_utilities;
  double opponent_utility = 0.0;
  double team_average = 0.0;
  double team_min = 0.0;
  double team_max = 0.0;
  double joint = 0.0;
  std::vector<double> betas;

  bool agreement() const { return outcome == OutcomeKind::kAgreement; }
  bool operator==(const SessionRecord&) const = default;
};

SessionRecord make_record(const SessionSpec& spec, const SessionRun& run);

struct RunOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // When set, one JSON transcript per session is written here.
  std::optional<std::filesystem::path> transcript_dir;
};

// Every (team, opponent, repetition) triple, returned in that canonical
// order regardless of how sessions were scheduled. Protocol violations are
// rethrown with the pairing named.
std::vector<SessionRecord> run_tournament(const TournamentConfig& config,
                                          const RunOptions& options = {});

std::string transcript_file_name(const SessionSpec& spec);

// Seven team configurations (FUM, SSV and SBV at Boulware and very Boulware
// speeds, plus an Agent K representative) against the five opponent proxies on
// the hotel booking scenario.
TournamentConfig desk_tournament_config(std::uint64_t master_seed = 2013,
                                        BetaRange very_boulware = {0.01, 0.4});

}  // namespace teamneg

#endif  // TEAMNEG_TOURNAMENT_HPP_
