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

#include "teamneg/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cctype>
#include <exception>
#include <string>
#include <thread>

#include "teamneg/error.hpp"
#include "teamneg/random.hpp"
#include "teamneg/serialization.hpp"

namespace teamneg {

namespace {

constexpr std::uint64_t kTeamStream = 1;
constexpr std::uint64_t kOpponentStream = 2;
constexpr std::uint64_t kBetaStream = 3;

std::string sanitize(std::string_view label) {
  std::string out;
  for (char c : label) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out;
}

}  // namespace

void BetaRange::validate() const {
  if (!(low > 0.0) || !(high >= low) || !std::isfinite(high)) {
    throw ConfigError("beta range [" + std::to_string(low) + ", " +
                      std::to_string(high) + "] must satisfy 0 < low <= high");
  }
}

void TournamentConfig::validate() const {
  scenario.validate();
  sampler.validate();
  if (teams.empty()) throw ConfigError("tournament has no team configurations");
  if (opponents.empty()) throw ConfigError("tournament has no opponents");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
  std::vector<std::string> seen;
  for (const auto& t : teams) {
    if (t.label.empty()) throw ConfigError("team configuration without a label");
    if (std::find(seen.begin(), seen.end(), t.label) != seen.end()) {
      throw ConfigError("duplicate team label '" + t.label + "'");
    }
    seen.push_back(t.label);
    t.beta_range.validate();
    if (!t.members.empty() && t.members.size() != scenario.team.size()) {
      throw ConfigError("team '" + t.label + "' lists " +
                        std::to_string(t.members.size()) + " members, scenario has " +
                        std::to_string(scenario.team.size()));
    }
    for (const auto& m : t.members) {
      if (m.beta_range) m.beta_range->validate();
      if (m.beta && !(*m.beta > 0.0)) throw ConfigError("member beta must be positive");
    }
  }
  seen.clear();
  for (const auto& o : opponents) {
    if (o.label.empty()) throw ConfigError("opponent without a label");
    if (std::find(seen.begin(), seen.end(), o.label) != seen.end()) {
      throw ConfigError("duplicate opponent label '" + o.label + "'");
    }
    seen.push_back(o.label);
    o.config.validate();
  }
}

std::uint64_t session_seed(std::uint64_t master_seed, std::string_view team_label,
                           std::string_view opponent_label, int repetition) {
  std::uint64_t h = stable_hash(team_label);
  h = stable_hash("\x1f", h);
  h = stable_hash(opponent_label, h);
  return derive_seed(master_seed ^ h, static_cast<std::uint64_t>(repetition));
}

std::uint64_t team_seed(const SessionConfig& session) {
  return derive_seed(session.seed, kTeamStream);
}

std::uint64_t opponent_seed(const SessionConfig& session) {
  return derive_seed(session.seed, kOpponentStream);
}

SessionSpec plan_session(const TournamentConfig& config, std::size_t team_index,
                         std::size_t opponent_index, int repetition) {
  const TeamSpec& team = config.teams.at(team_index);
  const OpponentSpec& opponent = config.opponents.at(opponent_index);

  SessionSpec spec;
  spec.scenario = config.scenario;
  spec.team = team;
  spec.opponent = opponent;
  spec.sampler = config.sampler;
  spec.repetition = repetition;
  spec.session.max_rounds = config.max_rounds;
  spec.session.initiator = repetition % 2 == 0 ? PartyRole::kTeam : PartyRole::kOpponent;
  spec.session.seed =
      session_seed(config.master_seed, team.label, opponent.label, repetition);

  Rng beta_rng(derive_seed(spec.session.seed, kBetaStream));
  for (std::size_t i = 0; i < config.scenario.team.size(); ++i) {
    const MemberSpec member = team.members.empty() ? MemberSpec{} : team.members[i];
    const BetaRange range = member.beta_range.value_or(team.beta_range);
    // Drawn even when a fixed beta overrides it.
    const double drawn = uniform(beta_rng, range.low, range.high);
    spec.betas.push_back(member.beta.value_or(drawn));
    spec.reservation_utilities.push_back(
        member.reservation_utility.value_or(team.reservation_utility));
  }
  return spec;
}

TeamConfig make_team_config(const SessionSpec& spec) {
  if (spec.betas.size() != spec.scenario.team.size() ||
      spec.reservation_utilities.size() != spec.scenario.team.size()) {
    throw ConfigError("session needs one beta and reservation utility per member");
  }
  TeamConfig config;
  config.strategy = spec.team.strategy;
  config.agenda_observation_rounds = spec.team.agenda_observation_rounds;
  config.representative = spec.team.representative;
  config.agent_k_gamma = spec.team.agent_k_gamma;
  for (std::size_t i = 0; i < spec.scenario.team.size(); ++i) {
    config.members.push_back(TeamMember{
        spec.scenario.team[i],
        TimeTactic{spec.reservation_utilities[i], spec.betas[i]},
        spec.sampler});
  }
  return config;
}

SessionRun execute_session(const SessionSpec& spec) {
  spec.scenario.validate();
  NegotiationTeam team(make_team_config(spec), team_seed(spec.session));
  auto opponent = make_opponent(spec.opponent.config, spec.scenario.opponent,
                                spec.sampler, opponent_seed(spec.session));
  SessionRun run;
  run.transcript = run_session(team, *opponent, spec.session);
  run.scores = score(run.transcript.outcome, spec.scenario.team, spec.scenario.opponent);
  return run;
}

SessionRecord make_record(const SessionSpec& spec, const SessionRun& run) {
  SessionRecord r;
  r.team = spec.team.label;
  r.opponent = spec.opponent.label;
  r.repetition = spec.repetition;
  r.seed = spec.session.seed;
  r.initiator = spec.session.initiator;
  r.outcome = run.transcript.outcome.kind;
  r.rounds = run.transcript.outcome.round;
  r.time = run.transcript.outcome.time;
  r.member_utilities = run.scores.team;
  r.opponent_utility = run.scores.opponent;
  r.team_average = run.scores.team_average();
  r.team_min = run.scores.team_min();
  r.team_max = run.scores.team_max();
  r.joint = run.scores.joint;
  r.betas = spec.betas;
  return r;
}

std::string transcript_file_name(const SessionSpec& spec) {
  return sanitize(spec.team.label) + "__" + sanitize(spec.opponent.label) + "__r" +
         std::to_string(spec.repetition) + ".json";
}

std::vector<SessionRecord> run_tournament(const TournamentConfig& config,
                                          const RunOptions& options) {
  config.validate();
  struct Slot {
    std::size_t team;
    std::size_t opponent;
    int repetition;
  };
  std::vector<Slot> slots;
  for (std::size_t t = 0; t < config.teams.size(); ++t) {
    for (std::size_t o = 0; o < config.opponents.size(); ++o) {
      for (int r = 0; r < config.repetitions; ++r) slots.push_back({t, o, r});
    }
  }
  if (options.transcript_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.transcript_dir, ec);
    if (ec) {
      throw IoError("cannot create " + options.transcript_dir->string() + ": " +
                    ec.message());
    }
  }

  std::vector<SessionRecord> records(slots.size());
  std::vector<std::exception_ptr> errors(slots.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < slots.size(); i = next++) {
      const Slot& slot = slots[i];
      try {
        const SessionSpec spec =
            plan_session(config, slot.team, slot.opponent, slot.repetition);
        SessionRun run;
        try {
          run = execute_session(spec);
        } catch (const ProtocolViolation& e) {
          throw ProtocolViolation(
              e.party(), "pairing '" + spec.team.label + "' vs '" +
                             spec.opponent.label + "' repetition " +
                             std::to_string(spec.repetition) + ": " + e.what());
        }
        records[i] = make_record(spec, run);
        if (options.transcript_dir) {
          write_text_file(*options.transcript_dir / transcript_file_name(spec),
                          transcript_to_json(run.transcript, run.scores, &spec).dump(1) +
                              "\n");
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(slots.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

TournamentConfig desk_tournament_config(std::uint64_t master_seed,
                                        BetaRange very_boulware) {
  const BetaRange boulware{0.5, 0.99};
  TournamentConfig c;
  c.scenario = hotel_booking_scenario();
  c.master_seed = master_seed;
  c.repetitions = 10;
  c.max_rounds = 1000;

  auto team = [](std::string label, TeamStrategy s, BetaRange range) {
    TeamSpec t;
    t.label = std::move(label);
    t.strategy = s;
    t.beta_range = range;
    return t;
  };
  c.teams.push_back(team("FUM B", TeamStrategy::kFullUnanimityMediated, boulware));
  c.teams.push_back(team("FUM VB", TeamStrategy::kFullUnanimityMediated, very_boulware));
  TeamSpec re = team("RE K", TeamStrategy::kRepresentative, boulware);
  re.representative = RepresentativeKind::kAgentKLike;
  c.teams.push_back(re);
  c.teams.push_back(team("SSV B", TeamStrategy::kSimilaritySimpleVoting, boulware));
  c.teams.push_back(team("SSV VB", TeamStrategy::kSimilaritySimpleVoting, very_boulware));
  c.teams.push_back(team("SBV B", TeamStrategy::kSimilarityBordaVoting, boulware));
  c.teams.push_back(team("SBV VB", TeamStrategy::kSimilarityBordaVoting, very_boulware));

  c.opponents = {
      {"Crazy", {Archetype::kCrazyHaggler, {}}},
      {"Haggler", {Archetype::kHagglerAdaptive, {}}},
      {"K", {Archetype::kAgentKLike, {}}},
      {"TFT", {Archetype::kNiceTftLike, {}}},
      {"Smith", {Archetype::kSmithLike, {}}},
  };
  return c;
}

}  // namespace teamneg
