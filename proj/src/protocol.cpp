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

#include "teamneg/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace teamneg {

std::string_view to_string(PartyRole role) {
  return role == PartyRole::kTeam ? "team" : "opponent";
}

PartyRole parse_party_role(std::string_view text) {
  if (text == "team") return PartyRole::kTeam;
  if (text == "opponent") return PartyRole::kOpponent;
  throw ParseError("unknown party role '" + std::string(text) + "'");
}

std::string_view action_name(const Action& action) {
  switch (action.index()) {
    case 0: return "propose";
    case 1: return "accept";
    default: return "end";
  }
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kAgreement: return "agreement";
    case OutcomeKind::kDeadline: return "deadline";
    case OutcomeKind::kEndedByParty: return "ended";
  }
  return "deadline";
}

OutcomeKind parse_outcome_kind(std::string_view text) {
  if (text == "agreement") return OutcomeKind::kAgreement;
  if (text == "deadline") return OutcomeKind::kDeadline;
  if (text == "ended") return OutcomeKind::kEndedByParty;
  throw ParseError("unknown outcome kind '" + std::string(text) + "'");
}

void SessionConfig::validate() const {
  if (max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
}

Transcript run_session(Party& team, Party& opponent,
                       const SessionConfig& config) {
  config.validate();
  if (team.issue_count() != opponent.issue_count()) {
    throw InvalidArgument("parties are configured for different domains");
  }
  const std::size_t issues = team.issue_count();

  Transcript transcript;
  transcript.config = config;
  std::optional<Offer> standing;

  for (int ply = 0;; ++ply) {
    const int round = (ply + 1) / 2;
    const double t = static_cast<double>(round) / config.max_rounds;
    if (round >= config.max_rounds) {
      transcript.outcome = Outcome{OutcomeKind::kDeadline, std::nullopt, round,
                                   std::min(t, 1.0), std::nullopt};
      break;
    }
    const PartyRole actor = ply % 2 == 0 ? config.initiator : other(config.initiator);
    Party& self = actor == PartyRole::kTeam ? team : opponent;
    Party& peer = actor == PartyRole::kTeam ? opponent : team;

    Action action = self.choose_action(t);
    if (auto* p = std::get_if<Propose>(&action)) {
      try {
        validate_offer(p->offer, issues);
      } catch (const InvalidArgument& e) {
        throw ProtocolViolation(actor, std::string(to_string(actor)) + " party '" +
                                           self.name() +
                                           "' proposed an invalid offer: " + e.what());
      }
      standing = p->offer;
      transcript.entries.push_back({round, t, actor, action});
      peer.receive_offer(standing.value(), t);
      continue;
    }
    if (std::holds_alternative<Accept>(action)) {
      if (!standing) {
        throw ProtocolViolation(actor, std::string(to_string(actor)) + " party '" +
                                           self.name() +
                                           "' accepted with no standing offer");
      }
      transcript.entries.push_back({round, t, actor, action});
      transcript.outcome =
          Outcome{OutcomeKind::kAgreement, standing, round, t, actor};
      break;
    }
    transcript.entries.push_back({round, t, actor, action});
    transcript.outcome =
        Outcome{OutcomeKind::kEndedByParty, std::nullopt, round, t, actor};
    break;
  }
  return transcript;
}

double Scores::team_average() const {
  if (team.empty()) return 0.0;
  return std::accumulate(team.begin(), team.end(), 0.0) /
         static_cast<double>(team.size());
}

double Scores::team_min() const {
  return team.empty() ? 0.0 : *std::min_element(team.begin(), team.end());
}

double Scores::team_max() const {
  return team.empty() ? 0.0 : *std::max_element(team.begin(), team.end());
}

double joint_utility(std::span<const double> team, double opponent) {
  double product = 1.0;
  for (double u : team) product *= u;
  return product * opponent;
}

Scores score(const Outcome& outcome, std::span<const PreferenceProfile> team,
             const PreferenceProfile& opponent) {
  Scores s;
  s.team.assign(team.size(), 0.0);
  if (!outcome.is_agreement() || !outcome.agreement) return s;
  for (std::size_t i = 0; i < team.size(); ++i) {
    s.team[i] = utility(team[i], *outcome.agreement);
  }
  s.opponent = utility(opponent, *outcome.agreement);
  s.joint = joint_utility(s.team, s.opponent);
  return s;
}

}  // namespace teamneg
