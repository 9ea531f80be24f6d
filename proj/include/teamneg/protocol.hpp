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

#ifndef TEAMNEG_PROTOCOL_HPP_
#define TEAMNEG_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/error.hpp"

namespace teamneg {

enum class PartyRole { kTeam, kOpponent };

std::string_view to_string(PartyRole role);
PartyRole parse_party_role(std::string_view text);
inline PartyRole other(PartyRole r) {
  return r == PartyRole::kTeam ? PartyRole::kOpponent : PartyRole::kTeam;
}

struct Propose {
  Offer offer;
  bool operator==(const Propose&) const = default;
};
struct Accept {
  bool operator==(const Accept&) const = default;
};
struct EndNegotiation {
  bool operator==(const EndNegotiation&) const = default;
};

using Action = std::variant<Propose, Accept, EndNegotiation>;

std::string_view action_name(const Action& action);

// One side of a bilateral alternating-offers session. Implementations must be
// deterministic given their seed and the offers they have observed.
class Party {
 public:
  virtual ~Party() = default;

  // The other side proposed `offer` at normalized time `t`.
  virtual void receive_offer(const Offer& offer, double t) = 0;
  virtual Action choose_action(double t) = 0;
  virtual std::size_t issue_count() const = 0;
  virtual std::string name() const = 0;
};

class ProtocolViolation : public Error {
 public:
  ProtocolViolation(PartyRole party, const std::string& what)
      : Error(ErrorCode::kProtocolViolation, what), party_(party) {}

  PartyRole party() const noexcept { return party_; }

 private:
  PartyRole party_;
};

struct SessionConfig {
  int max_rounds = 1000;
  PartyRole initiator = PartyRole::kTeam;
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const SessionConfig&) const = default;
};

struct TranscriptEntry {
  int round = 0;
  double time = 0.0;
  PartyRole actor = PartyRole::kTeam;
  Action action;

  bool operator==(const TranscriptEntry&) const = default;
};

enum class OutcomeKind { kAgreement, kDeadline, kEndedByParty };

std::string_view to_string(OutcomeKind kind);
OutcomeKind parse_outcome_kind(std::string_view text);

struct Outcome {
  OutcomeKind kind = OutcomeKind::kDeadline;
  std::optional<Offer> agreement;
  int round = 0;
  double time = 0.0;
  // Who accepted or walked away; empty on deadline expiry.
  std::optional<PartyRole> decided_by;

  bool is_agreement() const { return kind == OutcomeKind::kAgreement; }
  bool operator==(const Outcome&) const = default;
};

struct Transcript {
  SessionConfig config;
  std::vector<TranscriptEntry> entries;
  Outcome outcome;

  bool operator==(const Transcript&) const = default;
};

// Runs one alternating-offers session.
//
// Actions are numbered by ply k = 0, 1, 2, ... and belong to round (k + 1) / 2:
// the initiator's opening offer is round 0, and each later round holds the
// responder's move followed by the initiator's. Parties see t = round /
// max_rounds. Reaching round max_rounds without an Accept ends in failure, so
// a transcript never holds more than 2 * max_rounds - 1 actions.
//
// Throws ProtocolViolation if a party accepts with no standing offer or
// proposes an offer outside the domain.
Transcript run_session(Party& team, Party& opponent,
                       const SessionConfig& config);

struct Scores {
  std::vector<double> team;
  double opponent = 0.0;
  // Product of every participant's utility.
  double joint = 0.0;

  double team_average() const;
  double team_min() const;
  double team_max() const;
};

// Utilities of the final agreement; all zero on failure.
Scores score(const Outcome& outcome, std::span<const PreferenceProfile> team,
             const PreferenceProfile& opponent);

double joint_utility(std::span<const double> team, double opponent);

}  // namespace teamneg

#endif  // TEAMNEG_PROTOCOL_HPP_
