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

#ifndef TEAMNEG_TEAM_HPP_
#define TEAMNEG_TEAM_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/random.hpp"
#include "teamneg/tactics.hpp"
#include "teamneg/voting.hpp"

namespace teamneg {

enum class TeamStrategy {
  kRepresentative,          // RE
  kSimilaritySimpleVoting,  // SSV
  kSimilarityBordaVoting,   // SBV
  kFullUnanimityMediated,   // FUM
};

std::string_view to_string(TeamStrategy s);
TeamStrategy parse_team_strategy(std::string_view text);

// Negotiation behaviour of the RE representative.
enum class RepresentativeKind { kTimeTactic, kAgentKLike };

std::string_view to_string(RepresentativeKind k);
RepresentativeKind parse_representative_kind(std::string_view text);

struct TeamMember {
  PreferenceProfile profile;
  TimeTactic tactic;
  IsoSamplerConfig sampler;

  double demand_at(double t) const { return demand(tactic, t); }
  bool accepts(const Offer& offer, double t) const {
    return utility(profile, offer) >= demand_at(t);
  }
};

struct TeamConfig {
  TeamStrategy strategy = TeamStrategy::kFullUnanimityMediated;
  std::vector<TeamMember> members;
  int agenda_observation_rounds = 5;
  RepresentativeKind representative = RepresentativeKind::kTimeTactic;
  double agent_k_gamma = 3.0;

  void validate() const;
};

// Order in which FUM sets attributes.
using Agenda = std::vector<std::size_t>;

// Acceptance votes of every member for `offer` at time t.
std::vector<bool> member_votes(std::span<const TeamMember> members,
                               const Offer& offer, double t);

bool ssv_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t);
bool sbv_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t);
bool fum_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t);

// utilities[k][j] = utility of proposal j for member k.
UtilityMatrix proposal_utilities(std::span<const TeamMember> members,
                                 std::span<const Offer> proposals);

// Each member proposes on its own s_i(t) iso-surface near the references;
// `rngs` holds one generator per member.
std::vector<Offer> gather_proposals(std::span<const TeamMember> members,
                                    std::span<const Offer> references, double t,
                                    std::span<Rng> rngs);

// Plurality over approvals, member k approving what it values at least as much
// as its own proposal k. Ties go to the lower proposer index.
std::size_t ssv_select(std::span<const TeamMember> members,
                       std::span<const Offer> proposals);
// Borda count winner, ties to the lower proposer index.
std::size_t sbv_select(std::span<const TeamMember> members,
                       std::span<const Offer> proposals);

// Attributes ordered by how much the opponent conceded on them (toward the
// team's favourable direction) across the first `window` offers, most
// conceded first. Equal totals keep declaration order; fewer than two offers
// give declaration order.
Agenda infer_agenda(std::span<const Offer> opponent_offers,
                    std::span<const Direction> team_directions,
                    std::size_t window);

// Value member `member` asks for on `issue`: the one bringing its partial
// utility closest to `demand`.
double fum_request(const TeamMember& member, const PartialOffer& partial,
                   std::size_t issue, double demand);

struct FumConstruction {
  Offer offer;
  // requests[issue][member]; empty when the member was inactive or the issue
  // was completed without a vote.
  std::vector<std::vector<std::optional<double>>> requests;
  // Number of agenda attributes set by vote before the loop stopped.
  std::size_t voted_attributes = 0;
};

// Builds an offer attribute by attribute following `agenda`, aggregating
// active members' requests with max (increasing issues) or min (decreasing).
// Members whose partial utility reaches their demand drop out; attributes
// left when nobody is active, or after the agenda, are set at the team's
// worst value.
FumConstruction fum_construct(std::span<const TeamMember> members,
                              const Agenda& agenda, double t);

inline Offer fum_propose(std::span<const TeamMember> members,
                         const Agenda& agenda, double t) {
  return fum_construct(members, agenda, t).offer;
}

// Seed of member `index`'s generator inside a team seeded with `team_seed`.
std::uint64_t team_member_seed(std::uint64_t team_seed, std::size_t index);

// Bilateral agent that behaves exactly like an RE representative.
std::unique_ptr<Party> make_representative_agent(const TeamMember& member,
                                                 RepresentativeKind kind,
                                                 double agent_k_gamma,
                                                 std::uint64_t seed);

// The mediator plus its members, seen from outside as a single party.
class NegotiationTeam : public Party {
 public:
  NegotiationTeam(TeamConfig config, std::uint64_t seed);

  void receive_offer(const Offer& offer, double t) override;
  Action choose_action(double t) override;
  std::size_t issue_count() const override;
  std::string name() const override;

  const TeamConfig& config() const { return config_; }
  // RE only.
  std::optional<std::size_t> representative_index() const;
  // Agenda FUM would use right now.
  Agenda current_agenda() const;

 private:
  Action vote_and_propose(double t);

  TeamConfig config_;
  std::vector<Rng> member_rngs_;
  std::optional<std::size_t> representative_;
  std::unique_ptr<Party> representative_agent_;
  std::vector<Offer> opponent_offers_;
  std::optional<Offer> last_team_offer_;
};

}  // namespace teamneg

#endif  // TEAMNEG_TEAM_HPP_
