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

#include "teamneg/team.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "teamneg/error.hpp"
#include "teamneg/opponents.hpp"

namespace teamneg {

namespace {

constexpr std::uint64_t kRepresentativeStream = 0x5245;  // "RE"

}  // namespace

std::string_view to_string(TeamStrategy s) {
  switch (s) {
    case TeamStrategy::kRepresentative: return "RE";
    case TeamStrategy::kSimilaritySimpleVoting: return "SSV";
    case TeamStrategy::kSimilarityBordaVoting: return "SBV";
    case TeamStrategy::kFullUnanimityMediated: return "FUM";
  }
  return "FUM";
}

TeamStrategy parse_team_strategy(std::string_view text) {
  if (text == "RE") return TeamStrategy::kRepresentative;
  if (text == "SSV") return TeamStrategy::kSimilaritySimpleVoting;
  if (text == "SBV") return TeamStrategy::kSimilarityBordaVoting;
  if (text == "FUM") return TeamStrategy::kFullUnanimityMediated;
  throw ConfigError("unknown intra-team strategy '" + std::string(text) +
                    "' (expected RE, SSV, SBV or FUM)");
}

std::string_view to_string(RepresentativeKind k) {
  return k == RepresentativeKind::kTimeTactic ? "time_tactic" : "agent_k_like";
}

RepresentativeKind parse_representative_kind(std::string_view text) {
  if (text == "time_tactic") return RepresentativeKind::kTimeTactic;
  if (text == "agent_k_like") return RepresentativeKind::kAgentKLike;
  throw ConfigError("unknown representative kind '" + std::string(text) + "'");
}

void TeamConfig::validate() const {
  if (members.empty()) throw ConfigError("a team needs at least one member");
  const std::size_t n = members.front().profile.size();
  for (const auto& m : members) {
    m.profile.validate(n);
    m.tactic.validate();
    m.sampler.validate();
  }
  if (agenda_observation_rounds < 1) {
    throw ConfigError("agenda_observation_rounds must be >= 1");
  }
  if (!(agent_k_gamma > 0.0)) throw ConfigError("agent_k_gamma must be positive");
  if (strategy == TeamStrategy::kFullUnanimityMediated) {
    const auto& dirs = members.front().profile.directions;
    for (const auto& m : members) {
      if (m.profile.directions != dirs) {
        throw ConfigError("FUM requires every member to share the valuation "
                          "direction of each issue; '" + m.profile.name +
                          "' differs from '" + members.front().profile.name + "'");
      }
    }
  }
}

std::vector<bool> member_votes(std::span<const TeamMember> members,
                               const Offer& offer, double t) {
  std::vector<bool> votes;
  votes.reserve(members.size());
  for (const auto& m : members) votes.push_back(m.accepts(offer, t));
  return votes;
}

bool ssv_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t) {
  return majority_accepts(member_votes(members, offer, t));
}

bool sbv_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t) {
  return unanimity_accepts(member_votes(members, offer, t));
}

bool fum_accepts(std::span<const TeamMember> members, const Offer& offer,
                 double t) {
  return unanimity_accepts(member_votes(members, offer, t));
}

UtilityMatrix proposal_utilities(std::span<const TeamMember> members,
                                 std::span<const Offer> proposals) {
  UtilityMatrix u(members.size(), std::vector<double>(proposals.size()));
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t j = 0; j < proposals.size(); ++j) {
      u[k][j] = utility(members[k].profile, proposals[j]);
    }
  }
  return u;
}

std::vector<Offer> gather_proposals(std::span<const TeamMember> members,
                                    std::span<const Offer> references, double t,
                                    std::span<Rng> rngs) {
  if (rngs.size() != members.size()) {
    throw InvalidArgument("one generator per member is required");
  }
  std::vector<Offer> proposals;
  proposals.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    proposals.push_back(sample_iso_offer(members[i].profile,
                                         members[i].demand_at(t), references,
                                         members[i].sampler, rngs[i]));
  }
  return proposals;
}

std::size_t ssv_select(std::span<const TeamMember> members,
                       std::span<const Offer> proposals) {
  if (proposals.size() != members.size()) {
    throw InvalidArgument("SSV expects one proposal per member");
  }
  const auto u = proposal_utilities(members, proposals);
  std::vector<double> own(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) own[k] = u[k][k];
  return select_winner(approval_marks(u, own));
}

std::size_t sbv_select(std::span<const TeamMember> members,
                       std::span<const Offer> proposals) {
  return select_winner(borda_totals(proposal_utilities(members, proposals)));
}

Agenda infer_agenda(std::span<const Offer> opponent_offers,
                    std::span<const Direction> team_directions,
                    std::size_t window) {
  const std::size_t n = team_directions.size();
  Agenda agenda(n);
  std::iota(agenda.begin(), agenda.end(), 0);
  const std::size_t observed = std::min(window, opponent_offers.size());
  if (observed < 2) return agenda;

  std::vector<double> conceded(n, 0.0);
  for (std::size_t k = 1; k < observed; ++k) {
    const Offer& before = opponent_offers[k - 1];
    const Offer& after = opponent_offers[k];
    if (before.size() != n || after.size() != n) {
      throw InvalidArgument("opponent offer dimension mismatch");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double move = team_directions[j] == Direction::kIncreasing
                              ? after[j] - before[j]
                              : before[j] - after[j];
      conceded[j] += std::max(0.0, move);
    }
  }
  std::stable_sort(agenda.begin(), agenda.end(), [&](std::size_t a, std::size_t b) {
    return conceded[a] > conceded[b];
  });
  return agenda;
}

double fum_request(const TeamMember& member, const PartialOffer& partial,
                   std::size_t issue, double demand) {
  const double weight = member.profile.weights.at(issue);
  double wanted = 0.0;
  if (weight > 0.0) {
    wanted = std::clamp((demand - partial_utility(member.profile, partial)) / weight,
                        0.0, 1.0);
  }
  return value_for_valuation(member.profile.directions[issue], wanted);
}

FumConstruction fum_construct(std::span<const TeamMember> members,
                              const Agenda& agenda, double t) {
  if (members.empty()) throw InvalidArgument("FUM needs at least one member");
  const auto& directions = members.front().profile.directions;
  const std::size_t n = directions.size();
  {
    std::vector<bool> seen(n, false);
    if (agenda.size() != n) throw InvalidArgument("agenda is not a permutation");
    for (std::size_t j : agenda) {
      if (j >= n || seen[j]) throw InvalidArgument("agenda is not a permutation");
      seen[j] = true;
    }
  }
  for (const auto& m : members) {
    if (m.profile.directions != directions) {
      throw ConfigError("FUM members disagree on valuation directions");
    }
  }

  std::vector<double> demands;
  for (const auto& m : members) demands.push_back(m.demand_at(t));
  std::vector<bool> active(members.size(), true);

  FumConstruction result;
  result.requests.assign(n, std::vector<std::optional<double>>(members.size()));
  PartialOffer partial(n);

  for (std::size_t issue : agenda) {
    if (std::none_of(active.begin(), active.end(), [](bool a) { return a; })) break;
    std::optional<double> aggregated;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!active[i]) continue;
      const double v = fum_request(members[i], partial, issue, demands[i]);
      result.requests[issue][i] = v;
      if (!aggregated) {
        aggregated = v;
      } else if (directions[issue] == Direction::kIncreasing) {
        aggregated = std::max(*aggregated, v);
      } else {
        aggregated = std::min(*aggregated, v);
      }
    }
    partial.set(issue, *aggregated);
    ++result.voted_attributes;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (active[i] && partial_utility(members[i].profile, partial) >= demands[i]) {
        active[i] = false;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!partial.is_set(j)) partial.set(j, value_for_valuation(directions[j], 0.0));
  }
  result.offer = partial.to_offer();
  return result;
}

std::uint64_t team_member_seed(std::uint64_t team_seed, std::size_t index) {
  return derive_seed(team_seed, 0x100 + index);
}

std::unique_ptr<Party> make_representative_agent(const TeamMember& member,
                                                 RepresentativeKind kind,
                                                 double agent_k_gamma,
                                                 std::uint64_t seed) {
  if (kind == RepresentativeKind::kAgentKLike) {
    return std::make_unique<AgentKLike>(member.profile, agent_k_gamma,
                                        member.sampler, seed);
  }
  return std::make_unique<TimeTacticAgent>(member.profile, member.tactic,
                                           member.sampler, seed,
                                           /*reference_own_last=*/true);
}

NegotiationTeam::NegotiationTeam(TeamConfig config, std::uint64_t seed)
    : config_(std::move(config)) {
  config_.validate();
  for (std::size_t i = 0; i < config_.members.size(); ++i) {
    member_rngs_.emplace_back(team_member_seed(seed, i));
  }
  if (config_.strategy == TeamStrategy::kRepresentative) {
    Rng pick(derive_seed(seed, kRepresentativeStream));
    representative_ = uniform_index(pick, config_.members.size());
    representative_agent_ = make_representative_agent(
        config_.members[*representative_], config_.representative,
        config_.agent_k_gamma, team_member_seed(seed, *representative_));
  }
}

std::size_t NegotiationTeam::issue_count() const {
  return config_.members.front().profile.size();
}

std::string NegotiationTeam::name() const {
  return "team/" + std::string(to_string(config_.strategy));
}

std::optional<std::size_t> NegotiationTeam::representative_index() const {
  return representative_;
}

Agenda NegotiationTeam::current_agenda() const {
  return infer_agenda(opponent_offers_, config_.members.front().profile.directions,
                      static_cast<std::size_t>(config_.agenda_observation_rounds));
}

void NegotiationTeam::receive_offer(const Offer& offer, double t) {
  opponent_offers_.push_back(offer);
  if (representative_agent_) representative_agent_->receive_offer(offer, t);
}

Action NegotiationTeam::choose_action(double t) {
  if (representative_agent_) return representative_agent_->choose_action(t);
  return vote_and_propose(t);
}

Action NegotiationTeam::vote_and_propose(double t) {
  const auto& members = config_.members;
  if (!opponent_offers_.empty()) {
    const Offer& standing = opponent_offers_.back();
    bool accept = false;
    switch (config_.strategy) {
      case TeamStrategy::kSimilaritySimpleVoting:
        accept = ssv_accepts(members, standing, t);
        break;
      case TeamStrategy::kSimilarityBordaVoting:
        accept = sbv_accepts(members, standing, t);
        break;
      default:
        accept = fum_accepts(members, standing, t);
        break;
    }
    if (accept) return Accept{};
  }

  Offer proposal;
  if (config_.strategy == TeamStrategy::kFullUnanimityMediated) {
    proposal = fum_propose(members, current_agenda(), t);
  } else {
    std::vector<Offer> refs;
    if (!opponent_offers_.empty()) refs.push_back(opponent_offers_.back());
    if (last_team_offer_) refs.push_back(*last_team_offer_);
    auto proposals = gather_proposals(members, refs, t, member_rngs_);
    const std::size_t winner =
        config_.strategy == TeamStrategy::kSimilaritySimpleVoting
            ? ssv_select(members, proposals)
            : sbv_select(members, proposals);
    proposal = std::move(proposals[winner]);
  }
  last_team_offer_ = proposal;
  return Propose{std::move(proposal)};
}

}  // namespace teamneg
