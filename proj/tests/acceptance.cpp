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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "teamneg/domain.hpp"
#include "teamneg/opponents.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/random.hpp"
#include "teamneg/report.hpp"
#include "teamneg/stats.hpp"
#include "teamneg/tactics.hpp"
#include "teamneg/team.hpp"
#include "teamneg/tournament.hpp"
#include "teamneg/voting.hpp"
#include "test_util.hpp"

namespace teamneg {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Verdict& v) {
  std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Verdict demand_exactness() {
  const auto start = Clock::now();
  Rng rng(1);
  double worst = 0.0;
  int endpoint_errors = 0;
  for (int i = 0; i < 10000; ++i) {
    const TimeTactic tactic{uniform01(rng), uniform(rng, 0.01, 50.0)};
    const double t = uniform01(rng);
    const double closed = 1.0 - (1.0 - tactic.reservation_utility) * std::pow(t, 1.0 / tactic.beta);
    worst = std::max(worst, std::abs(demand(tactic, t) - closed));
    if (demand(tactic, 0.0) != 1.0) ++endpoint_errors;
    if (demand(tactic, 1.0) != tactic.reservation_utility) ++endpoint_errors;
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && endpoint_errors == 0 && elapsed < 1.0,
          fmt("max |error| %.3g over 10000 draws, %d endpoint mismatches, %.3f s", worst,
              endpoint_errors, elapsed)};
}

Verdict table_fidelity() {
  const auto s = hotel_booking_scenario();
  const std::map<std::string, std::vector<double>> expected{
      {"a1", {0.5, 0.1, 0.05, 0.35}},
      {"a2", {0.25, 0.25, 0.25, 0.25}},
      {"a3", {0.30, 0.50, 0.05, 0.15}},
      {"op", {0.10, 0.50, 0.25, 0.15}},
  };
  std::vector<PreferenceProfile> profiles = s.team;
  profiles.push_back(s.opponent);
  int mismatches = 0;
  double worst_sum = 0.0;
  for (const auto& p : profiles) {
    const auto it = expected.find(p.name);
    if (it == expected.end() || it->second != p.weights) ++mismatches;
    double sum = 0.0;
    for (double w : p.weights) sum += w;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  return {mismatches == 0 && profiles.size() == 4 && worst_sum <= 1e-15,
          fmt("%d of %zu profiles differ from the reference weights, max |row sum - 1| %.3g", mismatches,
              profiles.size(), worst_sum)};
}

// Exhaustive oracles: Borda by pairwise comparison counting, plurality by
// direct approval counts.
std::size_t borda_oracle(const UtilityMatrix& u) {
  const std::size_t m = u.front().size();
  std::vector<int> total(m, 0);
  for (const auto& row : u) {
    for (std::size_t j = 0; j < m; ++j) {
      int beaten = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (row[j] > row[k] || (row[j] == row[k] && j < k)) ++beaten;
      }
      total[j] += beaten;
    }
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (total[j] > total[best]) best = j;
  }
  return best;
}

std::size_t plurality_oracle(const UtilityMatrix& u, const std::vector<double>& reference) {
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t j = 0; j < u.front().size(); ++j) {
    int count = 0;
    for (std::size_t k = 0; k < u.size(); ++k) count += u[k][j] >= reference[k] ? 1 : 0;
    if (count > best_count) {
      best_count = count;
      best = j;
    }
  }
  return best;
}

Verdict voting_oracles() {
  Rng rng(3);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t members = 1 + uniform_index(rng, 5);
    const std::size_t proposals = 1 + uniform_index(rng, 4);
    UtilityMatrix u(members, std::vector<double>(proposals));
    for (auto& row : u)
      for (auto& v : row) v = static_cast<double>(uniform_index(rng, 5)) / 4.0;
    std::vector<double> reference(members);
    for (auto& r : reference) r = static_cast<double>(uniform_index(rng, 5)) / 4.0;
    if (select_winner(borda_totals(u)) != borda_oracle(u)) ++mismatches;
    if (select_winner(approval_marks(u, reference)) != plurality_oracle(u, reference)) {
      ++mismatches;
    }

    // Team level: members with random profiles, one proposal each.
    const std::size_t n = std::min<std::size_t>(members, 4);
    std::vector<TeamMember> team;
    std::vector<Offer> offers;
    for (std::size_t k = 0; k < n; ++k) {
      team.push_back({testing::random_profile(rng, 4), TimeTactic{0.0, 1.0}, {}});
      offers.push_back(testing::random_offer(rng, 4));
    }
    UtilityMatrix tu(n, std::vector<double>(n));
    std::vector<double> own(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) tu[k][j] = utility(team[k].profile, offers[j]);
      own[k] = tu[k][k];
    }
    if (sbv_select(team, offers) != borda_oracle(tu)) ++mismatches;
    if (ssv_select(team, offers) != plurality_oracle(tu, own)) ++mismatches;

    const double t = uniform01(rng);
    const Offer probe = testing::random_offer(rng, 4);
    std::size_t yes = 0;
    std::vector<bool> votes;
    for (const auto& m : team) {
      const bool v = utility(m.profile, probe) >= demand(m.tactic, t);
      votes.push_back(v);
      yes += v ? 1 : 0;
    }
    if (majority_accepts(votes) != (2 * yes > n)) ++mismatches;
    if (unanimity_accepts(votes) != (yes == n)) ++mismatches;
    if (ssv_accepts(team, probe, t) != (2 * yes > n)) ++mismatches;
    if (sbv_accepts(team, probe, t) != (yes == n)) ++mismatches;
    if (fum_accepts(team, probe, t) != (yes == n)) ++mismatches;
  }
  return {mismatches == 0, fmt("%d mismatches over 1000 random instances", mismatches)};
}

const std::vector<OpponentSpec>& all_archetypes() {
  static const std::vector<OpponentSpec> specs{
      {"TimeTactic", {Archetype::kTimeTactic, {}}},
      {"Crazy", {Archetype::kCrazyHaggler, {}}},
      {"Haggler", {Archetype::kHagglerAdaptive, {}}},
      {"K", {Archetype::kAgentKLike, {}}},
      {"TFT", {Archetype::kNiceTftLike, {}}},
      {"Smith", {Archetype::kSmithLike, {}}},
  };
  return specs;
}

Verdict unanimity_invariant() {
  TournamentConfig c = desk_tournament_config(404);
  c.opponents = all_archetypes();
  c.teams.clear();
  for (auto strategy : {TeamStrategy::kFullUnanimityMediated, TeamStrategy::kSimilarityBordaVoting}) {
    for (const auto& [suffix, range] :
         {std::pair{" B", BetaRange{0.5, 0.99}}, std::pair{" VB", BetaRange{0.01, 0.4}}}) {
      TeamSpec t;
      t.label = std::string(to_string(strategy)) + suffix;
      t.strategy = strategy;
      t.beta_range = range;
      c.teams.push_back(t);
    }
  }
  int sessions = 0, accepted = 0, violations = 0;
  double worst = 0.0;
  std::map<TeamStrategy, int> per_strategy;
  for (int rep = 0; per_strategy[TeamStrategy::kSimilarityBordaVoting] < 200; ++rep) {
    for (std::size_t ti = 0; ti < c.teams.size(); ++ti) {
      for (std::size_t oi = 0; oi < c.opponents.size(); ++oi) {
        const auto spec = plan_session(c, ti, oi, rep);
        const auto run = execute_session(spec);
        ++sessions;
        ++per_strategy[spec.team.strategy];
        const auto& out = run.transcript.outcome;
        if (!out.is_agreement() || out.decided_by != PartyRole::kTeam) continue;
        ++accepted;
        for (std::size_t i = 0; i < spec.betas.size(); ++i) {
          const double need =
              demand(TimeTactic{spec.reservation_utilities[i], spec.betas[i]}, out.time);
          const double gap = need - run.scores.team[i];
          worst = std::max(worst, gap);
          if (gap > 1e-9) ++violations;
        }
      }
    }
  }
  return {violations == 0 && accepted > 0,
          fmt("%d FUM/SBV sessions, %d team-accepted agreements, %d member shortfalls "
              "(worst demand - utility %.3g)",
              sessions, accepted, violations, worst)};
}

Verdict representative_equivalence() {
  const auto s = hotel_booking_scenario();
  int sessions = 0, different = 0;
  for (int i = 0; i < 50; ++i) {
    const auto seed = static_cast<std::uint64_t>(7000 + i);
    Rng rng(seed);
    TeamConfig config;
    config.strategy = TeamStrategy::kRepresentative;
    config.representative =
        i % 2 == 0 ? RepresentativeKind::kTimeTactic : RepresentativeKind::kAgentKLike;
    for (const auto& p : s.team) {
      config.members.push_back({p, TimeTactic{0.0, uniform(rng, 0.01, 0.99)}, {}});
    }
    const auto& opp = all_archetypes()[static_cast<std::size_t>(i) % all_archetypes().size()];
    const SessionConfig session{1000, i % 4 < 2 ? PartyRole::kTeam : PartyRole::kOpponent, seed};

    NegotiationTeam team(config, seed);
    const std::size_t rep = *team.representative_index();
    auto lone = make_representative_agent(config.members[rep], config.representative,
                                          config.agent_k_gamma, team_member_seed(seed, rep));
    auto opp_a = make_opponent(opp.config, s.opponent, {}, seed + 1);
    auto opp_b = make_opponent(opp.config, s.opponent, {}, seed + 1);
    const auto with_team = run_session(team, *opp_a, session);
    const auto alone = run_session(*lone, *opp_b, session);
    ++sessions;
    if (!(with_team == alone)) ++different;
  }
  return {different == 0,
          fmt("%d of %d RE transcripts differ from the lone representative's", different,
              sessions)};
}

struct CellStats {
  double mean = 0.0;
  double min_opponent_on_agreement = 1.0;
  int agreements = 0;
};

Verdict directional(const std::map<std::string, std::map<std::string, CellStats>>& cells,
                    char part) {
  auto m = [&](const char* team, const char* opp) { return cells.at(opp).at(team).mean; };
  bool pass = true;
  std::string detail;
  if (part == 'a') {
    for (const char* s : {"FUM", "SSV", "SBV"}) {
      const std::string b = std::string(s) + " B", vb = std::string(s) + " VB";
      const double mb = m(b.c_str(), "Smith"), mvb = m(vb.c_str(), "Smith");
      pass = pass && mvb > mb && mvb > 0.8;
      detail += fmt("%s VB %.3f vs B %.3f; ", s, mvb, mb);
    }
  } else if (part == 'b') {
    double worst_opp = 1.0;
    int agreements = 0;
    for (const auto& [team, cell] : cells.at("Crazy")) {
      worst_opp = std::min(worst_opp, cell.min_opponent_on_agreement);
      agreements += cell.agreements;
      pass = pass && cell.mean < 0.3;
      detail += fmt("%s %.3f; ", team.c_str(), cell.mean);
    }
    pass = pass && worst_opp >= 0.9;
    detail += fmt("min opponent utility on %d agreements %.4f", agreements, worst_opp);
  } else {
    for (const char* fum : {"FUM B", "FUM VB"}) {
      for (const char* other : {"SSV B", "SSV VB", "SBV B", "SBV VB"}) {
        pass = pass && m(fum, "TFT") > m(other, "TFT");
      }
    }
    for (const char* t : {"FUM B", "FUM VB", "SSV B", "SSV VB", "SBV B", "SBV VB"}) {
      detail += fmt("%s %.3f; ", t, m(t, "TFT"));
    }
  }
  if (detail.size() >= 2 && detail.ends_with("; ")) detail.resize(detail.size() - 2);
  return {pass, detail};
}

Verdict failure_payoff() {
  const auto s = hotel_booking_scenario();
  int sessions = 0, bad = 0;
  for (auto strategy : {TeamStrategy::kRepresentative, TeamStrategy::kSimilaritySimpleVoting,
                        TeamStrategy::kSimilarityBordaVoting,
                        TeamStrategy::kFullUnanimityMediated}) {
    TeamConfig config;
    config.strategy = strategy;
    for (const auto& p : s.team) config.members.push_back({p, TimeTactic{0.0, 0.5}, {}});
    NegotiationTeam team(config, 11);
    testing::Stonewaller wall(s.opponent);
    const auto tr = run_session(team, wall, {200, PartyRole::kOpponent, 11});
    const auto sc = score(tr.outcome, s.team, s.opponent);
    ++sessions;
    bool ok = tr.outcome.kind == OutcomeKind::kDeadline && sc.opponent == 0.0 && sc.joint == 0.0;
    for (double u : sc.team) ok = ok && u == 0.0;
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%d of %d stonewalled sessions scored non-zero or did not expire",
                        bad, sessions)};
}

Verdict statistics() {
  const std::vector<Sample> groups{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}};
  const auto a = anova_oneway(groups);
  const auto holm = holm_adjust(std::vector<double>{0.01, 0.04, 0.03});
  const std::vector<double> expected{0.03, 0.06, 0.06};
  double holm_err = 0.0;
  for (std::size_t i = 0; i < 3; ++i) holm_err = std::max(holm_err, std::abs(holm[i] - expected[i]));
  return {std::abs(a.f - 3.0) <= 1e-9 && holm_err <= 1e-12,
          fmt("F = %.12f (p = %.6f), Holm max error %.3g", a.f, a.p, holm_err)};
}

Verdict desk_determinism() {
  const auto config = desk_tournament_config();
  const auto start = Clock::now();
  const auto first = run_tournament(config, {1, std::nullopt});
  const double elapsed = seconds_since(start);
  const auto second = run_tournament(config, {1, std::nullopt});
  const bool same = render_sessions_csv(first) == render_sessions_csv(second);
  return {first.size() == 350 && same && elapsed < 60.0,
          fmt("%zu sessions in %.1f s on one thread, rerun %s", first.size(), elapsed,
              same ? "byte-identical" : "DIFFERENT")};
}

int run() {
  report(1, "demand closed form", demand_exactness());
  report(2, "hotel booking weights", table_fidelity());
  report(3, "voting oracles", voting_oracles());
  report(4, "unanimity invariant", unanimity_invariant());
  report(5, "RE equivalence", representative_equivalence());

  TournamentConfig c = desk_tournament_config(2020);
  c.repetitions = 20;
  c.opponents = {{"Crazy", {Archetype::kCrazyHaggler, {{"threshold", 0.9}}}},
                 {"TFT", {Archetype::kNiceTftLike, {}}},
                 {"Smith", {Archetype::kSmithLike, {}}}};
  const auto records = run_tournament(c, {1, std::nullopt});
  std::map<std::string, std::map<std::string, CellStats>> cells;
  for (const auto& r : records) {
    auto& cell = cells[r.opponent][r.team];
    cell.mean += r.team_average / c.repetitions;
    if (r.agreement()) {
      ++cell.agreements;
      cell.min_opponent_on_agreement = std::min(cell.min_opponent_on_agreement, r.opponent_utility);
    }
  }
  report(6, "(a) smith_like: VB above B, VB above 0.8", directional(cells, 'a'));
  report(6, "(b) crazy_haggler: opponent >= 0.9, team mean < 0.3", directional(cells, 'b'));
  report(6, "(c) nice_tft_like: FUM above SSV/SBV", directional(cells, 'c'));

  report(7, "failure payoff", failure_payoff());
  report(8, "statistics", statistics());
  report(9, "desk tournament determinism and scale", desk_determinism());

  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace teamneg

int main() { return teamneg::run(); }
