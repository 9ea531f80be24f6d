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

#include "teamneg/serialization.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "teamneg/error.hpp"

namespace teamneg {

namespace {

Json offer_json(const Offer& offer) { return Json(offer.values); }

Offer offer_from(const Json& j) {
  Offer o;
  o.values = j.get<std::vector<double>>();
  return o;
}

Json sampler_json(const IsoSamplerConfig& s) {
  return Json{{"candidate_count", s.candidate_count},
              {"utility_tolerance", s.utility_tolerance}};
}

IsoSamplerConfig sampler_from(const Json& j) {
  IsoSamplerConfig s;
  s.candidate_count = j.value("candidate_count", s.candidate_count);
  s.utility_tolerance = j.value("utility_tolerance", s.utility_tolerance);
  return s;
}

Json range_json(const BetaRange& r) { return Json::array({r.low, r.high}); }

BetaRange range_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError("beta_range must be a two-element array [low, high]");
  }
  return BetaRange{j[0].get<double>(), j[1].get<double>()};
}

// Runs `fn`, turning JSON access errors into ParseError tagged with `what`.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Json to_json(const Scenario& s) {
  Json issues = Json::array();
  for (const auto& issue : s.domain.issues()) issues.push_back(issue.name);
  Json profiles = Json::array();
  auto add = [&](const PreferenceProfile& p, const char* role) {
    Json dirs = Json::array();
    for (Direction d : p.directions) dirs.push_back(std::string(to_string(d)));
    profiles.push_back(Json{{"name", p.name},
                            {"role", role},
                            {"weights", p.weights},
                            {"directions", dirs},
                            {"reservation_utility", p.reservation_utility}});
  };
  for (const auto& p : s.team) add(p, "team");
  add(s.opponent, "opponent");
  return Json{{"name", s.name}, {"issues", issues}, {"profiles", profiles}};
}

Scenario scenario_from_json(const Json& j) {
  if (j.is_string()) return builtin_scenario(j.get<std::string>());
  return guarded("scenario", [&] {
    Scenario s;
    s.name = j.value("name", std::string("custom"));
    std::vector<std::string> names;
    for (const auto& issue : j.at("issues")) {
      names.push_back(issue.is_string() ? issue.get<std::string>()
                                        : issue.at("name").get<std::string>());
    }
    s.domain = NegotiationDomain(names);
    bool have_opponent = false;
    for (const auto& pj : j.at("profiles")) {
      PreferenceProfile p;
      p.name = pj.at("name").get<std::string>();
      p.weights = pj.at("weights").get<std::vector<double>>();
      for (const auto& d : pj.at("directions")) {
        p.directions.push_back(parse_direction(d.get<std::string>()));
      }
      p.reservation_utility = pj.value("reservation_utility", 0.0);
      const std::string role = pj.value("role", std::string("team"));
      if (role == "opponent") {
        if (have_opponent) throw ConfigError("scenario lists more than one opponent profile");
        s.opponent = std::move(p);
        have_opponent = true;
      } else if (role == "team") {
        s.team.push_back(std::move(p));
      } else {
        throw ConfigError("profile role must be 'team' or 'opponent', got '" + role + "'");
      }
    }
    if (!have_opponent) throw ConfigError("scenario has no opponent profile");
    s.validate();
    return s;
  });
}

Json to_json(const TeamSpec& t) {
  Json j{{"label", t.label},
         {"strategy", std::string(to_string(t.strategy))},
         {"beta_range", range_json(t.beta_range)},
         {"reservation_utility", t.reservation_utility},
         {"agenda_observation_rounds", t.agenda_observation_rounds},
         {"representative", std::string(to_string(t.representative))},
         {"agent_k_gamma", t.agent_k_gamma}};
  if (!t.members.empty()) {
    Json members = Json::array();
    for (const auto& m : t.members) {
      Json mj = Json::object();
      if (m.beta) mj["beta"] = *m.beta;
      if (m.beta_range) mj["beta_range"] = range_json(*m.beta_range);
      if (m.reservation_utility) mj["reservation_utility"] = *m.reservation_utility;
      members.push_back(mj);
    }
    j["members"] = members;
  }
  return j;
}

TeamSpec team_spec_from_json(const Json& j) {
  return guarded("team configuration", [&] {
    TeamSpec t;
    t.label = j.at("label").get<std::string>();
    t.strategy = parse_team_strategy(j.at("strategy").get<std::string>());
    if (j.contains("beta_range")) t.beta_range = range_from(j.at("beta_range"));
    t.reservation_utility = j.value("reservation_utility", 0.0);
    t.agenda_observation_rounds = j.value("agenda_observation_rounds", 5);
    t.representative =
        parse_representative_kind(j.value("representative", std::string("time_tactic")));
    t.agent_k_gamma = j.value("agent_k_gamma", 3.0);
    if (j.contains("members")) {
      for (const auto& mj : j.at("members")) {
        MemberSpec m;
        if (mj.contains("beta")) m.beta = mj.at("beta").get<double>();
        if (mj.contains("beta_range")) m.beta_range = range_from(mj.at("beta_range"));
        if (mj.contains("reservation_utility")) {
          m.reservation_utility = mj.at("reservation_utility").get<double>();
        }
        t.members.push_back(m);
      }
    }
    return t;
  });
}

Json to_json(const OpponentSpec& o) {
  Json params = Json::object();
  for (const auto& [k, v] : o.config.params) params[k] = v;
  return Json{{"label", o.label},
              {"archetype", std::string(to_string(o.config.archetype))},
              {"params", params}};
}

OpponentSpec opponent_spec_from_json(const Json& j) {
  return guarded("opponent", [&] {
    OpponentSpec o;
    o.config.archetype = parse_archetype(j.at("archetype").get<std::string>());
    o.label = j.value("label", std::string(to_string(o.config.archetype)));
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) {
        o.config.params[k] = v.get<double>();
      }
    }
    o.config.validate();
    return o;
  });
}

Json to_json(const TournamentConfig& c) {
  Json teams = Json::array();
  for (const auto& t : c.teams) teams.push_back(to_json(t));
  Json opponents = Json::array();
  for (const auto& o : c.opponents) opponents.push_back(to_json(o));
  return Json{{"scenario", to_json(c.scenario)},
              {"sampler", sampler_json(c.sampler)},
              {"teams", teams},
              {"opponents", opponents},
              {"tournament",
               {{"repetitions", c.repetitions},
                {"max_rounds", c.max_rounds},
                {"seed", c.master_seed}}}};
}

TournamentConfig tournament_config_from_json(const Json& j) {
  return guarded("tournament configuration", [&] {
    TournamentConfig c;
    c.scenario = scenario_from_json(j.value("scenario", Json("hotel-booking")));
    if (j.contains("sampler")) c.sampler = sampler_from(j.at("sampler"));
    for (const auto& t : j.at("teams")) c.teams.push_back(team_spec_from_json(t));
    for (const auto& o : j.at("opponents")) {
      c.opponents.push_back(opponent_spec_from_json(o));
    }
    if (j.contains("tournament")) {
      const auto& tj = j.at("tournament");
      c.repetitions = tj.value("repetitions", c.repetitions);
      c.max_rounds = tj.value("max_rounds", c.max_rounds);
      c.master_seed = tj.value("seed", c.master_seed);
    }
    c.validate();
    return c;
  });
}

TournamentConfig load_tournament_config(const std::filesystem::path& path) {
  return tournament_config_from_json(parse_json(read_text_file(path), path.string()));
}

Json to_json(const SessionSpec& s) {
  return Json{{"scenario", to_json(s.scenario)},
              {"team", to_json(s.team)},
              {"betas", s.betas},
              {"reservation_utilities", s.reservation_utilities},
              {"opponent", to_json(s.opponent)},
              {"sampler", sampler_json(s.sampler)},
              {"max_rounds", s.session.max_rounds},
              {"initiator", std::string(to_string(s.session.initiator))},
              {"seed", s.session.seed},
              {"repetition", s.repetition}};
}

SessionSpec session_spec_from_json(const Json& j) {
  return guarded("session", [&] {
    SessionSpec s;
    s.scenario = scenario_from_json(j.at("scenario"));
    s.team = team_spec_from_json(j.at("team"));
    s.betas = j.at("betas").get<std::vector<double>>();
    s.reservation_utilities = j.at("reservation_utilities").get<std::vector<double>>();
    s.opponent = opponent_spec_from_json(j.at("opponent"));
    if (j.contains("sampler")) s.sampler = sampler_from(j.at("sampler"));
    s.session.max_rounds = j.at("max_rounds").get<int>();
    s.session.initiator = parse_party_role(j.at("initiator").get<std::string>());
    s.session.seed = j.at("seed").get<std::uint64_t>();
    s.repetition = j.value("repetition", 0);
    return s;
  });
}

Json to_json(const Action& action) {
  Json j{{"type", std::string(action_name(action))}};
  if (const auto* p = std::get_if<Propose>(&action)) j["offer"] = offer_json(p->offer);
  return j;
}

Action action_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "propose") return Propose{offer_from(j.at("offer"))};
  if (type == "accept") return Accept{};
  if (type == "end") return EndNegotiation{};
  throw ParseError("unknown action type '" + type + "'");
}

Json transcript_to_json(const Transcript& transcript, const Scores& scores,
                        const SessionSpec* spec) {
  Json j;
  j["config"] = Json{{"max_rounds", transcript.config.max_rounds},
                     {"initiator", std::string(to_string(transcript.config.initiator))},
                     {"seed", transcript.config.seed}};
  if (spec) j["session"] = to_json(*spec);
  Json actions = Json::array();
  for (const auto& e : transcript.entries) {
    Json a{{"round", e.round}, {"t", e.time}, {"actor", std::string(to_string(e.actor))}};
    const Json action = to_json(e.action);
    for (const auto& [k, v] : action.items()) a[k] = v;
    actions.push_back(a);
  }
  j["actions"] = actions;
  const Outcome& o = transcript.outcome;
  Json outcome{{"kind", std::string(to_string(o.kind))}, {"round", o.round}, {"t", o.time}};
  if (o.decided_by) outcome["decided_by"] = std::string(to_string(*o.decided_by));
  if (o.agreement) outcome["offer"] = offer_json(*o.agreement);
  j["outcome"] = outcome;
  j["utilities"] = Json{{"team", scores.team},
                        {"opponent", scores.opponent},
                        {"joint", scores.joint}};
  return j;
}

Transcript transcript_from_json(const Json& j) {
  return guarded("transcript", [&] {
    Transcript t;
    const auto& c = j.at("config");
    t.config.max_rounds = c.at("max_rounds").get<int>();
    t.config.initiator = parse_party_role(c.at("initiator").get<std::string>());
    t.config.seed = c.at("seed").get<std::uint64_t>();
    for (const auto& a : j.at("actions")) {
      t.entries.push_back(TranscriptEntry{a.at("round").get<int>(), a.at("t").get<double>(),
                                          parse_party_role(a.at("actor").get<std::string>()),
                                          action_from_json(a)});
    }
    const auto& o = j.at("outcome");
    t.outcome.kind = parse_outcome_kind(o.at("kind").get<std::string>());
    t.outcome.round = o.at("round").get<int>();
    t.outcome.time = o.at("t").get<double>();
    if (o.contains("decided_by")) {
      t.outcome.decided_by = parse_party_role(o.at("decided_by").get<std::string>());
    }
    if (o.contains("offer")) t.outcome.agreement = offer_from(o.at("offer"));
    return t;
  });
}

Json to_json(const SessionRecord& r) {
  return Json{{"team", r.team},
              {"opponent", r.opponent},
              {"repetition", r.repetition},
              {"seed", r.seed},
              {"initiator", std::string(to_string(r.initiator))},
              {"outcome", std::string(to_string(r.outcome))},
              {"rounds", r.rounds},
              {"time", r.time},
              {"member_utilities", r.member_utilities},
              {"opponent_utility", r.opponent_utility},
              {"team_average", r.team_average},
              {"team_min", r.team_min},
              {"team_max", r.team_max},
              {"joint", r.joint},
              {"betas", r.betas}};
}

SessionRecord session_record_from_json(const Json& j) {
  return guarded("session record", [&] {
    SessionRecord r;
    r.team = j.at("team").get<std::string>();
    r.opponent = j.at("opponent").get<std::string>();
    r.repetition = j.at("repetition").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.initiator = parse_party_role(j.at("initiator").get<std::string>());
    r.outcome = parse_outcome_kind(j.at("outcome").get<std::string>());
    r.rounds = j.at("rounds").get<int>();
    r.time = j.at("time").get<double>();
    r.member_utilities = j.at("member_utilities").get<std::vector<double>>();
    r.opponent_utility = j.at("opponent_utility").get<double>();
    r.team_average = j.at("team_average").get<double>();
    r.team_min = j.at("team_min").get<double>();
    r.team_max = j.at("team_max").get<double>();
    r.joint = j.at("joint").get<double>();
    r.betas = j.at("betas").get<std::vector<double>>();
    return r;
  });
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

}  // namespace teamneg
