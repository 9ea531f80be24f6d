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

#ifndef TEAMNEG_SERIALIZATION_HPP_
#define TEAMNEG_SERIALIZATION_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "teamneg/domain.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/tournament.hpp"

namespace teamneg {

using Json = nlohmann::ordered_json;

// Scenario documents:
//   {"name": ..., "issues": ["pp", ...],
//    "profiles": [{"name", "role": "team"|"opponent", "weights": [...],
//                  "directions": ["increasing"|"decreasing", ...],
//                  "reservation_utility"}]}
// A bare string names a built-in scenario.
Json to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& j);

Json to_json(const TeamSpec& team);
TeamSpec team_spec_from_json(const Json& j);

Json to_json(const OpponentSpec& opponent);
OpponentSpec opponent_spec_from_json(const Json& j);

// {"scenario", "sampler", "teams": [...], "opponents": [...],
//  "tournament": {"repetitions", "max_rounds", "seed"}}
Json to_json(const TournamentConfig& config);
TournamentConfig tournament_config_from_json(const Json& j);
TournamentConfig load_tournament_config(const std::filesystem::path& path);

Json to_json(const SessionSpec& spec);
SessionSpec session_spec_from_json(const Json& j);

Json to_json(const Action& action);
Action action_from_json(const Json& j);

// {"config", "session"?, "actions": [...], "outcome", "utilities"}
Json transcript_to_json(const Transcript& transcript, const Scores& scores,
                        const SessionSpec* spec = nullptr);
Transcript transcript_from_json(const Json& j);

Json to_json(const SessionRecord& record);
SessionRecord session_record_from_json(const Json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json parse_json(const std::string& text, const std::string& origin);

// Shortest text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace teamneg

#endif  // TEAMNEG_SERIALIZATION_HPP_
