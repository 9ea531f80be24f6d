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

#ifndef TEAMNEG_REPORT_HPP_
#define TEAMNEG_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamneg/serialization.hpp"
#include "teamneg/stats.hpp"
#include "teamneg/tournament.hpp"

namespace teamneg {

// Means over the sessions of one (team, opponent) pairing. Failed sessions
// count with utility 0.
struct PairingAggregate {
  std::string team;
  std::string opponent;
  std::size_t sessions = 0;
  double team_average = 0.0;
  double team_min = 0.0;
  double team_max = 0.0;
  double joint = 0.0;
  double agreement_rate = 0.0;
};

// Pairings in order of first appearance. Throws InvalidArgument when
// `records` is empty.
std::vector<PairingAggregate> aggregate(std::span<const SessionRecord> records);

enum class Metric { kTeamAverage, kJoint };

// Comparison of every team configuration against one opponent. Missing when
// some configuration has fewer than two sessions.
struct ColumnStats {
  std::string opponent;
  std::optional<GroupComparison> comparison;
};

struct TournamentReport {
  std::vector<std::string> teams;
  std::vector<std::string> opponents;
  std::vector<PairingAggregate> aggregates;
  std::vector<ColumnStats> team_average_stats;
  std::vector<ColumnStats> joint_stats;
  double alpha = 0.05;
  std::size_t sessions = 0;

  const PairingAggregate* find(std::string_view team, std::string_view opponent) const;
  // Whether `team` is marked statistically best against `opponent`.
  bool is_best(Metric metric, std::string_view team, std::string_view opponent) const;
};

TournamentReport build_report(std::span<const SessionRecord> records,
                              double alpha = 0.05);

// Samples of `metric` for one pairing, in record order.
Sample metric_samples(std::span<const SessionRecord> records, Metric metric,
                      std::string_view team, std::string_view opponent);

enum class ReportFormat { kCsv, kJson, kMarkdown };

ReportFormat parse_report_format(std::string_view text);

// One row per session; list-valued columns are ';'-separated.
std::string render_sessions_csv(std::span<const SessionRecord> records);
std::vector<SessionRecord> parse_sessions_csv(const std::string& text);

std::string render_markdown(const TournamentReport& report);

// {"sessions": [...], "aggregates": [...], "statistics": {...}}
Json report_to_json(std::span<const SessionRecord> records,
                    const TournamentReport& report);
std::vector<SessionRecord> records_from_report_json(const Json& j);

std::string render_report(std::span<const SessionRecord> records,
                          ReportFormat format, double alpha = 0.05);

}  // namespace teamneg

#endif  // TEAMNEG_REPORT_HPP_
