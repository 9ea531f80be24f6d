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

#include "teamneg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "teamneg/error.hpp"

namespace teamneg {

namespace {

const char* const kCsvHeader =
    "team,opponent,repetition,seed,initiator,outcome,rounds,time,"
    "member_utilities,opponent_utility,team_average,team_min,team_max,joint,betas";
constexpr std::size_t kCsvColumns = 15;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += format_double(xs[i]);
  }
  return out;
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("not a number: '" + s + "'");
  }
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(';', start);
    out.push_back(to_double(s.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

// Splits CSV text into rows of fields, honouring double-quoted fields.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_has_data = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      row_has_data = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      row_has_data = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (row_has_data || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      row_has_data = false;
    } else {
      field += c;
      row_has_data = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  if (row_has_data || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fixed_or_inf(double v, int digits) {
  return std::isinf(v) ? std::string("inf") : fixed(v, digits);
}

const std::vector<ColumnStats>& stats_for(const TournamentReport& r, Metric m) {
  return m == Metric::kTeamAverage ? r.team_average_stats : r.joint_stats;
}

Json comparison_json(const TournamentReport& report, Metric metric) {
  Json columns = Json::array();
  for (const auto& col : stats_for(report, metric)) {
    Json c{{"opponent", col.opponent}};
    if (col.comparison) {
      const auto& cmp = *col.comparison;
      c["means"] = cmp.means;
      c["anova"] = Json{{"f", std::isinf(cmp.anova.f) ? Json("inf") : Json(cmp.anova.f)},
                        {"p", cmp.anova.p},
                        {"df_between", cmp.anova.df_between},
                        {"df_within", cmp.anova.df_within}};
      Json pairs = Json::array();
      for (const auto& p : cmp.posthoc.pairs) {
        pairs.push_back(Json{{"first", report.teams[p.first]},
                             {"second", report.teams[p.second]},
                             {"raw_p", p.raw_p},
                             {"adjusted_p", p.adjusted_p}});
      }
      c["pairwise"] = pairs;
      Json best = Json::array();
      for (std::size_t g = 0; g < cmp.posthoc.best.size(); ++g) {
        if (cmp.posthoc.best[g]) best.push_back(report.teams[g]);
      }
      c["best"] = best;
    }
    columns.push_back(c);
  }
  return columns;
}

}  // namespace

std::vector<PairingAggregate> aggregate(std::span<const SessionRecord> records) {
  if (records.empty()) throw InvalidArgument("cannot aggregate an empty record set");
  std::vector<PairingAggregate> out;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PairingAggregate& a) {
      return a.team == r.team && a.opponent == r.opponent;
    });
    if (it == out.end()) {
      out.push_back(PairingAggregate{r.team, r.opponent});
      it = std::prev(out.end());
    }
    ++it->sessions;
    it->team_average += r.team_average;
    it->team_min += r.team_min;
    it->team_max += r.team_max;
    it->joint += r.joint;
    it->agreement_rate += r.agreement() ? 1.0 : 0.0;
  }
  for (auto& a : out) {
    const double n = static_cast<double>(a.sessions);
    a.team_average /= n;
    a.team_min /= n;
    a.team_max /= n;
    a.joint /= n;
    a.agreement_rate /= n;
  }
  return out;
}

Sample metric_samples(std::span<const SessionRecord> records, Metric metric,
                      std::string_view team, std::string_view opponent) {
  Sample s;
  for (const auto& r : records) {
    if (r.team != team || r.opponent != opponent) continue;
    s.push_back(metric == Metric::kTeamAverage ? r.team_average : r.joint);
  }
  return s;
}

const PairingAggregate* TournamentReport::find(std::string_view team,
                                               std::string_view opponent) const {
  for (const auto& a : aggregates) {
    if (a.team == team && a.opponent == opponent) return &a;
  }
  return nullptr;
}

bool TournamentReport::is_best(Metric metric, std::string_view team,
                               std::string_view opponent) const {
  const auto t = std::find(teams.begin(), teams.end(), team);
  if (t == teams.end()) return false;
  for (const auto& col : stats_for(*this, metric)) {
    if (col.opponent != opponent || !col.comparison) continue;
    return col.comparison->posthoc.best[static_cast<std::size_t>(t - teams.begin())];
  }
  return false;
}

TournamentReport build_report(std::span<const SessionRecord> records, double alpha) {
  TournamentReport report;
  report.alpha = alpha;
  report.sessions = records.size();
  if (records.empty()) return report;
  for (const auto& r : records) {
    if (std::find(report.teams.begin(), report.teams.end(), r.team) == report.teams.end()) {
      report.teams.push_back(r.team);
    }
    if (std::find(report.opponents.begin(), report.opponents.end(), r.opponent) ==
        report.opponents.end()) {
      report.opponents.push_back(r.opponent);
    }
  }
  report.aggregates = aggregate(records);

  for (Metric metric : {Metric::kTeamAverage, Metric::kJoint}) {
    auto& columns =
        metric == Metric::kTeamAverage ? report.team_average_stats : report.joint_stats;
    for (const auto& opponent : report.opponents) {
      ColumnStats col{opponent, std::nullopt};
      std::vector<Sample> groups;
      bool usable = report.teams.size() >= 2;
      for (const auto& team : report.teams) {
        groups.push_back(metric_samples(records, metric, team, opponent));
        if (groups.back().size() < 2) usable = false;
      }
      if (usable) col.comparison = compare_groups(groups, alpha);
      columns.push_back(std::move(col));
    }
  }
  return report;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  throw InvalidArgument("unknown report format '" + std::string(text) +
                        "' (expected csv, json or markdown)");
}

std::string render_sessions_csv(std::span<const SessionRecord> records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += csv_field(r.team) + ',' + csv_field(r.opponent) + ',' +
           std::to_string(r.repetition) + ',' + std::to_string(r.seed) + ',' +
           std::string(to_string(r.initiator)) + ',' + std::string(to_string(r.outcome)) +
           ',' + std::to_string(r.rounds) + ',' + format_double(r.time) + ',' +
           join_doubles(r.member_utilities) + ',' + format_double(r.opponent_utility) +
           ',' + format_double(r.team_average) + ',' + format_double(r.team_min) + ',' +
           format_double(r.team_max) + ',' + format_double(r.joint) + ',' +
           join_doubles(r.betas) + '\n';
  }
  return out;
}

std::vector<SessionRecord> parse_sessions_csv(const std::string& text) {
  auto rows = csv_rows(text);
  if (rows.empty()) throw ParseError("sessions CSV has no header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (i) header += ',';
    header += rows[0][i];
  }
  if (header != kCsvHeader) throw ParseError("unexpected sessions CSV header");

  std::vector<SessionRecord> records;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != kCsvColumns) {
      throw ParseError("sessions CSV row " + std::to_string(i) + " has " +
                       std::to_string(f.size()) + " fields");
    }
    SessionRecord r;
    try {
      r.team = f[0];
      r.opponent = f[1];
      r.repetition = std::stoi(f[2]);
      r.seed = std::stoull(f[3]);
      r.initiator = parse_party_role(f[4]);
      r.outcome = parse_outcome_kind(f[5]);
      r.rounds = std::stoi(f[6]);
    } catch (const std::logic_error&) {
      throw ParseError("malformed integer in sessions CSV row " + std::to_string(i));
    }
    r.time = to_double(f[7]);
    r.member_utilities = split_doubles(f[8]);
    r.opponent_utility = to_double(f[9]);
    r.team_average = to_double(f[10]);
    r.team_min = to_double(f[11]);
    r.team_max = to_double(f[12]);
    r.joint = to_double(f[13]);
    r.betas = split_doubles(f[14]);
    records.push_back(std::move(r));
  }
  return records;
}

std::string render_markdown(const TournamentReport& report) {
  std::ostringstream md;
  md << "# Tournament report\n\n";
  if (report.sessions == 0) {
    md << "No sessions.\n";
    return md.str();
  }
  md << report.sessions << " sessions. Bold entries are statistically best in their "
     << "column (pairwise Welch t-tests, Holm-adjusted, alpha = "
     << fixed(report.alpha, 2) << ").\n";

  auto table = [&](const char* title, Metric metric, int digits) {
    md << "\n## " << title << "\n\n|";
    for (const auto& o : report.opponents) md << " | " << o;
    md << " |\n|---|";
    for (std::size_t i = 0; i < report.opponents.size(); ++i) md << "---|";
    md << '\n';
    for (const auto& team : report.teams) {
      md << "| " << team << " |";
      for (const auto& opponent : report.opponents) {
        const auto* a = report.find(team, opponent);
        if (!a) {
          md << " - |";
          continue;
        }
        const std::string v =
            fixed(metric == Metric::kTeamAverage ? a->team_average : a->joint, digits);
        if (report.is_best(metric, team, opponent)) {
          md << " **" << v << "** |";
        } else {
          md << ' ' << v << " |";
        }
      }
      md << '\n';
    }
    md << "| ANOVA F (p) |";
    for (const auto& col : stats_for(report, metric)) {
      if (col.comparison) {
        md << ' ' << fixed_or_inf(col.comparison->anova.f, 2) << " ("
           << fixed(col.comparison->anova.p, 3) << ") |";
      } else {
        md << " n/a |";
      }
    }
    md << '\n';
  };
  table("Average utility of team members", Metric::kTeamAverage, 2);
  table("Joint utility (product of all participants)", Metric::kJoint, 3);

  md << "\n## Agreement rate\n\n|";
  for (const auto& o : report.opponents) md << " | " << o;
  md << " |\n|---|";
  for (std::size_t i = 0; i < report.opponents.size(); ++i) md << "---|";
  md << '\n';
  for (const auto& team : report.teams) {
    md << "| " << team << " |";
    for (const auto& opponent : report.opponents) {
      const auto* a = report.find(team, opponent);
      md << ' ' << (a ? fixed(a->agreement_rate, 2) : std::string("-")) << " |";
    }
    md << '\n';
  }
  return md.str();
}

Json report_to_json(std::span<const SessionRecord> records,
                    const TournamentReport& report) {
  Json sessions = Json::array();
  for (const auto& r : records) sessions.push_back(to_json(r));
  Json aggregates = Json::array();
  for (const auto& a : report.aggregates) {
    aggregates.push_back(Json{{"team", a.team},
                              {"opponent", a.opponent},
                              {"sessions", a.sessions},
                              {"team_average", a.team_average},
                              {"team_min", a.team_min},
                              {"team_max", a.team_max},
                              {"joint", a.joint},
                              {"agreement_rate", a.agreement_rate}});
  }
  return Json{{"alpha", report.alpha},
              {"sessions", sessions},
              {"aggregates", aggregates},
              {"statistics",
               {{"team_average", comparison_json(report, Metric::kTeamAverage)},
                {"joint", comparison_json(report, Metric::kJoint)}}}};
}

std::vector<SessionRecord> records_from_report_json(const Json& j) {
  std::vector<SessionRecord> records;
  if (!j.contains("sessions")) throw ParseError("report JSON has no 'sessions' array");
  for (const auto& s : j.at("sessions")) records.push_back(session_record_from_json(s));
  return records;
}

std::string render_report(std::span<const SessionRecord> records, ReportFormat format,
                          double alpha) {
  switch (format) {
    case ReportFormat::kCsv:
      return render_sessions_csv(records);
    case ReportFormat::kJson:
      return report_to_json(records, build_report(records, alpha)).dump(2) + "\n";
    case ReportFormat::kMarkdown:
      return render_markdown(build_report(records, alpha));
  }
  return {};
}

}  // namespace teamneg
