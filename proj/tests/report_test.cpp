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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "teamneg/error.hpp"
#include "teamneg/random.hpp"

namespace teamneg {
namespace {

SessionRecord make(std::string team, std::string opponent, int rep,
                   std::vector<double> members, double opp) {
  SessionRecord r;
  r.team = std::move(team);
  r.opponent = std::move(opponent);
  r.repetition = rep;
  r.seed = 1000u + static_cast<std::uint64_t>(rep);
  r.initiator = rep % 2 == 0 ? PartyRole::kTeam : PartyRole::kOpponent;
  const bool agreed = opp > 0.0;
  r.outcome = agreed ? OutcomeKind::kAgreement : OutcomeKind::kDeadline;
  r.rounds = agreed ? 10 + rep : 1000;
  r.time = r.rounds / 1000.0;
  r.member_utilities = members;
  r.opponent_utility = opp;
  double sum = 0.0, lo = 1.0, hi = 0.0, joint = opp;
  for (double u : members) {
    sum += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    joint *= u;
  }
  r.team_average = sum / static_cast<double>(members.size());
  r.team_min = lo;
  r.team_max = hi;
  r.joint = joint;
  r.betas = {0.5, 0.6, 0.7};
  return r;
}

std::vector<SessionRecord> sample_records() {
  Rng rng(7);
  std::vector<SessionRecord> out;
  for (const char* team : {"Strong", "Weak"}) {
    for (const char* opp : {"Crazy", "Haggler", "K", "TFT", "Smith"}) {
      for (int rep = 0; rep < 6; ++rep) {
        const double centre = std::string(team) == "Strong" ? 0.8 : 0.2;
        std::vector<double> members;
        for (int m = 0; m < 3; ++m) members.push_back(centre + 0.05 * uniform(rng, -1.0, 1.0));
        out.push_back(make(team, opp, rep, members, rep == 5 ? 0.0 : 0.1 * uniform01(rng) + 0.5));
        if (rep == 5) {
          auto& r = out.back();
          r.member_utilities = {0.0, 0.0, 0.0};
          r.team_average = r.team_min = r.team_max = r.joint = 0.0;
        }
      }
    }
  }
  return out;
}

TEST(SessionsCsv, EmptyIsHeaderOnly) {
  const std::string csv = render_sessions_csv({});
  EXPECT_EQ(csv,
            "team,opponent,repetition,seed,initiator,outcome,rounds,time,member_utilities,"
            "opponent_utility,team_average,team_min,team_max,joint,betas\n");
  EXPECT_TRUE(parse_sessions_csv(csv).empty());
}

TEST(SessionsCsv, RoundTripIsExact) {
  const auto records = sample_records();
  const std::string csv = render_sessions_csv(records);
  EXPECT_EQ(parse_sessions_csv(csv), records);
  EXPECT_EQ(render_sessions_csv(parse_sessions_csv(csv)), csv);
}

TEST(SessionsCsv, QuotesLabelsWithCommas) {
  std::vector<SessionRecord> records{make("FUM, fast", "K \"like\"", 0, {0.5, 0.5, 0.5}, 0.5)};
  EXPECT_EQ(parse_sessions_csv(render_sessions_csv(records)), records);
}

TEST(SessionsCsv, RejectsMalformedInput) {
  EXPECT_THROW(parse_sessions_csv(""), ParseError);
  EXPECT_THROW(parse_sessions_csv("team,opponent\n"), ParseError);
  std::string csv = render_sessions_csv(sample_records());
  csv += "a,b,c\n";
  EXPECT_THROW(parse_sessions_csv(csv), ParseError);
}

TEST(ReportJson, RoundTrip) {
  const auto records = sample_records();
  const auto report = build_report(records);
  const Json j = report_to_json(records, report);
  EXPECT_EQ(records_from_report_json(j), records);
  EXPECT_EQ(j.at("aggregates").size(), 10u);
  EXPECT_THROW(records_from_report_json(Json::object()), ParseError);
}

TEST(Aggregate, MeansIncludeFailures) {
  std::vector<SessionRecord> records{
      make("T", "O", 0, {0.6, 0.6, 0.6}, 0.5),
      make("T", "O", 1, {0.0, 0.0, 0.0}, 0.0),
  };
  const auto a = aggregate(records);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].sessions, 2u);
  EXPECT_DOUBLE_EQ(a[0].team_average, 0.3);
  EXPECT_DOUBLE_EQ(a[0].agreement_rate, 0.5);
  EXPECT_DOUBLE_EQ(a[0].joint, 0.6 * 0.6 * 0.6 * 0.5 / 2.0);
  EXPECT_THROW(aggregate({}), InvalidArgument);
}

TEST(Aggregate, FirstAppearanceOrder) {
  const auto a = aggregate(sample_records());
  ASSERT_EQ(a.size(), 10u);
  EXPECT_EQ(a[0].team, "Strong");
  EXPECT_EQ(a[0].opponent, "Crazy");
  EXPECT_EQ(a[4].opponent, "Smith");
  EXPECT_EQ(a[5].team, "Weak");
}

TEST(Report, BestMarksFollowStatistics) {
  const auto records = sample_records();
  const auto report = build_report(records);
  EXPECT_EQ(report.opponents,
            (std::vector<std::string>{"Crazy", "Haggler", "K", "TFT", "Smith"}));
  for (const auto& opp : report.opponents) {
    EXPECT_TRUE(report.is_best(Metric::kTeamAverage, "Strong", opp));
    EXPECT_FALSE(report.is_best(Metric::kTeamAverage, "Weak", opp));
  }
  EXPECT_FALSE(report.is_best(Metric::kTeamAverage, "Nobody", "K"));
}

TEST(Report, SingleTeamHasNoComparison) {
  std::vector<SessionRecord> records{make("T", "O", 0, {0.6, 0.6, 0.6}, 0.5),
                                     make("T", "O", 1, {0.5, 0.5, 0.5}, 0.5)};
  const auto report = build_report(records);
  ASSERT_EQ(report.team_average_stats.size(), 1u);
  EXPECT_FALSE(report.team_average_stats[0].comparison.has_value());
  EXPECT_NE(render_markdown(report).find("n/a"), std::string::npos);
}

TEST(Markdown, LayoutAndBold) {
  const auto records = sample_records();
  const std::string md = render_markdown(build_report(records));
  EXPECT_EQ(md.rfind("# Tournament report", 0), 0u);
  EXPECT_NE(md.find("| | Crazy | Haggler | K | TFT | Smith |"), std::string::npos);
  EXPECT_NE(md.find("## Average utility of team members"), std::string::npos);
  EXPECT_NE(md.find("## Joint utility"), std::string::npos);
  EXPECT_NE(md.find("## Agreement rate"), std::string::npos);
  EXPECT_NE(md.find("| Strong | **"), std::string::npos);
  EXPECT_EQ(md.find("| Weak | **"), std::string::npos);
  EXPECT_NE(md.find("| ANOVA F (p) |"), std::string::npos);
}

TEST(Markdown, EmptyReport) {
  EXPECT_NE(render_markdown(build_report({})).find("No sessions."), std::string::npos);
}

TEST(ReportFormat, Parsing) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_EQ(parse_report_format("markdown"), ReportFormat::kMarkdown);
  EXPECT_EQ(parse_report_format("md"), ReportFormat::kMarkdown);
  EXPECT_THROW(parse_report_format("xml"), InvalidArgument);
}

TEST(RenderReport, EveryFormatIsDeterministic) {
  const auto records = sample_records();
  for (auto f : {ReportFormat::kCsv, ReportFormat::kJson, ReportFormat::kMarkdown}) {
    EXPECT_EQ(render_report(records, f), render_report(records, f));
  }
  EXPECT_EQ(render_report(records, ReportFormat::kCsv), render_sessions_csv(records));
}

}  // namespace
}  // namespace teamneg
