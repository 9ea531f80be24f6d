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

// Command-line front end. Talks to the simulator only through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "teamneg/teamneg.h"

namespace {

namespace fs = std::filesystem;

int report_error(const char* context, teamneg_status status) {
  std::fprintf(stderr, "teamneg: %s: %s\n", context, teamneg_last_error());
  return static_cast<int>(status);
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<int> max_rounds;
  unsigned threads = 1;
  std::string out = "out";
  bool no_transcripts = false;
};

int cmd_run(const RunArgs& a) {
  teamneg_tournament* t = nullptr;
  teamneg_status st = a.config.empty()
                          ? teamneg_tournament_desk(a.seed.value_or(2013), &t)
                          : teamneg_tournament_from_file(a.config.c_str(), &t);
  if (st != TEAMNEG_OK) return report_error("loading configuration", st);

  if (a.seed && st == TEAMNEG_OK) st = teamneg_tournament_set_seed(t, *a.seed);
  if (a.reps && st == TEAMNEG_OK) st = teamneg_tournament_set_repetitions(t, *a.reps);
  if (a.max_rounds && st == TEAMNEG_OK) {
    st = teamneg_tournament_set_max_rounds(t, *a.max_rounds);
  }
  if (st == TEAMNEG_OK) st = teamneg_tournament_set_threads(t, a.threads);
  if (st != TEAMNEG_OK) {
    teamneg_tournament_free(t);
    return report_error("configuring tournament", st);
  }

  std::error_code ec;
  const fs::path out = a.out;
  const fs::path transcripts = out / "transcripts";
  fs::create_directories(a.no_transcripts ? out : transcripts, ec);
  if (ec) {
    std::fprintf(stderr, "teamneg: cannot create %s: %s\n", out.c_str(),
                 ec.message().c_str());
    teamneg_tournament_free(t);
    return TEAMNEG_ERR_IO;
  }

  char* config_json = nullptr;
  st = teamneg_tournament_config_json(t, &config_json);
  if (st == TEAMNEG_OK) {
    if (std::FILE* f = std::fopen((out / "config.json").c_str(), "w")) {
      std::fputs(config_json, f);
      std::fclose(f);
    }
    teamneg_string_free(config_json);
  }

  st = teamneg_tournament_run(t, a.no_transcripts ? nullptr : transcripts.c_str());
  if (st != TEAMNEG_OK) {
    teamneg_tournament_free(t);
    return report_error("running tournament", st);
  }

  teamneg_records* r = nullptr;
  st = teamneg_tournament_records(t, &r);
  const std::size_t sessions = teamneg_tournament_session_count(t);
  teamneg_tournament_free(t);
  if (st != TEAMNEG_OK) return report_error("collecting records", st);

  st = teamneg_records_write(r, TEAMNEG_FORMAT_CSV, (out / "sessions.csv").c_str());
  if (st == TEAMNEG_OK) {
    st = teamneg_records_write(r, TEAMNEG_FORMAT_MARKDOWN, (out / "report.md").c_str());
  }
  teamneg_records_free(r);
  if (st != TEAMNEG_OK) return report_error("writing results", st);

  std::printf("%zu sessions written to %s\n", sessions, out.c_str());
  return 0;
}

int cmd_report(const std::string& in, const std::string& format) {
  fs::path source = in;
  if (fs::is_directory(source)) source /= "sessions.csv";
  teamneg_format f = TEAMNEG_FORMAT_MARKDOWN;
  if (format == "csv") {
    f = TEAMNEG_FORMAT_CSV;
  } else if (format == "json") {
    f = TEAMNEG_FORMAT_JSON;
  }

  teamneg_records* r = nullptr;
  teamneg_status st = teamneg_records_load(source.c_str(), &r);
  if (st != TEAMNEG_OK) return report_error("reading records", st);
  char* text = nullptr;
  st = teamneg_records_render(r, f, &text);
  teamneg_records_free(r);
  if (st != TEAMNEG_OK) return report_error("rendering report", st);
  std::fputs(text, stdout);
  teamneg_string_free(text);
  return 0;
}

int cmd_replay(const std::string& transcript) {
  int identical = 0;
  char* summary = nullptr;
  const teamneg_status st = teamneg_replay(transcript.c_str(), &identical, &summary);
  if (st != TEAMNEG_OK) return report_error("replaying transcript", st);
  std::printf("%s\n", summary);
  teamneg_string_free(summary);
  return identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team negotiation simulator"};
  app.set_version_flag("--version", std::string(teamneg_version()));
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a tournament");
  run->add_option("--config", run_args.config,
                  "Tournament JSON (default: the built-in hotel-booking tournament)")
      ->check(CLI::ExistingFile);
  run->add_option("--seed", run_args.seed, "Master seed");
  run->add_option("--reps", run_args.reps, "Repetitions per pairing")
      ->check(CLI::PositiveNumber);
  run->add_option("--max-rounds", run_args.max_rounds, "Round limit per session")
      ->check(CLI::PositiveNumber);
  run->add_option("--threads", run_args.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  run->add_option("--out", run_args.out, "Output directory")->capture_default_str();
  run->add_flag("--no-transcripts", run_args.no_transcripts,
                "Skip per-session transcript files");

  std::string report_in;
  std::string report_format = "markdown";
  auto* report = app.add_subcommand("report", "Summarise stored session records");
  report->add_option("--in", report_in, "Run directory, sessions CSV or JSON report")
      ->required()
      ->check(CLI::ExistingPath);
  report->add_option("--format", report_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();

  std::string transcript;
  auto* replay = app.add_subcommand("replay", "Re-run a transcript and compare");
  replay->add_option("--transcript", transcript, "Transcript JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*run) return cmd_run(run_args);
  if (*report) return cmd_report(report_in, report_format);
  if (*replay) return cmd_replay(transcript);
  return 0;
}
