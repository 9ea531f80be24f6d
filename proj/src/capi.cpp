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

#include "teamneg/teamneg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "teamneg/error.hpp"
#include "teamneg/protocol.hpp"
#include "teamneg/report.hpp"
#include "teamneg/serialization.hpp"
#include "teamneg/tactics.hpp"
#include "teamneg/tournament.hpp"

struct teamneg_tournament {
  teamneg::TournamentConfig config;
  unsigned threads = 1;
  std::vector<teamneg::SessionRecord> records;
};

struct teamneg_records {
  std::vector<teamneg::SessionRecord> records;
};

namespace {

thread_local std::string g_last_error;

teamneg_status fail(teamneg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

teamneg_status status_of(teamneg::ErrorCode code) {
  switch (code) {
    case teamneg::ErrorCode::kInvalidArgument:
      return TEAMNEG_ERR_INVALID_ARGUMENT;
    case teamneg::ErrorCode::kConfig:
      return TEAMNEG_ERR_CONFIG;
    case teamneg::ErrorCode::kProtocolViolation:
      return TEAMNEG_ERR_PROTOCOL;
    case teamneg::ErrorCode::kIo:
      return TEAMNEG_ERR_IO;
    case teamneg::ErrorCode::kParse:
      return TEAMNEG_ERR_PARSE;
  }
  return TEAMNEG_ERR_INTERNAL;
}

template <typename F>
teamneg_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TEAMNEG_OK;
  } catch (const teamneg::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TEAMNEG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TEAMNEG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TEAMNEG_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw teamneg::InvalidArgument(std::string(what) + " must not be NULL");
}

teamneg::ReportFormat to_format(teamneg_format f) {
  switch (f) {
    case TEAMNEG_FORMAT_CSV:
      return teamneg::ReportFormat::kCsv;
    case TEAMNEG_FORMAT_JSON:
      return teamneg::ReportFormat::kJson;
    case TEAMNEG_FORMAT_MARKDOWN:
      return teamneg::ReportFormat::kMarkdown;
  }
  throw teamneg::InvalidArgument("unknown report format");
}

teamneg_status make_tournament(teamneg::TournamentConfig config,
                               teamneg_tournament** out) {
  return guard([&] {
    require(out, "out");
    config.validate();
    auto* t = new teamneg_tournament;
    t->config = std::move(config);
    *out = t;
  });
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string describe_outcome(const teamneg::Json& transcript) {
  const auto& o = transcript.at("outcome");
  std::string s = o.at("kind").get<std::string>() + " at round " +
                  std::to_string(o.at("round").get<int>()) + " after " +
                  std::to_string(transcript.at("actions").size()) + " actions";
  return s;
}

// First differing action index, or the number of actions when the prefixes
// agree.
std::size_t first_divergence(const teamneg::Json& a, const teamneg::Json& b) {
  const auto& x = a.at("actions");
  const auto& y = b.at("actions");
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  return i;
}

}  // namespace

extern "C" {

const char* teamneg_version(void) { return "0.1.0"; }

const char* teamneg_last_error(void) { return g_last_error.c_str(); }

void teamneg_string_free(char* s) { std::free(s); }

teamneg_status teamneg_tournament_from_file(const char* path, teamneg_tournament** out) {
  teamneg::TournamentConfig config;
  const auto st = guard([&] {
    require(path, "path");
    config = teamneg::load_tournament_config(path);
  });
  if (st != TEAMNEG_OK) return st;
  return make_tournament(std::move(config), out);
}

teamneg_status teamneg_tournament_from_json(const char* json, teamneg_tournament** out) {
  teamneg::TournamentConfig config;
  const auto st = guard([&] {
    require(json, "json");
    config = teamneg::tournament_config_from_json(teamneg::parse_json(json, "config"));
  });
  if (st != TEAMNEG_OK) return st;
  return make_tournament(std::move(config), out);
}

teamneg_status teamneg_tournament_desk(uint64_t seed, teamneg_tournament** out) {
  teamneg::TournamentConfig config;
  const auto st = guard([&] { config = teamneg::desk_tournament_config(seed); });
  if (st != TEAMNEG_OK) return st;
  return make_tournament(std::move(config), out);
}

void teamneg_tournament_free(teamneg_tournament* t) { delete t; }

teamneg_status teamneg_tournament_set_seed(teamneg_tournament* t, uint64_t seed) {
  return guard([&] {
    require(t, "tournament");
    t->config.master_seed = seed;
  });
}

teamneg_status teamneg_tournament_set_repetitions(teamneg_tournament* t, int repetitions) {
  return guard([&] {
    require(t, "tournament");
    if (repetitions < 1) throw teamneg::InvalidArgument("repetitions must be at least 1");
    t->config.repetitions = repetitions;
  });
}

teamneg_status teamneg_tournament_set_max_rounds(teamneg_tournament* t, int max_rounds) {
  return guard([&] {
    require(t, "tournament");
    if (max_rounds < 1) throw teamneg::InvalidArgument("max_rounds must be at least 1");
    t->config.max_rounds = max_rounds;
  });
}

teamneg_status teamneg_tournament_set_threads(teamneg_tournament* t, unsigned threads) {
  return guard([&] {
    require(t, "tournament");
    t->threads = threads;
  });
}

teamneg_status teamneg_tournament_config_json(const teamneg_tournament* t, char** out) {
  return guard([&] {
    require(t, "tournament");
    require(out, "out");
    *out = copy_string(teamneg::to_json(t->config).dump(2) + "\n");
  });
}

teamneg_status teamneg_tournament_run(teamneg_tournament* t, const char* transcript_dir) {
  return guard([&] {
    require(t, "tournament");
    teamneg::RunOptions options;
    options.threads = t->threads;
    if (transcript_dir) options.transcript_dir = std::filesystem::path(transcript_dir);
    t->records = teamneg::run_tournament(t->config, options);
  });
}

size_t teamneg_tournament_session_count(const teamneg_tournament* t) {
  return t ? t->records.size() : 0;
}

teamneg_status teamneg_tournament_records(const teamneg_tournament* t,
                                          teamneg_records** out) {
  return guard([&] {
    require(t, "tournament");
    require(out, "out");
    *out = new teamneg_records{t->records};
  });
}

teamneg_status teamneg_records_from_csv(const char* csv, teamneg_records** out) {
  return guard([&] {
    require(csv, "csv");
    require(out, "out");
    *out = new teamneg_records{teamneg::parse_sessions_csv(csv)};
  });
}

teamneg_status teamneg_records_load(const char* path, teamneg_records** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    const std::string p = path;
    const std::string text = teamneg::read_text_file(p);
    if (ends_with(p, ".json")) {
      *out = new teamneg_records{
          teamneg::records_from_report_json(teamneg::parse_json(text, p))};
    } else {
      *out = new teamneg_records{teamneg::parse_sessions_csv(text)};
    }
  });
}

size_t teamneg_records_count(const teamneg_records* r) {
  return r ? r->records.size() : 0;
}

teamneg_status teamneg_records_render(const teamneg_records* r, teamneg_format format,
                                      char** out) {
  return guard([&] {
    require(r, "records");
    require(out, "out");
    *out = copy_string(teamneg::render_report(r->records, to_format(format)));
  });
}

teamneg_status teamneg_records_write(const teamneg_records* r, teamneg_format format,
                                     const char* path) {
  return guard([&] {
    require(r, "records");
    require(path, "path");
    teamneg::write_text_file(path, teamneg::render_report(r->records, to_format(format)));
  });
}

void teamneg_records_free(teamneg_records* r) { delete r; }

teamneg_status teamneg_replay(const char* transcript_path, int* identical,
                              char** summary) {
  return guard([&] {
    require(transcript_path, "transcript_path");
    require(identical, "identical");
    const auto recorded = teamneg::parse_json(teamneg::read_text_file(transcript_path),
                                              transcript_path);
    if (!recorded.contains("session")) {
      throw teamneg::ParseError(std::string(transcript_path) +
                                ": transcript has no embedded session to replay");
    }
    const auto spec = teamneg::session_spec_from_json(recorded.at("session"));
    const auto run = teamneg::execute_session(spec);
    const auto replayed = teamneg::transcript_to_json(run.transcript, run.scores, &spec);

    const bool same = replayed.at("actions") == recorded.at("actions") &&
                      replayed.at("outcome") == recorded.at("outcome") &&
                      replayed.at("utilities") == recorded.at("utilities");
    *identical = same ? 1 : 0;
    std::string text;
    if (same) {
      text = "identical: " + describe_outcome(recorded);
    } else {
      const auto at = first_divergence(recorded, replayed);
      text = "different: recorded " + describe_outcome(recorded) + "; replayed " +
             describe_outcome(replayed) + "; first divergence at action " +
             std::to_string(at);
    }
    if (summary) *summary = copy_string(text);
  });
}

teamneg_status teamneg_session_run_json(const char* session_json, char** transcript_json) {
  return guard([&] {
    require(session_json, "session_json");
    require(transcript_json, "transcript_json");
    const auto spec =
        teamneg::session_spec_from_json(teamneg::parse_json(session_json, "session"));
    const auto run = teamneg::execute_session(spec);
    *transcript_json =
        copy_string(teamneg::transcript_to_json(run.transcript, run.scores, &spec).dump(1) +
                    "\n");
  });
}

teamneg_status teamneg_demand(double reservation_utility, double beta, double t,
                              double* out) {
  return guard([&] {
    require(out, "out");
    teamneg::TimeTactic tactic{reservation_utility, beta};
    tactic.validate();
    *out = teamneg::demand(tactic, t);
  });
}

}  // extern "C"
