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

/* C interface to the teamneg simulator. All strings are UTF-8 and
 * NUL-terminated. Strings returned through `char**` out-parameters are owned
 * by the caller and must be released with teamneg_string_free(). On failure a
 * function returns a non-zero status and teamneg_last_error() describes it;
 * the message is per thread and valid until the next call on that thread. */
#ifndef TEAMNEG_TEAMNEG_H_
#define TEAMNEG_TEAMNEG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TEAMNEG_BUILDING_LIBRARY)
#define TEAMNEG_API __declspec(dllexport)
#else
#define TEAMNEG_API __declspec(dllimport)
#endif
#else
#define TEAMNEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum teamneg_status {
  TEAMNEG_OK = 0,
  TEAMNEG_ERR_INVALID_ARGUMENT = 1,
  TEAMNEG_ERR_CONFIG = 2,
  TEAMNEG_ERR_PROTOCOL = 3,
  TEAMNEG_ERR_IO = 4,
  TEAMNEG_ERR_PARSE = 5,
  TEAMNEG_ERR_INTERNAL = 100
} teamneg_status;

typedef enum teamneg_format {
  TEAMNEG_FORMAT_CSV = 0,
  TEAMNEG_FORMAT_JSON = 1,
  TEAMNEG_FORMAT_MARKDOWN = 2
} teamneg_format;

typedef struct teamneg_tournament teamneg_tournament;
typedef struct teamneg_records teamneg_records;

TEAMNEG_API const char* teamneg_version(void);
TEAMNEG_API const char* teamneg_last_error(void);
TEAMNEG_API void teamneg_string_free(char* s);

/* Tournament configuration. */
TEAMNEG_API teamneg_status teamneg_tournament_from_file(const char* path,
                                                        teamneg_tournament** out);
TEAMNEG_API teamneg_status teamneg_tournament_from_json(const char* json,
                                                        teamneg_tournament** out);
/* The built-in hotel-booking tournament (7 team configurations, 5 opponents). */
TEAMNEG_API teamneg_status teamneg_tournament_desk(uint64_t seed,
                                                   teamneg_tournament** out);
TEAMNEG_API void teamneg_tournament_free(teamneg_tournament* t);

/* Setters reject out-of-range values with TEAMNEG_ERR_INVALID_ARGUMENT. */
TEAMNEG_API teamneg_status teamneg_tournament_set_seed(teamneg_tournament* t,
                                                       uint64_t seed);
TEAMNEG_API teamneg_status teamneg_tournament_set_repetitions(teamneg_tournament* t,
                                                              int repetitions);
TEAMNEG_API teamneg_status teamneg_tournament_set_max_rounds(teamneg_tournament* t,
                                                             int max_rounds);
/* 0 uses the hardware concurrency. */
TEAMNEG_API teamneg_status teamneg_tournament_set_threads(teamneg_tournament* t,
                                                          unsigned threads);
TEAMNEG_API teamneg_status teamneg_tournament_config_json(const teamneg_tournament* t,
                                                          char** out);

/* Runs every session. When `transcript_dir` is non-NULL one JSON transcript
 * per session is written there. The resulting records replace any earlier
 * ones held by `t`. */
TEAMNEG_API teamneg_status teamneg_tournament_run(teamneg_tournament* t,
                                                  const char* transcript_dir);
TEAMNEG_API size_t teamneg_tournament_session_count(const teamneg_tournament* t);
/* Copies the records of the last run into a new handle. */
TEAMNEG_API teamneg_status teamneg_tournament_records(const teamneg_tournament* t,
                                                      teamneg_records** out);

/* Session records. */
TEAMNEG_API teamneg_status teamneg_records_from_csv(const char* csv,
                                                    teamneg_records** out);
/* Reads a sessions CSV file, or a JSON report when the path ends in .json. */
TEAMNEG_API teamneg_status teamneg_records_load(const char* path,
                                                teamneg_records** out);
TEAMNEG_API size_t teamneg_records_count(const teamneg_records* r);
TEAMNEG_API teamneg_status teamneg_records_render(const teamneg_records* r,
                                                  teamneg_format format, char** out);
TEAMNEG_API teamneg_status teamneg_records_write(const teamneg_records* r,
                                                 teamneg_format format,
                                                 const char* path);
TEAMNEG_API void teamneg_records_free(teamneg_records* r);

/* Re-runs the session embedded in a transcript file and compares the result
 * with the recorded one. `identical` receives 1 on an exact match. */
TEAMNEG_API teamneg_status teamneg_replay(const char* transcript_path, int* identical,
                                          char** summary);
/* Runs one session described by a session JSON object and returns its
 * transcript. */
TEAMNEG_API teamneg_status teamneg_session_run_json(const char* session_json,
                                                    char** transcript_json);

TEAMNEG_API teamneg_status teamneg_demand(double reservation_utility, double beta,
                                          double t, double* out);

#ifdef __cplusplus
}
#endif

#endif /* TEAMNEG_TEAMNEG_H_ */
