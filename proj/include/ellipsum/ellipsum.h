/*
 * Copyright 2026 The Ellipsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef ELLIPSUM_ELLIPSUM_H
#define ELLIPSUM_ELLIPSUM_H

/* C interface to the verification engine. Strings returned through char**
 * are owned by the caller and released with ellipsum_string_free. Report
 * sets are opaque and released with ellipsum_reports_free. All functions
 * are safe to call concurrently; the last error message is per thread. */

#include <stddef.h>

#if defined(ELLIPSUM_BUILDING_LIBRARY)
#define ELLIPSUM_API __attribute__((visibility("default")))
#else
#define ELLIPSUM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ellipsum_status {
  ELLIPSUM_OK = 0,
  ELLIPSUM_E_UNKNOWN_IDENTITY = 1,
  ELLIPSUM_E_INVALID_PARAMS = 2,
  ELLIPSUM_E_UNSUPPORTED_RANGE = 3,
  ELLIPSUM_E_RANGE_TOO_LARGE = 4,
  ELLIPSUM_E_INVALID_POINTS = 5,
  ELLIPSUM_E_TRUNCATION_TOO_SMALL = 6,
  ELLIPSUM_E_ARITHMETIC = 7, /* zero divisor, pole, singular matrix, ... */
  ELLIPSUM_E_NULL_ARGUMENT = 8,
  ELLIPSUM_E_INTERNAL = 9
} ellipsum_status;

typedef struct ellipsum_reports ellipsum_reports;

ELLIPSUM_API const char* ellipsum_version(void);
ELLIPSUM_API const char* ellipsum_status_name(ellipsum_status status);
/* Message of the last failed call on this thread ("" if none). */
ELLIPSUM_API const char* ellipsum_last_error(void);
ELLIPSUM_API void ellipsum_string_free(char* s);

/* JSON array of catalog rows. */
ELLIPSUM_API ellipsum_status ellipsum_catalog_json(char** out_json);
/* JSON array of tags matching a glob (* and ?), in catalog order. */
ELLIPSUM_API ellipsum_status ellipsum_match_tags(const char* pattern, char** out_json);
/* JSON array of resolved parameter objects, one per job. overrides_json
 * may be NULL or a JSON object. */
ELLIPSUM_API ellipsum_status ellipsum_plan(const char* tag, const char* overrides_json, char** out_json);

ELLIPSUM_API ellipsum_status ellipsum_run_job(const char* tag, const char* resolved_json, ellipsum_reports** out);
ELLIPSUM_API ellipsum_status ellipsum_verify(const char* tag, const char* params_json, ellipsum_reports** out);
ELLIPSUM_API size_t ellipsum_reports_count(const ellipsum_reports* reports);
/* 1 if every report passed, 0 otherwise (also for NULL). */
ELLIPSUM_API int ellipsum_reports_all_pass(const ellipsum_reports* reports);
ELLIPSUM_API ellipsum_status ellipsum_reports_json(const ellipsum_reports* reports, size_t index, char** out_json);
ELLIPSUM_API void ellipsum_reports_free(ellipsum_reports* reports);

/* Representation counts for n = 1..nmax as a JSON array of
 * {"n", "oracle", "formula", "match"}. kind is "squares" or "triangles".
 * With using_tag (may be NULL) the formula column comes from that count
 * identity at size m, which must count the same k summands. */
ELLIPSUM_API ellipsum_status ellipsum_count_table(const char* kind, unsigned k, long nmax, const char* using_tag,
                                                  unsigned m, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ELLIPSUM_ELLIPSUM_H */
