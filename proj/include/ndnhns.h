/*
 * Copyright (c) 2026 The ndnhns Authors.
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

#ifndef NDNHNS_H
#define NDNHNS_H

/*
 * C API for the ndnhns library: hierarchical IoT content names with
 * attribute and self-certifying digest components, plus a deterministic
 * NDN campus simulator.
 *
 * Conventions:
 *  - Every fallible function returns ndnhns_status; NDNHNS_OK is 0.
 *  - On failure, ndnhns_last_error() describes the problem for the
 *    calling thread and ndnhns_last_error_offset() gives a byte offset
 *    into the offending input when one is known (-1 otherwise).
 *  - Output strings marked "caller frees" must be released with
 *    ndnhns_string_free(). Strings returned as const char* stay owned
 *    by the handle they came from.
 *  - Handles are opaque; each type has a matching _free function that
 *    accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NDNHNS_BUILDING_SHARED)
#    define NDNHNS_API __declspec(dllexport)
#  else
#    define NDNHNS_API __declspec(dllimport)
#  endif
#else
#  if defined(NDNHNS_BUILDING_SHARED)
#    define NDNHNS_API __attribute__((visibility("default")))
#  else
#    define NDNHNS_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ndnhns_status {
  NDNHNS_OK = 0,
  NDNHNS_ERR_INVALID_COMPONENT = 1,
  NDNHNS_ERR_SYNTAX = 2,
  NDNHNS_ERR_UNKNOWN_SCHEME = 3,
  NDNHNS_ERR_BAD_DIGEST = 4,
  NDNHNS_ERR_UNKNOWN_CODE = 5,
  NDNHNS_ERR_DUPLICATE_CODE = 6,
  NDNHNS_ERR_INVALID_CODE = 7,
  NDNHNS_ERR_OUT_OF_RANGE = 8,
  NDNHNS_ERR_MISSING_FLAT_COMPONENT = 9,
  NDNHNS_ERR_TRUNCATED_DIGEST = 10,
  NDNHNS_ERR_NOT_AN_ACTION = 11,
  NDNHNS_ERR_UNKNOWN_FACE = 12,
  NDNHNS_ERR_DISCONNECTED_TOPOLOGY = 13,
  NDNHNS_ERR_CONFIG = 14,
  NDNHNS_ERR_IO = 15,
  NDNHNS_ERR_NULL_ARGUMENT = 16,
  NDNHNS_ERR_INTERNAL = 17
} ndnhns_status;

typedef struct ndnhns_registry ndnhns_registry;
typedef struct ndnhns_name ndnhns_name;
typedef struct ndnhns_name_builder ndnhns_name_builder;
typedef struct ndnhns_sim_result ndnhns_sim_result;

NDNHNS_API const char* ndnhns_version(void);

/* Thread-local description of the most recent failure. */
NDNHNS_API const char* ndnhns_last_error(void);
NDNHNS_API long ndnhns_last_error_offset(void);

NDNHNS_API void ndnhns_string_free(char* s);

/*
 * Application category registry
 */

/* Built-in smart-campus category table (14 entries). */
NDNHNS_API ndnhns_status ndnhns_registry_default(ndnhns_registry** out);
/* Loads a tab-separated file: CODE<TAB>Title<TAB>Description per line. */
NDNHNS_API ndnhns_status ndnhns_registry_load(const char* path, ndnhns_registry** out);
NDNHNS_API ndnhns_status ndnhns_registry_save(const ndnhns_registry* reg, const char* path);
NDNHNS_API size_t ndnhns_registry_size(const ndnhns_registry* reg);
/* Entry at index; all three outputs are caller-freed, any may be NULL. */
NDNHNS_API ndnhns_status ndnhns_registry_entry(const ndnhns_registry* reg, size_t index,
                                               char** out_code, char** out_title,
                                               char** out_description);
NDNHNS_API ndnhns_status ndnhns_registry_lookup(const ndnhns_registry* reg, const char* code,
                                                char** out_title, char** out_description);
/* Returns a new registry extended by one entry; the original is untouched. */
NDNHNS_API ndnhns_status ndnhns_registry_add(const ndnhns_registry* reg, const char* code,
                                             const char* title, const char* description,
                                             ndnhns_registry** out);
NDNHNS_API void ndnhns_registry_free(ndnhns_registry* reg);

/*
 * Name construction
 */

NDNHNS_API ndnhns_status ndnhns_name_builder_new(ndnhns_name_builder** out);
NDNHNS_API void ndnhns_name_builder_free(ndnhns_name_builder* b);
/* 1..8 uppercase letters, e.g. "SBC". */
NDNHNS_API ndnhns_status ndnhns_builder_set_app_code(ndnhns_name_builder* b, const char* code);
/* All seven hierarchical portions, in order. */
NDNHNS_API ndnhns_status ndnhns_builder_set_hierarchy(ndnhns_name_builder* b,
                                                      const char* campus_name,
                                                      const char* campus_sub_name,
                                                      const char* location,
                                                      const char* sub_location,
                                                      const char* originator_id,
                                                      const char* content_super_type,
                                                      const char* content_sub_type);
NDNHNS_API ndnhns_status ndnhns_builder_add_attribute(ndnhns_name_builder* b, const char* key,
                                                      const char* value);
NDNHNS_API ndnhns_status ndnhns_builder_set_freshness_latest(ndnhns_name_builder* b);
NDNHNS_API ndnhns_status ndnhns_builder_set_freshness_oldest(ndnhns_name_builder* b);
NDNHNS_API ndnhns_status ndnhns_builder_set_freshness_generated_at(ndnhns_name_builder* b,
                                                                   uint64_t timestamp);
NDNHNS_API ndnhns_status ndnhns_builder_set_popularity(ndnhns_name_builder* b, uint64_t count);
/* task_type is "sense" or "action". */
NDNHNS_API ndnhns_status ndnhns_builder_set_task(ndnhns_name_builder* b, const char* task_type,
                                                 const char* sub_type);
/* Validates and produces a name; the builder stays reusable. */
NDNHNS_API ndnhns_status ndnhns_builder_build(const ndnhns_name_builder* b, ndnhns_name** out);

/*
 * Names
 */

/* Parses canonical text. lenient_digests accepts truncated hex digests. */
NDNHNS_API ndnhns_status ndnhns_name_parse(const char* text, int lenient_digests,
                                           ndnhns_name** out);
NDNHNS_API void ndnhns_name_free(ndnhns_name* name);
/* Canonical text; caller frees. */
NDNHNS_API ndnhns_status ndnhns_name_serialize(const ndnhns_name* name, char** out);
/* Structured JSON dump of all components; caller frees. */
NDNHNS_API ndnhns_status ndnhns_name_to_json(const ndnhns_name* name, char** out);
/* Returns a copy with a flat component computed over the hierarchy. */
NDNHNS_API ndnhns_status ndnhns_name_with_fc(const ndnhns_name* name, int use_base64,
                                             ndnhns_name** out);
/*
 * Recomputes the three digests and compares them to the carried flat
 * component. out_match is 1 when every digest agrees with the
 * recomputation; with lenient non-zero a truncated digest agrees when
 * it is a prefix of the recomputed one. out_report_json (optional,
 * caller frees) details each digest check. Fails with
 * NDNHNS_ERR_MISSING_FLAT_COMPONENT when no flat component is present,
 * or NDNHNS_ERR_TRUNCATED_DIGEST when digests are truncated and
 * lenient is 0.
 */
NDNHNS_API ndnhns_status ndnhns_name_verify(const ndnhns_name* name, int lenient, int* out_match,
                                            char** out_report_json);
/* Serialized prefix holding the first k (1..7) hierarchical portions. */
NDNHNS_API ndnhns_status ndnhns_name_prefix(const ndnhns_name* name, size_t k, char** out);
/* 1 when prefix_text (a serialized prefix) covers the name, else 0. */
NDNHNS_API ndnhns_status ndnhns_prefix_matches(const char* prefix_text, const ndnhns_name* name,
                                               int* out_match);
/* SHA-256 digests of the three identity fields; caller frees each. */
NDNHNS_API ndnhns_status ndnhns_compute_fc(const char* originator_id,
                                           const char* content_super_type,
                                           const char* content_sub_type, int use_base64,
                                           char** out_originator, char** out_super_type,
                                           char** out_sub_type);

/*
 * Simulation
 */

/* has_seed non-zero replaces the scenario's seed with seed_override. */
NDNHNS_API ndnhns_status ndnhns_sim_run_file(const char* path, int has_seed,
                                             uint64_t seed_override, ndnhns_sim_result** out);
NDNHNS_API ndnhns_status ndnhns_sim_run_json(const char* json_text, int has_seed,
                                             uint64_t seed_override, ndnhns_sim_result** out);
/* Returned strings stay owned by the result handle. */
NDNHNS_API const char* ndnhns_sim_trace(const ndnhns_sim_result* result);
NDNHNS_API const char* ndnhns_sim_metrics_json(const ndnhns_sim_result* result);
NDNHNS_API const char* ndnhns_sim_metrics_csv(const ndnhns_sim_result* result);
NDNHNS_API void ndnhns_sim_result_free(ndnhns_sim_result* result);

#ifdef __cplusplus
}
#endif

#endif /* NDNHNS_H */
