// Copyright 2026 the actemb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to libactemb: count-based activity embeddings for event logs.
 *
 * All objects are opaque handles released with their matching *_free call.
 * Every fallible call returns an actemb_status; on failure the thread-local
 * actemb_last_error() holds a message. Strings returned by accessors stay
 * valid for the lifetime of the owning handle.
 */
#ifndef ACTEMB_ACTEMB_H
#define ACTEMB_ACTEMB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ACTEMB_BUILDING)
#    define ACTEMB_API __declspec(dllexport)
#  else
#    define ACTEMB_API __declspec(dllimport)
#  endif
#else
#  define ACTEMB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum actemb_status {
    ACTEMB_OK = 0,
    ACTEMB_ERR_FORMAT = 1,
    ACTEMB_ERR_EMPTY_LOG = 2,
    ACTEMB_ERR_PARAMETER = 3,
    ACTEMB_ERR_DATA = 4,
    ACTEMB_ERR_IO = 5,
    ACTEMB_ERR_INTERNAL = 6
} actemb_status;

typedef enum actemb_method {
    ACTEMB_METHOD_AA = 0,
    ACTEMB_METHOD_AC = 1,
    ACTEMB_METHOD_SUBSTITUTION = 2
} actemb_method;

typedef enum actemb_context {
    ACTEMB_CONTEXT_MSET = 0,
    ACTEMB_CONTEXT_SEQ = 1
} actemb_context;

typedef enum actemb_weighting {
    ACTEMB_WEIGHT_NONE = 0,
    ACTEMB_WEIGHT_PMI = 1,
    ACTEMB_WEIGHT_PPMI = 2
} actemb_weighting;

typedef enum actemb_flavor {
    ACTEMB_FLAVOR_COSINE = 0,
    ACTEMB_FLAVOR_SUBSTITUTION = 1
} actemb_flavor;

typedef struct actemb_config {
    actemb_method method;
    actemb_context context;
    actemb_weighting weighting;
    int window;
} actemb_config;

typedef struct actemb_log actemb_log;
typedef struct actemb_embedding actemb_embedding;
typedef struct actemb_similarity actemb_similarity;

typedef struct actemb_intrinsic_summary {
    size_t jobs;      /* ground-truth logs in the plan */
    size_t scored;    /* (job, config) pairs scored */
    size_t failed;    /* (job, config) pairs that failed */
} actemb_intrinsic_summary;

typedef struct actemb_bench_summary {
    size_t records;
    size_t failed;
} actemb_bench_summary;

ACTEMB_API const char* actemb_version(void);
ACTEMB_API int actemb_schema_version(void);
ACTEMB_API const char* actemb_last_error(void);
ACTEMB_API const char* actemb_status_string(actemb_status status);

/* ---- event logs ------------------------------------------------------- */

/* time_col may be NULL (file order is kept). */
ACTEMB_API actemb_status actemb_log_parse_csv(const char* text, size_t len, const char* case_col,
                                              const char* activity_col, const char* time_col,
                                              actemb_log** out);
ACTEMB_API actemb_status actemb_log_parse_xes(const char* text, size_t len, actemb_log** out);
/* format is "csv" or "xes". The column arguments are ignored for XES. */
ACTEMB_API actemb_status actemb_log_load(const char* path, const char* format,
                                         const char* case_col, const char* activity_col,
                                         const char* time_col, actemb_log** out);
ACTEMB_API void actemb_log_free(actemb_log* log);

ACTEMB_API size_t actemb_log_trace_count(const actemb_log* log);
ACTEMB_API size_t actemb_log_event_count(const actemb_log* log);
ACTEMB_API size_t actemb_log_activity_count(const actemb_log* log);

/* Rank-frequency CSV plus a JSON summary; either path may be NULL. */
ACTEMB_API actemb_status actemb_log_write_stats(const actemb_log* log, const char* csv_path,
                                                const char* json_path);
/* Canonical "case,activity" CSV. */
ACTEMB_API actemb_status actemb_log_write_csv(const actemb_log* log, const char* path);

/* Replaces the given activities by pools of w new activities and writes the
   derived log (canonical CSV) and its class map ({new: original} JSON). */
ACTEMB_API actemb_status actemb_ground_truth_write(const actemb_log* log,
                                                   const char* const* selected, size_t n_selected,
                                                   int w, uint64_t seed, const char* csv_path,
                                                   const char* classes_json_path);

/* ---- embeddings and similarities -------------------------------------- */

ACTEMB_API actemb_status actemb_config_validate(const actemb_config* config);

/* AA or AC matrix; substitution configs are rejected. */
ACTEMB_API actemb_status actemb_embed(const actemb_log* log, const actemb_config* config,
                                      unsigned threads, actemb_embedding** out);
ACTEMB_API void actemb_embedding_free(actemb_embedding* embedding);
ACTEMB_API size_t actemb_embedding_rows(const actemb_embedding* embedding);
ACTEMB_API size_t actemb_embedding_cols(const actemb_embedding* embedding);
/* Returns 0 for out-of-range indices. */
ACTEMB_API double actemb_embedding_value(const actemb_embedding* embedding, size_t row,
                                         size_t col);
ACTEMB_API const char* actemb_embedding_row_label(const actemb_embedding* embedding, size_t row);
ACTEMB_API const char* actemb_embedding_col_label(const actemb_embedding* embedding, size_t col);
/* meta_path may be NULL. */
ACTEMB_API actemb_status actemb_embedding_write(const actemb_embedding* embedding,
                                                const char* csv_path, const char* meta_path);

/* Cosine similarities of the embedding rows, or substitution scores. */
ACTEMB_API actemb_status actemb_similarity_compute(const actemb_log* log,
                                                   const actemb_config* config, unsigned threads,
                                                   actemb_similarity** out);
ACTEMB_API void actemb_similarity_free(actemb_similarity* sim);
ACTEMB_API size_t actemb_similarity_size(const actemb_similarity* sim);
ACTEMB_API actemb_flavor actemb_similarity_flavor(const actemb_similarity* sim);
ACTEMB_API double actemb_similarity_value(const actemb_similarity* sim, size_t i, size_t j);
ACTEMB_API const char* actemb_similarity_label(const actemb_similarity* sim, size_t i);
/* Distance CSV (1 - s for cosine, raw scores otherwise) and sidecar JSON. */
ACTEMB_API actemb_status actemb_similarity_write(const actemb_similarity* sim,
                                                 const char* csv_path, const char* meta_path);

ACTEMB_API actemb_status actemb_cosine_distance(const double* u, const double* v, size_t n,
                                                double* out);

/* ---- benchmarks -------------------------------------------------------- */

/* Full ground-truth plan for every config. Writes per-job scores (JSON) and
   the aggregate table (CSV); aggregate_csv_path may be NULL. Returns ACTEMB_OK
   unless setup fails or every (job, config) pair fails (ACTEMB_ERR_DATA). */
ACTEMB_API actemb_status actemb_run_intrinsic(const actemb_log* log, const char* log_id,
                                              const actemb_config* configs, size_t n_configs,
                                              uint64_t seed, size_t samples, unsigned threads,
                                              const char* scores_json_path,
                                              const char* aggregate_csv_path,
                                              actemb_intrinsic_summary* summary);

/* Two-level mean over several score reports (one per original log). */
ACTEMB_API actemb_status actemb_aggregate_reports(const char* const* score_json_paths,
                                                  size_t n_paths, const char* aggregate_csv_path);

/* csv_path may be NULL. */
ACTEMB_API actemb_status actemb_run_bench(const actemb_log* log, const char* log_id,
                                          const actemb_config* configs, size_t n_configs,
                                          int repetitions, unsigned threads,
                                          const char* json_path, const char* csv_path,
                                          actemb_bench_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* ACTEMB_ACTEMB_H */
