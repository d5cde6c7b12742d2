/* Copyright 2026 The Authors.
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

/* C interface to the matroid mixed-volume library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** out-parameters are
 * allocated by the library and must be released with mv_string_free. On any
 * status other than MV_OK, mv_last_error() describes the failure; the
 * message is thread-local and valid until the next call on the same thread.
 */

#ifndef MIXEDVOL_MIXEDVOL_H_
#define MIXEDVOL_MIXEDVOL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#ifdef MIXEDVOL_BUILDING
#define MV_API __declspec(dllexport)
#else
#define MV_API __declspec(dllimport)
#endif
#else
#define MV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mv_matroid mv_matroid;
typedef struct mv_poly mv_poly;

typedef enum mv_status {
  MV_OK = 0,
  MV_INVALID_INPUT = 1, /* malformed document, invalid matroid, IO failure */
  MV_CHECK_FAILED = 2,  /* methods disagree or an invariant fails */
  MV_GENERICITY = 3,    /* no generic choice within the retry budget */
  MV_INTERNAL = 4       /* a runtime assertion failed */
} mv_status;

typedef enum mv_method {
  MV_METHOD_BRION = 0,
  MV_METHOD_DELETION = 1,
  MV_METHOD_BOTH = 2
} mv_method;

typedef struct mv_options {
  uint64_t seed;        /* generic-vector seed (first seed for compare) */
  unsigned threads;     /* worker threads, at least 1 */
  int retry_budget;     /* genericity retries; negative selects the default */
} mv_options;

MV_API mv_options mv_default_options(void);

MV_API const char* mv_version(void);
MV_API const char* mv_last_error(void);
MV_API void mv_string_free(char* s);

/* Matroids from {"ground_set":[...],"bases":[[...]]} or
 * {"ground_set":[...],"flats":[[],...]}. */
MV_API mv_status mv_matroid_from_json(const char* json, mv_matroid** out);
MV_API mv_status mv_matroid_from_file(const char* path, mv_matroid** out);
MV_API mv_status mv_matroid_to_json(const mv_matroid* m, char** out);
MV_API int mv_matroid_size(const mv_matroid* m);
MV_API int mv_matroid_rank(const mv_matroid* m);
MV_API void mv_matroid_free(mv_matroid* m);

/* Computes the mixed-volume polynomial. MV_METHOD_BOTH runs both methods
 * and returns MV_CHECK_FAILED (with no polynomial) if they differ. */
MV_API mv_status mv_compute(const mv_matroid* m, mv_method method, const mv_options* options,
                            mv_poly** out);

MV_API mv_status mv_poly_from_json(const char* json, mv_poly** out);
MV_API mv_status mv_poly_to_json(const mv_poly* p, char** out);
/* Terms like "-1/2·x{4}^2 + 1·x{4}x{1,4}". */
MV_API mv_status mv_poly_to_pretty(const mv_poly* p, char** out);
MV_API int mv_poly_degree(const mv_poly* p);
MV_API size_t mv_poly_term_count(const mv_poly* p);
MV_API int mv_poly_equal(const mv_poly* a, const mv_poly* b);
MV_API void mv_poly_free(mv_poly* p);

/* The invariant suite on `vol` (computed by deletion when NULL). Writes a
 * JSON report and returns MV_CHECK_FAILED if any check fails. */
MV_API mv_status mv_verify(const mv_matroid* m, const mv_poly* vol, int rank_checks,
                           const mv_options* options, char** report);

/* Deletion against Brion under seeds options->seed, ..., +seed_count-1,
 * plus the invariant suite. */
MV_API mv_status mv_compare(const mv_matroid* m, unsigned seed_count, const mv_options* options,
                            char** report);

/* Uniform matroids up to max_elements plus `count` random loopless ones
 * drawn from options->seed, each cross-validated under two seeds. */
MV_API mv_status mv_corpus(int max_elements, int count, const mv_options* options, char** report);

#ifdef __cplusplus
}
#endif

#endif /* MIXEDVOL_MIXEDVOL_H_ */
