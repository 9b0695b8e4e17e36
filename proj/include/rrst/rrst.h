// Copyright 2026 The Authors.
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

#ifndef RRST_RRST_H_
#define RRST_RRST_H_

#include <stdint.h>

#if defined(_WIN32)
#define RRST_API __declspec(dllexport)
#else
#define RRST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rrst_problem rrst_problem;
typedef struct rrst_solution rrst_solution;

typedef enum rrst_status {
  RRST_OK = 0,
  RRST_ERROR_IO = 1,
  RRST_ERROR_VALIDATION = 2,
  RRST_ERROR_VERIFICATION = 3,
  RRST_ERROR_INTERNAL = 4,
  RRST_ERROR_PARSE = 5,
  RRST_ERROR_LIMIT = 6,
  RRST_ERROR_ARGUMENT = 7,
} rrst_status;

typedef enum rrst_fixing { RRST_FIXING_BATCH = 0, RRST_FIXING_STRICT = 1 } rrst_fixing;
typedef enum rrst_separation {
  RRST_SEPARATION_MINCUT = 0,
  RRST_SEPARATION_EXHAUSTIVE = 1,
} rrst_separation;
typedef enum rrst_finish { RRST_FINISH_GREEDY = 0, RRST_FINISH_LP = 1 } rrst_finish;

typedef struct rrst_options {
  rrst_fixing fixing;
  rrst_separation separation;
  rrst_finish finish;
  /* Nonzero: add every violated cut per round instead of the most violated. */
  int all_cuts;
  /* Nonzero: seed each program with the cuts tight at the previous vertex. */
  int carry_cuts;
  /* Optional path; every solved program is appended in text form. */
  const char* lp_dump_path;
} rrst_options;

typedef struct rrst_stats {
  int iterations;
  int lp_solves;
  int cuts_x;
  int cuts_y;
} rrst_stats;

typedef struct rrst_gen_params {
  int nodes;
  double density;
  int k;
  int cost_max;
  uint64_t seed;
} rrst_gen_params;

/* Static strings. */
RRST_API const char* rrst_version(void);
RRST_API const char* rrst_status_name(rrst_status status);
/* Message of the last failed call on this thread ("" if none). */
RRST_API const char* rrst_last_error(void);

RRST_API void rrst_default_options(rrst_options* options);

/* Spanning tree instance, or matroid instance when the document has a
 * "family" key. */
RRST_API rrst_status rrst_problem_from_json(const char* text, rrst_problem** out);
RRST_API rrst_status rrst_problem_load(const char* path, rrst_problem** out);
RRST_API void rrst_problem_free(rrst_problem* problem);
RRST_API int rrst_problem_is_matroid(const rrst_problem* problem);
/* nodes is 0 for non-graphic matroids. */
RRST_API rrst_status rrst_problem_summary(const rrst_problem* problem, int* nodes,
                                          int* elements, int* k);

/* as_matroid: solve a graph instance through its graphic matroid. */
RRST_API rrst_status rrst_solve(const rrst_problem* problem, const rrst_options* options,
                                int as_matroid, rrst_solution** out);
RRST_API void rrst_solution_free(rrst_solution* solution);
RRST_API rrst_status rrst_solution_json(const rrst_solution* solution, char** out);
RRST_API rrst_status rrst_solution_trace_json(const rrst_solution* solution, char** out);
RRST_API rrst_status rrst_solution_total(const rrst_solution* solution, char** out);
RRST_API rrst_status rrst_solution_stats(const rrst_solution* solution, rrst_stats* out);

/* Brute-force optimum as {"X","Y","total","pairs_examined"}. */
RRST_API rrst_status rrst_oracle(const rrst_problem* problem, char** out);

/* Solver against oracle: one JSON report object. The call succeeds even when
 * they disagree; read the "agree" field. */
RRST_API rrst_status rrst_compare(const rrst_problem* problem, const rrst_options* options,
                                  char** out);

/* RRST_ERROR_VERIFICATION with *failure naming the first failed check. */
RRST_API rrst_status rrst_verify(const rrst_problem* problem, const char* solution_json,
                                 char** failure);

RRST_API rrst_status rrst_generate(const rrst_gen_params* params, char** out);
/* JSON array of {"name", "instance"} for every connected graph on at most
 * max_nodes (<= 6) nodes, every k and three cost patterns. */
RRST_API rrst_status rrst_builtin_suite(int max_nodes, char** out);

RRST_API void rrst_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* RRST_RRST_H_ */
