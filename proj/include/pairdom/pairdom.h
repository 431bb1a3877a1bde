/*
 * Copyright 2026 The pairdom Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the pairdom library.
 *
 * Every call returns a pd_status; on failure pd_last_error() describes the
 * problem for the calling thread. Strings handed out by the library are
 * released with pd_string_free, graphs with pd_graph_free. */

#ifndef PAIRDOM_PAIRDOM_H
#define PAIRDOM_PAIRDOM_H

#include <stddef.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_ERR_INVALID_ARGUMENT = 1,
  PD_ERR_OUT_OF_RANGE = 2,
  PD_ERR_PARSE = 3,
  PD_ERR_GUARD_EXCEEDED = 4,
  PD_ERR_UNDEFINED = 5,
  PD_ERR_IO = 6,
  PD_ERR_INTERNAL = 7
} pd_status;

typedef struct pd_graph pd_graph;

typedef struct pd_invariants {
  int gamma;
  int upper_gamma;
  /* -1 when the graph has an isolated vertex. */
  int gamma_pr;
  int upper_gamma_pr;
} pd_invariants;

typedef struct pd_class_flags {
  int connected;
  int bipartite;
  int unicyclic;
  int cactus;
  int c3_free;
  int girth; /* -1 for forests */
} pd_class_flags;

typedef enum pd_decide_mode { PD_DECIDE_BRUTE = 0, PD_DECIDE_FASTPATH = 1 } pd_decide_mode;

typedef void (*pd_line_sink)(const char* line, void* user);

PD_API const char* pd_version(void);
PD_API const char* pd_last_error(void);
PD_API const char* pd_status_name(pd_status status);

/* edges holds m pairs (u, v) as 2*m ints. */
PD_API pd_status pd_graph_build(int n, const int* edges, size_t m, pd_graph** out);
PD_API pd_status pd_graph_from_graph6(const char* line, pd_graph** out);
PD_API pd_status pd_graph_from_family(const char* spec, pd_graph** out);
PD_API void pd_graph_free(pd_graph* g);

PD_API int pd_graph_order(const pd_graph* g);
PD_API int pd_graph_size(const pd_graph* g);
PD_API pd_status pd_graph_to_graph6(const pd_graph* g, char** out);
PD_API void pd_string_free(char* s);

PD_API pd_status pd_graph_invariants(const pd_graph* g, pd_invariants* out);
PD_API pd_status pd_graph_classify(const pd_graph* g, pd_class_flags* out);
/* Family label such as "mK2(3)", "C5", "K1,t*^D(t=3,D=1)" or "none". */
PD_API pd_status pd_graph_family(const pd_graph* g, char** out);

/* Decides whether the upper paired domination number equals twice the upper
 * domination number. With PD_DECIDE_FASTPATH, *applicable is 0 when no
 * characterized class covers g and *holds is then left untouched. method may
 * be NULL. */
PD_API pd_status pd_decide(const pd_graph* g, pd_decide_mode mode, int* applicable, int* holds,
                           char** method);

/* One registered check as a JSON verdict; pd_list_checks gives the ids. */
PD_API pd_status pd_check(const pd_graph* g, const char* check_id, char** verdict_json);
PD_API pd_status pd_list_checks(char** json);

/* Runs a batch job described by a JSON config:
 *   {"command": "invariants|classify|decide|verify|hunt", "source": "...",
 *    "checks": [...], "decide_mode": "fastpath|brute|both", "jobs": N,
 *    "format": "json|text", "output": "path"}
 * Failing verdicts reach sink as JSON lines. report (may be NULL) receives
 * the rendered report, exit_code (may be NULL) 0 or 1. */
PD_API pd_status pd_run(const char* config_json, pd_line_sink sink, void* user, char** report,
                        int* exit_code);

/* Emits graph6 lines; see the CLI's gen command for the request syntax. */
PD_API pd_status pd_generate(const char* what, pd_line_sink sink, void* user);

#ifdef __cplusplus
}
#endif

#endif /* PAIRDOM_PAIRDOM_H */
