// Copyright 2026 The Flagkit Authors
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

/* C interface to flagkit: opaque handles, status codes, library-owned strings.
 *
 * Every function returns FK_OK or an error status; the message of the last
 * failure on the calling thread is available from fk_last_error(). Strings
 * returned through `char **` outputs are released with fk_string_free().
 */
#ifndef FLAGKIT_FLAGKIT_H
#define FLAGKIT_FLAGKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FLAGKIT_BUILDING_LIBRARY)
#define FLAGKIT_API __attribute__((visibility("default")))
#else
#define FLAGKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
    FK_OK = 0,
    FK_ERR_ARGUMENT = 1,
    FK_ERR_PARSE = 2,
    FK_ERR_DIMENSION = 3,
    FK_ERR_RESOURCE = 4,
    FK_ERR_CLASSIFICATION = 5,
    FK_ERR_COMPATIBILITY = 6,
    FK_ERR_DEGENERATE_POSTSELECTION = 7,
    FK_ERR_CAP_EXHAUSTED = 8,
    FK_ERR_IO = 9,
    FK_ERR_INTERNAL = 10
} fk_status;

typedef struct fk_circuit fk_circuit;
typedef struct fk_config fk_config;

FLAGKIT_API const char *fk_version(void);
FLAGKIT_API const char *fk_status_name(fk_status status);
FLAGKIT_API const char *fk_last_error(void);
FLAGKIT_API void fk_string_free(char *s);

/* Circuits. */
FLAGKIT_API fk_status fk_circuit_parse(const char *text, fk_circuit **out);
/* Built-in name ("magic", "zzzzz", "zzzzz:<n>:<theta>") or file path. */
FLAGKIT_API fk_status fk_circuit_load(const char *name_or_path, fk_circuit **out);
FLAGKIT_API void fk_circuit_free(fk_circuit *c);
FLAGKIT_API fk_status fk_circuit_width(const fk_circuit *c, size_t *out);
FLAGKIT_API fk_status fk_circuit_num_moments(const fk_circuit *c, size_t *out);
FLAGKIT_API fk_status fk_circuit_num_gates(const fk_circuit *c, size_t *out);
FLAGKIT_API fk_status fk_circuit_serialize(const fk_circuit *c, char **out);
FLAGKIT_API fk_status fk_circuit_compile_native(const fk_circuit *c, fk_circuit **out);

/* Pauli operators use the text form "+IXYZ". */
FLAGKIT_API fk_status fk_pauli_commutes(const char *a, const char *b, int *out);
/* P' over moments [begin, end). */
FLAGKIT_API fk_status fk_disentangling_operator(const fk_circuit *c, const char *flag, size_t begin, size_t end,
                                                char **out);
/* *compatible is 1 or 0; *detail (may be NULL) receives the first violation or "". */
FLAGKIT_API fk_status fk_check_compatibility(const fk_circuit *c, const char *flag, size_t begin, size_t end,
                                             int *compatible, char **detail);

/* Experiment configuration. Defaults: circuit "magic", depolarizing, default grid,
 * 500 flags, 100 pairs, seed 0, circuit default section, weight-penalized detection-count scoring. */
FLAGKIT_API fk_status fk_config_new(fk_config **out);
FLAGKIT_API void fk_config_free(fk_config *cfg);
FLAGKIT_API fk_status fk_config_set_circuit(fk_config *cfg, const char *name_or_path);
/* "depolarizing", "crosstalk" or "overrotation". */
FLAGKIT_API fk_status fk_config_set_model(fk_config *cfg, const char *model);
FLAGKIT_API fk_status fk_config_set_crosstalk_ratio(fk_config *cfg, double ratio);
FLAGKIT_API fk_status fk_config_set_grid(fk_config *cfg, const double *values, size_t count);
FLAGKIT_API fk_status fk_config_set_flags(fk_config *cfg, size_t n_flags);
FLAGKIT_API fk_status fk_config_set_pairs(fk_config *cfg, size_t n_pairs);
FLAGKIT_API fk_status fk_config_set_seed(fk_config *cfg, uint64_t seed);
FLAGKIT_API fk_status fk_config_set_section(fk_config *cfg, size_t begin, size_t end);
FLAGKIT_API fk_status fk_config_set_input(fk_config *cfg, const char *input);
FLAGKIT_API fk_status fk_config_set_exact_scoring(fk_config *cfg, int enabled);
FLAGKIT_API fk_status fk_config_set_max_pair_overlap(fk_config *cfg, size_t overlap);
FLAGKIT_API fk_status fk_config_set_workers(fk_config *cfg, size_t workers);

/* Ranked flag table as CSV (flag_entangle,flag_disentangle,weight_P,weight_Pprime,n_detected,q). */
FLAGKIT_API fk_status fk_run_rank(const fk_config *cfg, char **csv);
/* Single-flag sweep: record CSV plus JSON summary (either output may be NULL). */
FLAGKIT_API fk_status fk_run_sweep(const fk_config *cfg, char **csv, char **summary_json);
/* Nested-pair sweep with joint post-selection. */
FLAGKIT_API fk_status fk_run_pair_sweep(const fk_config *cfg, char **csv, char **summary_json);
/* JSON explanation of one flag on the configured circuit, model and section,
 * scored at the first grid value. */
FLAGKIT_API fk_status fk_explain(const fk_config *cfg, const char *flag, char **json);

#ifdef __cplusplus
}
#endif

#endif
