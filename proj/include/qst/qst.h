/* Copyright 2026 The qudit-transfer Authors
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

/* C interface to the qudit state-transfer simulator.
 *
 * Every function returns a qst_status. On failure the message is available from
 * qst_last_error() on the same thread until the next call. Handles are opaque and owned by
 * the caller; release them with the matching *_free function. Strings returned through
 * char** out-parameters are released with qst_string_free. Frequencies crossing this
 * interface are ordinary frequencies f = omega / 2pi in MHz. */

#ifndef QST_QST_H_
#define QST_QST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QST_BUILDING_LIBRARY)
#define QST_API __attribute__((visibility("default")))
#else
#define QST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qst_status {
  QST_OK = 0,
  QST_ERR_INVALID_ARGUMENT = 1,
  QST_ERR_NULL_POINTER = 2,
  QST_ERR_IO = 3,
  QST_ERR_PARSE = 4,
  QST_ERR_INTEGRATION = 5,
  QST_ERR_INTERNAL = 6
} qst_status;

typedef struct qst_params qst_params;
typedef struct qst_schedule qst_schedule;
typedef struct qst_evolution qst_evolution;
typedef struct qst_sweep_config qst_sweep_config;
typedef struct qst_sweep_result qst_sweep_result;

QST_API const char* qst_version(void);
QST_API const char* qst_last_error(void);
QST_API void qst_string_free(char* s);

/* Model parameters. `preset` is "paper" (d in 3..5) or "ideal" (any d >= 2). */
QST_API qst_status qst_params_preset(const char* preset, int d, qst_params** out);
/* Parameters, input state and integrator settings from a config file. */
QST_API qst_status qst_params_from_config(const char* path, qst_params** out);
QST_API qst_status qst_params_set_couplings(qst_params* p, double g_mhz, double omega_mhz);
QST_API qst_status qst_params_set_realism(qst_params* p, int on);
QST_API qst_status qst_params_set_rates(qst_params* p, int on);
QST_API qst_status qst_params_set_n_max(qst_params* p, int n_max);
QST_API qst_status qst_params_dimension(const qst_params* p, int* d);
QST_API qst_status qst_params_couplings(const qst_params* p, double* g1_mhz, double* g2_mhz,
                                        double* omega_mhz);
QST_API void qst_params_free(qst_params* p);

/* Pulse schedules. */
QST_API qst_status qst_schedule_compile(const qst_params* p, qst_schedule** out);
QST_API qst_status qst_schedule_from_json(const char* text, qst_schedule** out);
QST_API qst_status qst_schedule_load(const char* path, qst_schedule** out);
QST_API qst_status qst_schedule_segment_count(const qst_schedule* s, size_t* count);
QST_API qst_status qst_schedule_total_duration(const qst_schedule* s, double* seconds);
QST_API qst_status qst_schedule_to_json(const qst_schedule* s, char** json);
QST_API qst_status qst_schedule_save(const qst_schedule* s, const char* path);
QST_API void qst_schedule_free(qst_schedule* s);

typedef struct qst_simulate_options {
  double dt_scale;             /* <= 0 selects the configured value */
  const char* trajectory_path; /* NULL: no trajectory */
  int sample_stride;           /* <= 0 selects the default */
} qst_simulate_options;

typedef struct qst_diagnostics {
  double max_trace_drift;
  double min_eigenvalue;
  double max_hermiticity_error;
  double peak_multi_photon_population;
  double peak_top_fock_population;
  long steps;
} qst_diagnostics;

/* Master-equation run of the transfer protocol at the couplings stored in `p`.
 * coeff_re/coeff_im hold n = d input coefficients; pass n = 0 for the configured state
 * (uniform unless a config file set one). `schedule` may be NULL to compile from `p`.
 * `options` may be NULL. */
QST_API qst_status qst_simulate(const qst_params* p, const qst_schedule* schedule,
                                const double* coeff_re, const double* coeff_im, size_t n,
                                const qst_simulate_options* options, qst_evolution** out);
QST_API qst_status qst_evolution_fidelity(const qst_evolution* e, double* fidelity);
QST_API qst_status qst_evolution_diagnostics(const qst_evolution* e, qst_diagnostics* out);
QST_API qst_status qst_evolution_warning_count(const qst_evolution* e, size_t* count);
/* Borrowed pointer, valid while `e` lives. */
QST_API qst_status qst_evolution_warning(const qst_evolution* e, size_t i, const char** text);
QST_API void qst_evolution_free(qst_evolution* e);

/* (g, Omega) sweeps. */
QST_API qst_status qst_sweep_config_load(const char* path, qst_sweep_config** out);
QST_API qst_status qst_sweep_config_set_workers(qst_sweep_config* c, int workers);
QST_API void qst_sweep_config_free(qst_sweep_config* c);

typedef void (*qst_progress_fn)(size_t done, size_t total, void* user);
/* `progress` may be called from worker threads, one call at a time. */
QST_API qst_status qst_sweep_run(const qst_sweep_config* c, qst_progress_fn progress, void* user,
                                 qst_sweep_result** out);
QST_API qst_status qst_sweep_cell_count(const qst_sweep_result* r, size_t* count);
/* Cells in grid order (g major). `fidelity` is NaN and `ok` is 0 for a diverged cell. */
QST_API qst_status qst_sweep_cell(const qst_sweep_result* r, size_t i, double* g_mhz,
                                  double* omega_mhz, double* fidelity, int* ok);
QST_API qst_status qst_sweep_failed_count(const qst_sweep_result* r, size_t* count);
/* QST_ERR_INVALID_ARGUMENT when every cell failed. */
QST_API qst_status qst_sweep_optimum(const qst_sweep_result* r, double* g_mhz, double* omega_mhz,
                                     double* fidelity);
QST_API qst_status qst_sweep_write_csv(const qst_sweep_result* r, const char* path);
QST_API qst_status qst_sweep_write_heatmap(const qst_sweep_result* r, const char* path);
QST_API void qst_sweep_result_free(qst_sweep_result* r);

/* Oracle and invariant self-checks. */
typedef void (*qst_check_fn)(const char* name, int passed, const char* detail, void* user);
QST_API qst_status qst_verify_run(uint64_t seed, qst_check_fn on_check, void* user,
                                  size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* QST_QST_H_ */
