#ifndef HAWKW_HAWKW_H
#define HAWKW_HAWKW_H

/*
 * hawkw: quantumness of a W state shared with observers hovering near a
 * Schwarzschild black hole.
 *
 * Bob's and Charlie's qubits are dilated by the Hawking-effect Bogoliubov
 * transformation into an exterior and an interior mode, giving the
 * five-mode register A, B, b, C, c. Three-mode reductions of that state
 * (optionally passed through identical amplitude-damping channels) are
 * scored with l1-norm coherence, first-order coherence, global concurrence
 * and concurrence-fill.
 *
 * Every function returns a status; on failure hawkw_last_error() holds a
 * message for the calling thread. Handles are opaque and must be released
 * with the matching *_destroy function (NULL is accepted).
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HAWKW_BUILDING)
#    define HAWKW_API __declspec(dllexport)
#  else
#    define HAWKW_API __declspec(dllimport)
#  endif
#else
#  define HAWKW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hawkw_status {
  HAWKW_OK = 0,
  HAWKW_ERR_INVALID_ARGUMENT = 1,
  HAWKW_ERR_OUT_OF_RANGE = 2,
  HAWKW_ERR_NULL_POINTER = 3,
  HAWKW_ERR_NUMERIC = 4,
  HAWKW_ERR_INTERNAL = 5
} hawkw_status;

/* Kept modes. AbC is the B<->C mirror of ABc and has no closed form. */
typedef enum hawkw_scenario {
  HAWKW_SCENARIO_ABC = 0,
  HAWKW_SCENARIO_Abc = 1,
  HAWKW_SCENARIO_ABc = 2,
  HAWKW_SCENARIO_AbC = 3
} hawkw_scenario;

/* Damped ABc entry table: CORRECTED fixes the c_22 / c_33 entries whose
 * published form is not trace preserving; PRINTED reproduces it. */
typedef enum hawkw_entry_table {
  HAWKW_TABLE_CORRECTED = 0,
  HAWKW_TABLE_PRINTED = 1
} hawkw_entry_table;

typedef enum hawkw_grid_scale {
  HAWKW_GRID_LINEAR = 0,
  HAWKW_GRID_LOG = 1
} hawkw_grid_scale;

typedef struct hawkw_mode_params {
  double temperature; /* may be +inf */
  double omega;
  double alpha;
  double beta;
} hawkw_mode_params;

typedef struct hawkw_report {
  double c_l1;
  double foc;      /* D */
  double gc;       /* Q */
  double cf;       /* F */
  double tradeoff; /* D^2 + F */
  int cf_clamped;  /* F radicand was negative beyond round-off */
} hawkw_report;

typedef struct hawkw_point {
  hawkw_scenario scenario;
  double temperature;
  double omega;
  int has_gamma; /* 0: no channel */
  double gamma;
} hawkw_point;

typedef struct hawkw_sweep_config {
  hawkw_scenario scenario;
  double omega;
  double t_min;
  double t_max;
  size_t t_points;
  hawkw_grid_scale t_scale;
  int has_gamma;
  double gamma;
  int include_limits; /* add T = 0 and T = +inf rows */
  unsigned workers;   /* 0: hardware concurrency */
} hawkw_sweep_config;

typedef struct hawkw_sweep_row {
  double temperature;
  double alpha;
  double beta;
  hawkw_report report;
} hawkw_sweep_row;

typedef struct hawkw_deviation {
  char quantity[32]; /* "matrix", "rho_B", "c_l1", ... */
  char entry[32];    /* symbolic entry such as "a_46"; empty for scalars */
  double numeric;
  double closed;
  double abs_dev;
} hawkw_deviation;

typedef struct hawkw_state hawkw_state;
typedef struct hawkw_sweep_result hawkw_sweep_result;
typedef struct hawkw_verify_result hawkw_verify_result;

HAWKW_API const char* hawkw_version(void);
HAWKW_API const char* hawkw_last_error(void);
HAWKW_API const char* hawkw_status_string(hawkw_status status);

HAWKW_API hawkw_status hawkw_scenario_parse(const char* name, hawkw_scenario* out);
HAWKW_API const char* hawkw_scenario_name(hawkw_scenario scenario);

/* Bogoliubov coefficients; T = 0 and T = INFINITY are exact limits. */
HAWKW_API hawkw_status hawkw_bogoliubov(double temperature, double omega, hawkw_mode_params* out);
HAWKW_API hawkw_status hawkw_temperature_from_mass(double mass, double* out);

/* ---- density matrices ---- */

/* Reduced three-mode state computed from the dilated pure state. */
HAWKW_API hawkw_status hawkw_state_create(hawkw_scenario scenario, double temperature, double omega,
                                          hawkw_state** out);
/* The same state assembled from the analytic entry tables. */
HAWKW_API hawkw_status hawkw_state_create_closed_form(hawkw_scenario scenario, double temperature,
                                                      double omega, int has_gamma, double gamma,
                                                      hawkw_entry_table table, hawkw_state** out);
/* Amplitude damping with probability gamma on every qubit, in place. */
HAWKW_API hawkw_status hawkw_state_apply_damping(hawkw_state* state, double gamma);
HAWKW_API hawkw_status hawkw_state_dim(const hawkw_state* state, size_t* out);
HAWKW_API hawkw_status hawkw_state_entry(const hawkw_state* state, size_t row, size_t col, double* re,
                                         double* im);
HAWKW_API hawkw_status hawkw_state_measures(const hawkw_state* state, hawkw_report* out);
/* Hermitian / trace / PSD check; `valid` is 1 when all three pass. */
HAWKW_API hawkw_status hawkw_state_check(const hawkw_state* state, double* hermitian_error,
                                         double* trace_error, double* min_eigenvalue, int* valid);
HAWKW_API void hawkw_state_destroy(hawkw_state* state);

/* ---- point evaluation ---- */

/* `params_out` may be NULL. */
HAWKW_API hawkw_status hawkw_evaluate(const hawkw_point* point, hawkw_mode_params* params_out,
                                      hawkw_report* out);
HAWKW_API hawkw_status hawkw_closed_form(const hawkw_point* point, hawkw_entry_table table,
                                         hawkw_report* out);

/* ---- oracle verification ---- */

HAWKW_API hawkw_status hawkw_verify(const hawkw_point* point, hawkw_entry_table table,
                                    hawkw_verify_result** out);
HAWKW_API hawkw_status hawkw_verify_result_count(const hawkw_verify_result* result, size_t* out);
HAWKW_API hawkw_status hawkw_verify_result_item(const hawkw_verify_result* result, size_t index,
                                                hawkw_deviation* out);
HAWKW_API hawkw_status hawkw_verify_result_worst(const hawkw_verify_result* result, hawkw_deviation* out,
                                                 int* clamp_agrees);
HAWKW_API void hawkw_verify_result_destroy(hawkw_verify_result* result);

/* ---- sweeps ---- */

HAWKW_API void hawkw_sweep_config_init(hawkw_sweep_config* config);
/* Writes `points` strictly increasing temperatures into `out`. */
HAWKW_API hawkw_status hawkw_temperature_grid(double t_min, double t_max, size_t points,
                                              hawkw_grid_scale scale, double* out);
HAWKW_API hawkw_status hawkw_sweep_run(const hawkw_sweep_config* config, hawkw_sweep_result** out);
HAWKW_API hawkw_status hawkw_sweep_result_size(const hawkw_sweep_result* result, size_t* out);
HAWKW_API hawkw_status hawkw_sweep_result_row(const hawkw_sweep_result* result, size_t index,
                                              hawkw_sweep_row* out);
HAWKW_API void hawkw_sweep_result_destroy(hawkw_sweep_result* result);

#ifdef __cplusplus
}
#endif

#endif /* HAWKW_HAWKW_H */
