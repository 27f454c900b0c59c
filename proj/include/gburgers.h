#ifndef GBURGERS_H
#define GBURGERS_H

/* C interface to the gburgers solver library.
 *
 * All objects are opaque handles created and destroyed by this API.  Every
 * fallible call returns a gb_status; on failure gb_last_error_message()
 * describes what went wrong (the message is thread-local and overwritten by
 * the next failing call on the same thread).  Out-parameters are written only
 * on GB_OK.  Handles are never freed by failing calls.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gb_status {
  GB_OK = 0,
  GB_ERR_INVALID_ARGUMENT = 1, /* null handle, bad index, misuse of the API */
  GB_ERR_CONFIG = 2,           /* rejected configuration value */
  GB_ERR_DOMAIN = 3,           /* input outside the mathematical domain */
  GB_ERR_NUMERICAL = 4,        /* instability, blowup, CFL violation */
  GB_ERR_IO = 5,               /* file missing or malformed */
  GB_ERR_INTERNAL = 6          /* unexpected failure */
} gb_status;

typedef enum gb_scheme {
  GB_SCHEME_GODUNOV_UPWIND = 0,
  GB_SCHEME_LAX_FRIEDRICHS = 1
} gb_scheme;

typedef struct gb_grid gb_grid;     /* uniform 1D grid */
typedef struct gb_field gb_field;   /* cell-averaged profile on a grid */
typedef struct gb_result gb_result; /* snapshots, psi, ledgers of one run */
typedef struct gb_mesa gb_mesa;     /* obstacle projection output (v, psi) */
typedef struct gb_table gb_table;   /* parameter/error/ratio study table */
typedef struct gb_report gb_report; /* named bound checks with slack */

const char* gb_version(void);
const char* gb_last_error_message(void);

/* Looks up a named tolerance from the library's central table (for example
 * "entropy_residual_dx", "conservation_defect_abs", "mass_ledger_rel"). */
gb_status gb_tolerance(const char* name, double* out);

/* ---- grid ---- */

gb_status gb_grid_create(double xmin, double xmax, int n, gb_grid** out);
void gb_grid_destroy(gb_grid* g);
gb_status gb_grid_n(const gb_grid* g, int* out);
gb_status gb_grid_xmin(const gb_grid* g, double* out);
gb_status gb_grid_xmax(const gb_grid* g, double* out);
gb_status gb_grid_dx(const gb_grid* g, double* out);

/* ---- fields ---- */

/* values may be NULL for an all-zero field; otherwise it must hold n cells. */
gb_status gb_field_create(const gb_grid* g, const double* values, gb_field** out);
gb_status gb_field_from_box(const gb_grid* g, double height, double a, double b, gb_field** out);
gb_status gb_field_from_multibox(const gb_grid* g, const double* heights, const double* as,
                                 const double* bs, int count, gb_field** out);
gb_status gb_field_from_bump(const gb_grid* g, double height, double center, double width,
                             gb_field** out);
gb_status gb_field_from_samples(const gb_grid* g, const char* csv_path, gb_field** out);
void gb_field_destroy(gb_field* f);

gb_status gb_field_size(const gb_field* f, int* out);
/* copies all cells into out, which must hold gb_field_size entries */
gb_status gb_field_values(const gb_field* f, double* out);
gb_status gb_field_total_mass(const gb_field* f, double* out);
gb_status gb_field_linf(const gb_field* f, double* out);
gb_status gb_field_l1_window(const gb_field* f, double a, double b, double* out);
gb_status gb_field_l1_distance(const gb_field* a, const gb_field* b, double* out);

gb_status gb_field_write_csv(const gb_field* f, const char* path);
/* reconstructs the grid from the x column */
gb_status gb_field_read_csv(const char* path, gb_field** out);

/* ---- model scalars ---- */

gb_status gb_flux(double u, double m, double* out);
gb_status gb_flux_deriv(double u, double m, double* out);
gb_status gb_absorb_exact(double u, double p, double dt, double* out);
gb_status gb_decay_bound(double m, double t, double mass0, double* out);
gb_status gb_p_barrier(double p, double t, double linf0, double* out);
gb_status gb_speed_bound(double m, double linf0, double* out);

/* ---- running the solvers ---- */

typedef struct gb_run_params {
  double m;                     /* flux exponent, > 1 */
  double p;                     /* absorption exponent, > 1 when absorption is on */
  int absorption;               /* 0 or 1 */
  double t_end;                 /* > 0 */
  const double* snapshot_times; /* strictly increasing, within [0, t_end] */
  int n_snapshot_times;
  int scheme;                   /* gb_scheme value */
  double cfl;                   /* in (0,1); pass 0 for the default 0.45 */
  double epsilon;               /* viscosity, used by gb_run_viscous only */
} gb_run_params;

gb_status gb_run(const gb_field* initial, const gb_run_params* params, gb_result** out);
gb_status gb_run_viscous(const gb_field* initial, const gb_run_params* params, gb_result** out);
void gb_result_destroy(gb_result* r);

gb_status gb_result_snapshot_count(const gb_result* r, int* out);
gb_status gb_result_time(const gb_result* r, int idx, double* out);
gb_status gb_result_snapshot(const gb_result* r, int idx, gb_field** out);
gb_status gb_result_psi_snapshot(const gb_result* r, int idx, gb_field** out);
gb_status gb_result_mass_at(const gb_result* r, int idx, double* out);
gb_status gb_result_absorbed_at(const gb_result* r, int idx, double* out);
gb_status gb_result_outflow_at(const gb_result* r, int idx, double* out);
gb_status gb_result_psi(const gb_result* r, gb_field** out);
gb_status gb_result_absorbed_mass(const gb_result* r, double* out);
gb_status gb_result_outflow(const gb_result* r, double* out);
gb_status gb_result_step_count(const gb_result* r, long* out);
gb_status gb_result_warning_count(const gb_result* r, int* out);
/* copies the warning text, NUL-terminated, truncating to cap bytes */
gb_status gb_result_warning(const gb_result* r, int idx, char* buf, int cap);

/* ---- singular limits ---- */

gb_status gb_mesa_project(const gb_field* u0, gb_mesa** out);
void gb_mesa_destroy(gb_mesa* m);
gb_status gb_mesa_v(const gb_mesa* m, gb_field** out);
gb_status gb_mesa_psi(const gb_mesa* m, gb_field** out);

gb_status gb_truncate_at_one(const gb_field* u0, gb_field** out);
gb_status gb_ode_limit_solution(const gb_field* v0, double p, double t, gb_field** out);
gb_status gb_predicted_m_limit(const gb_field* u0, double p, double t, gb_field** out);
gb_status gb_iterated_limits_gap(const gb_field* u0, double* out);

/* ---- checks and studies ---- */

gb_status gb_entropy_residual(const gb_result* r, double k, double m, double p, double* out);
gb_status gb_conservation_defect(const gb_result* r, double* out);
gb_status gb_audit_bounds(const gb_result* r, gb_report** out);
gb_status gb_contraction_check(const gb_result* a, const gb_result* b, double R, double N,
                               gb_report** out);
gb_status gb_psi_time_independence(const gb_result* r, double t1, double t2, double* out);
gb_status gb_psi_time_difference_bound(double m, double mass0, double t1, double t2, double* out);

void gb_report_destroy(gb_report* rep);
gb_status gb_report_check_count(const gb_report* rep, int* out);
gb_status gb_report_name(const gb_report* rep, int idx, char* buf, int cap);
gb_status gb_report_slack(const gb_report* rep, int idx, double* out);
gb_status gb_report_tolerance(const gb_report* rep, int idx, double* out);
gb_status gb_report_pass(const gb_report* rep, int idx, int* out);
gb_status gb_report_all_pass(const gb_report* rep, int* out);

/* Error against predicted_m_limit(u0, p, t) over times, for each m value. */
gb_status gb_study_limit_m(const gb_field* u0, double p, const double* m_values, int n_values,
                           const double* times, int n_times, double window_a, double window_b,
                           int scheme, double cfl, gb_table** out);
/* Error against the absorption-off run of min(u0, 1) over times, per p value. */
gb_status gb_study_limit_p(const gb_field* u0, double m, const double* p_values, int n_values,
                           const double* times, int n_times, double window_a, double window_b,
                           int scheme, double cfl, gb_table** out);
/* L1 distance at time t between the viscous run at each epsilon and the
 * hyperbolic run of the same data. */
gb_status gb_study_viscous(const gb_field* u0, const gb_run_params* params,
                           const double* eps_values, int n_values, double t, gb_table** out);

void gb_table_destroy(gb_table* t);
gb_status gb_table_row_count(const gb_table* t, int* out);
gb_status gb_table_row(const gb_table* t, int idx, double* parameter, double* error,
                       double* ratio);
gb_status gb_table_norm(const gb_table* t, char* buf, int cap);

#ifdef __cplusplus
}
#endif

#endif /* GBURGERS_H */
