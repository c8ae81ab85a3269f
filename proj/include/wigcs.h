/*
 * wigcs - discrete Wigner functions, phase-space line tomography and
 * sparse reconstruction from subsampled line measurements.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; every call returns a wigcs_status
 * and reports results through out-parameters. On failure the thread-local
 * message from wigcs_last_error() describes what went wrong.
 */

#ifndef WIGCS_H
#define WIGCS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef WIGCS_API
#if defined(_WIN32)
#define WIGCS_API __declspec(dllexport)
#else
#define WIGCS_API __attribute__((visibility("default")))
#endif
#endif

typedef enum wigcs_status {
  WIGCS_OK = 0,
  WIGCS_ERR_INVALID_ARGUMENT = 1,
  WIGCS_ERR_DIMENSION = 2,
  WIGCS_ERR_NOT_HERMITIAN = 3,
  WIGCS_ERR_TOLERANCE = 4,
  WIGCS_ERR_DIVERGED = 5,
  WIGCS_ERR_RANK_DEFICIENT = 6,
  WIGCS_ERR_NO_SPARSE_SOLUTION = 7,
  WIGCS_ERR_IO = 8,
  WIGCS_ERR_INTERNAL = 9
} wigcs_status;

typedef struct wigcs_density wigcs_density;   /* d x d density matrix */
typedef struct wigcs_grid wigcs_grid;         /* d x d Wigner grid */
typedef struct wigcs_matrix wigcs_matrix;     /* line-incidence rows (full or subset) */
typedef struct wigcs_measurements wigcs_measurements; /* measured line sums */
typedef struct wigcs_report wigcs_report;     /* reconstruction outcome */

WIGCS_API const char *wigcs_version(void);
WIGCS_API const char *wigcs_status_name(wigcs_status status);
/* Message from the most recent failing call on this thread. */
WIGCS_API const char *wigcs_last_error(void);

/* ---- reference states ------------------------------------------------- */

WIGCS_API wigcs_status wigcs_density_fock(int d, int level, wigcs_density **out);
WIGCS_API wigcs_status wigcs_density_coherent(int d, double amplitude, double phase,
                                              wigcs_density **out);
WIGCS_API wigcs_status wigcs_density_maximally_mixed(int d, wigcs_density **out);
WIGCS_API wigcs_status wigcs_density_random(int d, uint64_t seed, int rank,
                                            wigcs_density **out);
WIGCS_API wigcs_status wigcs_density_dim(const wigcs_density *rho, int *d);
/* Entry (a, b), real and imaginary parts. */
WIGCS_API wigcs_status wigcs_density_entry(const wigcs_density *rho, int a, int b,
                                           double *re, double *im);
WIGCS_API void wigcs_density_free(wigcs_density *rho);

/* ---- Wigner grids ------------------------------------------------------ */

WIGCS_API wigcs_status wigcs_wigner_from_density(const wigcs_density *rho, wigcs_grid **out);
WIGCS_API wigcs_status wigcs_density_from_wigner(const wigcs_grid *w, wigcs_density **out);
/* Closed-form grid of the finite-dimensional coherent state. */
WIGCS_API wigcs_status wigcs_coherent_wigner(int d, double amplitude, double phase,
                                             wigcs_grid **out);
/* values holds d*d doubles in raster order (index = m*d + mu). */
WIGCS_API wigcs_status wigcs_grid_create(int d, const double *values, wigcs_grid **out);
WIGCS_API wigcs_status wigcs_grid_dim(const wigcs_grid *w, int *d);
WIGCS_API wigcs_status wigcs_grid_values(const wigcs_grid *w, double *values);
WIGCS_API wigcs_status wigcs_grid_write_csv(const wigcs_grid *w, const char *path);
WIGCS_API wigcs_status wigcs_grid_read_csv(const char *path, wigcs_grid **out);
WIGCS_API wigcs_status wigcs_grid_write_pgm(const wigcs_grid *w, const char *path);
WIGCS_API void wigcs_grid_free(wigcs_grid *w);

/* ---- line geometry and measurement ------------------------------------ */

/* All (d+1)*d phase-space lines; d must be an odd prime. */
WIGCS_API wigcs_status wigcs_matrix_full(int d, wigcs_matrix **out);
/* Seeded subsampling; mode is "row-random" or "family-random". */
WIGCS_API wigcs_status wigcs_matrix_sample(const wigcs_matrix *full, const char *mode,
                                           int count, uint64_t seed, wigcs_matrix **out);
/* Explicit selection of full-matrix row indices. */
WIGCS_API wigcs_status wigcs_matrix_select(const wigcs_matrix *full, const int *rows,
                                           int count, wigcs_matrix **out);
/* Rebuilds the sensing rows recorded in a plan file. */
WIGCS_API wigcs_status wigcs_matrix_from_plan_file(const char *path, wigcs_matrix **out);
WIGCS_API wigcs_status wigcs_matrix_rows(const wigcs_matrix *m, int *rows);
WIGCS_API wigcs_status wigcs_matrix_cols(const wigcs_matrix *m, int *cols);
WIGCS_API wigcs_status wigcs_matrix_row_indices(const wigcs_matrix *m, int *indices);
/* Dense 0/1 entries, row-major rows x cols. */
WIGCS_API wigcs_status wigcs_matrix_dense(const wigcs_matrix *m, double *entries);
WIGCS_API wigcs_status wigcs_matrix_write_plan(const wigcs_matrix *m, const char *path);
WIGCS_API void wigcs_matrix_free(wigcs_matrix *m);

WIGCS_API wigcs_status wigcs_measure(const wigcs_grid *w, const wigcs_matrix *m,
                                     wigcs_measurements **out);
WIGCS_API wigcs_status wigcs_measurements_count(const wigcs_measurements *mv, int *count);
WIGCS_API wigcs_status wigcs_measurements_values(const wigcs_measurements *mv, double *values);
WIGCS_API wigcs_status wigcs_measurements_row_indices(const wigcs_measurements *mv,
                                                      int *indices);
WIGCS_API wigcs_status wigcs_measurements_write(const wigcs_measurements *mv, int d,
                                                const char *path);
WIGCS_API wigcs_status wigcs_measurements_read(const char *path, wigcs_measurements **out);
WIGCS_API void wigcs_measurements_free(wigcs_measurements *mv);

/* ---- reconstruction ----------------------------------------------------- */

/* Non-positive mu/delta (and max_iters/residual_tol <= 0) request
 * auto-configuration from the operator and data scale. */
typedef struct wigcs_solver_config {
  double mu_threshold;
  double delta_step;
  long max_iters;
  double residual_tol;
} wigcs_solver_config;

WIGCS_API void wigcs_solver_config_init(wigcs_solver_config *cfg);

/* basis is "pixel" or "cosine". */
WIGCS_API wigcs_status wigcs_reconstruct(const wigcs_measurements *mv, const wigcs_matrix *m,
                                         const char *basis, const wigcs_solver_config *cfg,
                                         wigcs_report **out);
WIGCS_API wigcs_status wigcs_report_grid(const wigcs_report *rep, wigcs_grid **out);
WIGCS_API wigcs_status wigcs_report_iterations(const wigcs_report *rep, long *iterations);
WIGCS_API wigcs_status wigcs_report_relative_residual(const wigcs_report *rep, double *value);
/* 1 when the residual tolerance was met, 0 when the iteration budget ran out. */
WIGCS_API wigcs_status wigcs_report_converged(const wigcs_report *rep, int *converged);
/* Optional metadata recorded into the report file. kind is one of
 * "coherent", "fock", "mixed", "random"; irrelevant numeric fields are
 * ignored. */
WIGCS_API wigcs_status wigcs_report_set_state(wigcs_report *rep, const char *kind,
                                              double amplitude, double phase, int level,
                                              int rank, uint64_t seed);
/* Computes and stores error metrics of the recovered grid against truth. */
WIGCS_API wigcs_status wigcs_report_attach_truth(wigcs_report *rep, const wigcs_grid *truth);
WIGCS_API wigcs_status wigcs_report_write(const wigcs_report *rep, const char *path);
WIGCS_API void wigcs_report_free(wigcs_report *rep);

/* ---- grid comparison ---------------------------------------------------- */

WIGCS_API wigcs_status wigcs_compare(const wigcs_grid *truth, const wigcs_grid *recovered,
                                     double *relative_l2, double *max_abs,
                                     double *support_jaccard);
WIGCS_API wigcs_status wigcs_compare_write(const wigcs_grid *truth,
                                           const wigcs_grid *recovered, const char *path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WIGCS_H */
