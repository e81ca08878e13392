/* Copyright 2026 the ifbm authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of libifbm: exact simulation of integrated fractional Brownian
 * motion (IFBM) on integer grids, small-value path statistics, power-law
 * exponent fitting, the convex-minorant construction for the inviscid
 * Burgers equation, and numeric verification routines.
 *
 * Conventions:
 *   - every fallible call returns ifbm_status; IFBM_OK is zero;
 *   - ifbm_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread;
 *   - output buffers are caller-allocated; sizes are documented per call;
 *   - an ifbm_plan is immutable after creation and may be shared by any
 *     number of threads.
 */

#ifndef IFBM_H
#define IFBM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ifbm_status {
  IFBM_OK = 0,
  IFBM_ERR_INVALID_ARGUMENT = 1,
  IFBM_ERR_NOT_POSITIVE_DEFINITE = 2,
  IFBM_ERR_NEGATIVE_VARIANCE = 3,
  IFBM_ERR_DEGENERATE_PIVOT = 4,
  IFBM_ERR_DIMENSION_MISMATCH = 5,
  IFBM_ERR_EMPTY_PATH = 6,
  IFBM_ERR_TOO_FEW_SAMPLES = 7,
  IFBM_ERR_NO_DATA = 8,
  IFBM_ERR_DOMAIN = 9,
  IFBM_ERR_OUT_OF_SUPPORT = 10,
  IFBM_ERR_IO = 11,
  IFBM_ERR_INTERNAL = 12
} ifbm_status;

const char* ifbm_version(void);
const char* ifbm_status_string(ifbm_status status);
const char* ifbm_last_error(void);

/* ---- closed-form kernels ---------------------------------------------- */

/* Autocovariance of the second-increment sequence at the given lag. */
double ifbm_mu(double hurst, int64_t lag);

/* IFBM covariance E y(t) y(s) for arbitrary real t, s. */
double ifbm_gamma_cov(double hurst, double t, double s);

/* ---- generation plans -------------------------------------------------- */

typedef struct ifbm_plan ifbm_plan;

/* Unilateral grid {0..steps}; path and nothing else vanishes at 0. */
ifbm_status ifbm_plan_unilateral(double hurst, int64_t steps, ifbm_plan** out);

/* Bilateral grid {-pivot..steps-pivot}; path and derivative vanish at 0.
 * Requires 1 <= pivot <= steps-1. */
ifbm_status ifbm_plan_bilateral(double hurst, int64_t steps, int64_t pivot, ifbm_plan** out);

void ifbm_plan_free(ifbm_plan* plan);

int64_t ifbm_plan_points(const ifbm_plan* plan);    /* steps + 1 */
int64_t ifbm_plan_origin(const ifbm_plan* plan);    /* 0 or -pivot */
int64_t ifbm_plan_noise_dim(const ifbm_plan* plan); /* normals per path */
double ifbm_plan_hurst(const ifbm_plan* plan);
double ifbm_plan_sigma(const ifbm_plan* plan);       /* std of y(1) innovation */
double ifbm_plan_sigma_prime(const ifbm_plan* plan); /* bilateral slope innovation */

/* Draws the sample with the given index from the deterministic per-sample
 * stream. values must hold ifbm_plan_points() doubles; values[i] is the path
 * at grid index origin + i. */
ifbm_status ifbm_generate(const ifbm_plan* plan, uint64_t master_seed, uint64_t sample_index,
                          double* values);

/* Applies the exact linear map noise -> path to caller-provided noise of
 * length ifbm_plan_noise_dim(). Exposes the map whose covariance equals the
 * gamma kernel. */
ifbm_status ifbm_generate_from_noise(const ifbm_plan* plan, const double* noise, double* values);

/* ---- path statistics ---------------------------------------------------- */

typedef struct ifbm_stats {
  double max_value;  /* maximum M, rescaled by steps^-(1+H) */
  double argmax_pos; /* leftmost argmax position G in units of steps */
  double occupation; /* fraction of grid points strictly above zero */
  double last_zero;  /* rightmost zero Z (unilateral; NaN otherwise) */
  int32_t atom;      /* 1 when the path never goes positive */
} ifbm_stats;

ifbm_status ifbm_extract_stats(const ifbm_plan* plan, const double* values, ifbm_stats* out);

/* Generates n samples and extracts statistics, using `workers` threads.
 * out[i] is sample i regardless of the worker count. */
ifbm_status ifbm_mc_run(const ifbm_plan* plan, int64_t n, uint64_t master_seed, int32_t workers,
                        ifbm_stats* out);

typedef struct ifbm_persistence {
  double p_max;                  /* F_M(T^-(1+H)) at T = t_eval */
  double p_argmax;               /* F_|G|(1/T) */
  double p_occupation;           /* conditioned occupation probability */
  int32_t p_max_is_lower_bound;  /* 1 when only the atom mass was resolvable */
} ifbm_persistence;

ifbm_status ifbm_persistence_probs(const ifbm_plan* plan, const ifbm_stats* stats, int64_t n,
                                   double t_eval, ifbm_persistence* out);

/* ---- power-law exponent fits ------------------------------------------- */

typedef struct ifbm_fit {
  double theta;
  double std_err;
  double lo;
  double hi;
  int64_t n_window;
  int32_t converged;
} ifbm_fit;

/* Truncated power-law MLE over the samples falling in (lo, hi]. */
ifbm_status ifbm_fit_mle(const double* samples, int64_t n, double lo, double hi, ifbm_fit* out);

/* Log-log ECDF slope over n_points log-spaced abscissae in [lo, hi]. */
ifbm_status ifbm_fit_slope(const double* samples, int64_t n, double lo, double hi,
                           int32_t n_points, ifbm_fit* out);

/* ---- Burgers / convex minorant ------------------------------------------ */

/* Vertex indices of the lower convex hull of {(i, f[i])}. vertices must hold
 * n entries; *count receives the number written. */
ifbm_status ifbm_minorant_vertices(const double* f, int64_t n, int64_t* vertices, int64_t* count);

/* Regular Lagrangian points of a bilateral path, in physical coordinates
 * k/steps. coords must hold ifbm_plan_points() entries; *count receives the
 * number written. */
ifbm_status ifbm_lagrangian_points(const ifbm_plan* plan, const double* values, double* coords,
                                   int64_t* count);

/* Half-overlapping box counts N(delta) for each of the n_scales deltas. */
ifbm_status ifbm_box_counts(const double* points, int64_t n_points, const double* deltas,
                            int64_t n_scales, int64_t* counts);

/* Least-squares slope of log N versus log 1/delta. */
ifbm_status ifbm_box_dim(const double* points, int64_t n_points, const double* deltas,
                         int64_t n_scales, double* dim);

/* Full dimension experiment: n_paths bilateral paths at the default pivot,
 * log box counts averaged over paths, slope plus bootstrap spread.
 * mean_log_counts must hold n_scales doubles (may be NULL). */
ifbm_status ifbm_dim_experiment(double hurst, int64_t steps, int64_t n_paths,
                                uint64_t master_seed, int32_t workers, const double* deltas,
                                int64_t n_scales, double* mean_log_counts, double* dim,
                                double* spread);

/* ---- analytic verification ---------------------------------------------- */

/* Correlation of the time-changed process xi_q(t) = sqrt(q) y(t^(q0/q));
 * requires 1/2 < h0 <= h < 1 and 0 < s <= t. */
ifbm_status ifbm_beta_q(double h, double h0, double t, double s, double* out);

/* Minimum of beta_q - beta_q0 over the lattice {(i/n, j/n) : j <= i}. */
ifbm_status ifbm_slepian_gap(double h, double h0, int32_t lattice, double* min_gap);

/* Positivity terms R1 and R2 of the covariance comparison at ratio rho. */
ifbm_status ifbm_r_terms(double h, double h0, double rho, double* r1, double* r2);

/* Worst argmax-density inequality slack over histogram bin pairs, in pooled
 * binomial standard errors. Uses the samples inside (0,1). */
ifbm_status ifbm_psi_worst_z(const double* g_samples, int64_t n, int32_t bins, double* worst_z);

/* Leftmost argmax positions of exact FBM paths on {0..steps}/steps. */
ifbm_status ifbm_fbm_argmax(double hurst, int64_t steps, int64_t n, uint64_t master_seed,
                            int32_t workers, double* out);

/* ---- generator self-checks ---------------------------------------------- */

/* Max |M M^T - Gamma| for the plan's noise -> path map. */
ifbm_status ifbm_verify_map_exactness(const ifbm_plan* plan, double* max_abs_err);

/* Worst |empirical - gamma| / SE over n sampled paths. */
ifbm_status ifbm_verify_cov_mc(const ifbm_plan* plan, int64_t n, uint64_t master_seed,
                               int32_t workers, double* worst_z);

/* Toeplitz factorization and solve health at the given order. */
ifbm_status ifbm_verify_toeplitz(double hurst, int64_t order, double* factor_err,
                                 double* solve_residual);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IFBM_H */
