/* tavis_cummings.h - C API for the closed-form Tavis-Cummings evolution
 * library (1 to 4 two-level atoms coupled to one cavity mode).
 *
 * All functions return tc_status; TC_OK is 0. On failure a thread-local
 * message is available from tc_last_error() until the next call on the same
 * thread. Handles are opaque and must be released with the matching *_free.
 *
 * Basis conventions: the atomic index is the big-endian bit pattern of the
 * atoms (atom 1 most significant, bit 0 = upper level, 1 = lower level); the
 * product index is atomic_index * (nmax+1) + photon_number.
 */
#ifndef TAVIS_CUMMINGS_H
#define TAVIS_CUMMINGS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_OFF_RESONANCE = 2,   /* closed form needs delta == omega */
  TC_ERR_TRUNCATION = 3,      /* state does not fit under the photon cutoff */
  TC_ERR_BUFFER_TOO_SMALL = 4,
  TC_ERR_INTERNAL = 5
} tc_status;

typedef struct tc_model tc_model;
typedef struct tc_timeseries tc_timeseries;

typedef struct tc_model_params {
  int n_atoms;   /* 1..4 */
  double omega;  /* field frequency (hbar = 1) */
  double delta;  /* two-level splitting */
  double g;      /* coupling constant */
  int nmax;      /* photon cutoff, >= 0 */
} tc_model_params;

const char* tc_version(void);
const char* tc_status_name(tc_status s);
const char* tc_last_error(void);

tc_status tc_model_create(const tc_model_params* params, tc_model** out);
void tc_model_free(tc_model* model);
/* 2^n_atoms * (nmax+1), or -1 for a null model. */
int tc_model_dim(const tc_model* model);

/* Closed-form evolution operator U(t) in the product basis. Writes dim*dim
 * complex entries, row-major, interleaved (re, im); capacity counts doubles
 * and must be >= 2*dim*dim. */
tc_status tc_evolution_operator(const tc_model* model, double t, double* out,
                                size_t capacity);

typedef struct tc_evolve_params {
  double t_start;
  double t_end;
  double dt;
  int times_in_inverse_g; /* nonzero: grid values are multiples of 1/g */
  const char* atoms;      /* string over {u,d}, one char per atom */
  const char* field;      /* "fock:<m>" or "coherent:<alpha>" */
  int auto_extend_nmax;   /* nonzero: raise nmax until the coherent tail fits */
} tc_evolve_params;

/* Propagates the product state over the time grid and records observables.
 * Columns, in order: t, S3, N, pop_0..pop_{2^n-1}, norm_deficit. */
tc_status tc_evolve(const tc_model_params* params, const tc_evolve_params* run,
                    tc_timeseries** out);
size_t tc_timeseries_rows(const tc_timeseries* ts);
size_t tc_timeseries_cols(const tc_timeseries* ts);
const char* tc_timeseries_col_name(const tc_timeseries* ts, size_t col);
/* Photon cutoff actually used (may exceed the requested nmax). */
int tc_timeseries_nmax(const tc_timeseries* ts);
tc_status tc_timeseries_get(const tc_timeseries* ts, size_t row, size_t col,
                            double* value);
/* Row-major copy of the whole table; capacity counts doubles. */
tc_status tc_timeseries_copy(const tc_timeseries* ts, double* out, size_t capacity);
void tc_timeseries_free(tc_timeseries* ts);

typedef struct tc_verify_params {
  const int* atoms;    /* NULL: {1,2,3,4} */
  size_t atoms_len;
  const double* taus;  /* NULL: {0.1, 1.0, 5.0} */
  size_t taus_len;
  int nmax;            /* <= 0: 16 */
  double tol;          /* <= 0: 1e-10; oracle/unitarity sweeps only */
} tc_verify_params;

/* Runs the self-verification suite (closed form vs sector-exact reference,
 * block diagonalization, power formulas, algebra checks). Returns TC_OK even
 * when checks fail; *all_passed reports the outcome and *json_report receives
 * a malloc'd report to release with tc_string_free. Either out pointer may be
 * NULL. params may be NULL for the defaults. */
tc_status tc_verify(const tc_verify_params* params, char** json_report,
                    int* all_passed);
void tc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TAVIS_CUMMINGS_H */
