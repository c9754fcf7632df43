/* C interface to the qslkit core. All entry points return a qslk_status;
 * output strings are heap-allocated and must be released with
 * qslk_string_free. The library keeps a thread-local message for the most
 * recent error, readable via qslk_last_error. */

#ifndef QSLKIT_H
#define QSLKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qslk_status {
    QSLK_OK = 0,
    QSLK_ERR_USAGE = 2,         /* bad arguments or unparseable input */
    QSLK_ERR_INVALID_STATE = 3, /* density-matrix invariant violated */
    QSLK_ERR_NUMERIC = 4,       /* numerical failure (singularity, divergence) */
    QSLK_ERR_ASSERTION = 5      /* pinned internal check failed */
} qslk_status;

/* Opaque density matrix handle. */
typedef struct qslk_state qslk_state;

const char* qslk_version(void);

/* Message for the most recent error on this thread; empty string if none. */
const char* qslk_last_error(void);

void qslk_string_free(char* s);

/* --- states ------------------------------------------------------------- */

/* JSON format: {"dim": n, "entries": [[re, im], ...]}, row-major. */
qslk_status qslk_state_from_json(const char* json_text, qslk_state** out);
qslk_status qslk_state_from_file(const char* path, qslk_state** out);

/* (1-r)/2 I + r |psi><psi| with |psi> = (|1>+|0>)/sqrt2. */
qslk_status qslk_state_werner(double r, qslk_state** out);

qslk_status qslk_state_to_json(const qslk_state* s, char** out_json);
size_t qslk_state_dim(const qslk_state* s);
void qslk_state_free(qslk_state* s);

/* --- fidelities --------------------------------------------------------- */

/* kind: "bures", "f1", "f2", "f3", "newf". */
qslk_status qslk_fidelity(const char* kind, const qslk_state* rho, const qslk_state* sigma,
                          double* out_value);

/* --- dynamics and bounds ------------------------------------------------ */

typedef struct qslk_reservoir {
    double gamma0;
    double lambda;
    double omega0;
} qslk_reservoir;

typedef struct qslk_quadrature {
    size_t n_points;   /* odd; 0 selects the default 2001 */
    size_t refinement; /* 0 selects the default 2 */
    double purity_guard;
} qslk_quadrature;

/* Result JSON: {tau, f_tau, x_tau, tau_qsl, quad_error, converged}. Pass
 * quad = NULL for defaults. */
qslk_status qslk_bound(const qslk_state* rho0, const qslk_reservoir* res, double tau,
                       const qslk_quadrature* quad, char** out_json);

qslk_status qslk_mt_pure_bound(const qslk_state* rho0, const qslk_reservoir* res, double tau,
                               const qslk_quadrature* quad, double* out_value);

qslk_status qslk_generic_bound(const char* kind, const qslk_state* rho0,
                               const qslk_reservoir* res, double tau,
                               const qslk_quadrature* quad, double* out_value);

/* --- batch runs --------------------------------------------------------- */

/* config_json: see the sweep config schema in the README. Emits CSV with
 * header gamma0,r,f_tau,x_tau,tau_qsl,tau_qsl_generic_f1,quad_error,error. */
qslk_status qslk_sweep_csv(const char* config_json, unsigned threads, char** out_csv);

/* CSV of (t, Re G, Im G, |G|^2, gamma_t); with_oracle adds an independent
 * integral-equation solution and per-row deviation. */
qslk_status qslk_gmodel_csv(const qslk_reservoir* res, double t_max, size_t steps,
                            int with_oracle, char** out_csv);

/* Stochastic property checks. property: "jozsa", "supermultiplicative",
 * "monotonicity", "monotonicity-fixed", "concavity", or "all". kind and
 * dims_csv (e.g. "2,3,4") may be NULL for the defaults "newf" and "2,3,4".
 * Returns a JSON array of reports; a report with "violated": true is a
 * finding, not an error. Status 5 only when a pinned fixed-example check
 * fails. */
qslk_status qslk_verify(const char* property, const char* kind, long trials,
                        const char* dims_csv, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* QSLKIT_H */
