/* C API for the xydiscord shared library.
 *
 * All entry points return an error code (XYD_OK on success) and write
 * results through out parameters. A context handle carries the
 * quadrature configuration and the message of the last failure.
 */
#ifndef XYDISCORD_H
#define XYDISCORD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct xyd_context xyd_context;

/* Error codes. */
#define XYD_OK 0
#define XYD_EINVAL 1       /* invalid argument */
#define XYD_EQUAD 2        /* quadrature tolerance not reached */
#define XYD_ERANGE 3       /* unsupported range (r too large) */
#define XYD_EPOSITIVITY 4  /* density matrix not positive */
#define XYD_EFORM 5        /* evolved matrix left the X pattern */
#define XYD_EDEGENERATE 6  /* p_sc undefined (degenerate coefficients) */
#define XYD_EDOMAIN 7      /* finite-difference neighbor invalid */
#define XYD_EMULTIROOT 8   /* multiple Q1 = Q2 roots */
#define XYD_ENOPEAK 9      /* derivative monotone, no peak */
#define XYD_EINTERNAL 10

/* Channels. */
#define XYD_CHANNEL_BF 0
#define XYD_CHANNEL_BPF 1
#define XYD_CHANNEL_PF 2

/* Discord branches. */
#define XYD_BRANCH_Q1 1
#define XYD_BRANCH_Q2 2

/* Sudden-change metadata. */
#define XYD_DYNAMICS_II 2
#define XYD_DYNAMICS_III 3
#define XYD_METHOD_RATIO_FORMULA 0
#define XYD_METHOD_BRANCH_ROOT 1

/* Sweep variables. */
#define XYD_VAR_LAMBDA 0
#define XYD_VAR_GAMMA 1

/* X-form two-qubit density matrix in the basis {|11>,|10>,|01>,|00>}. */
typedef struct xyd_xstate {
  double a, b, d, z, f;
} xyd_xstate;

/* Model point; kt = 0 selects the ground state. */
typedef struct xyd_model {
  double lambda;
  double gamma;
  double kt;
} xyd_model;

const char* xyd_error_name(int code);

xyd_context* xyd_context_create(void);
void xyd_context_destroy(xyd_context* ctx);

/* Human-readable message of the last failure on this context. */
const char* xyd_last_error(const xyd_context* ctx);

int xyd_set_quad_rel_tol(xyd_context* ctx, double rel_tol);

/* Two-site reduced density matrix of the XY chain at separation r. */
int xyd_reduced_state(xyd_context* ctx, xyd_model model, int r,
                      xyd_xstate* out);

/* I, C, Q and the active discord branch of an X state. */
int xyd_correlations(xyd_context* ctx, const xyd_xstate* state,
                     double* mutual_info, double* classical, double* discord,
                     int* branch);

/* Closed-form channel evolution at parametrized time p. */
int xyd_evolve(xyd_context* ctx, const xyd_xstate* state, int channel,
               double p, xyd_xstate* out);

/* Full 4x4 matrix, row-major, 16 doubles. */
int xyd_state_matrix(xyd_context* ctx, const xyd_xstate* state,
                     double out[16]);

/* (I, C, Q, branch) at each of the n grid times. Output arrays have
 * length n; any of them may be NULL. */
int xyd_trajectory(xyd_context* ctx, xyd_model model, int r, int channel,
                   const double* p_grid, size_t n, double* mutual_info,
                   double* classical, double* discord, int* branch);

/* Sudden-change time. On type-III dynamics *p_sc is set to -1 and
 * *dynamics_type to XYD_DYNAMICS_III. */
int xyd_sudden_change(xyd_context* ctx, xyd_model model, int r, int channel,
                      double* p_sc, int* method, int* dynamics_type);

/* Central-difference derivative of p_sc w.r.t. lambda or gamma. */
int xyd_psc_derivative(xyd_context* ctx, xyd_model model, int r, int channel,
                       int wrt, double h, double* out);

/* Finite-temperature QCP estimate: argmax of dp_sc/dlambda. */
int xyd_qcp_estimate(xyd_context* ctx, int channel, double gamma, double kt,
                     int r, double lambda_lo, double lambda_hi, int grid_n,
                     double h, double* lambda_star, double* peak_value);

/* Discord versus separation r = 1..r_max at fixed p; out has length
 * r_max. */
int xyd_discord_profile(xyd_context* ctx, xyd_model model, int channel,
                        double p, int r_max, double* out);

#ifdef __cplusplus
}
#endif

#endif /* XYDISCORD_H */
