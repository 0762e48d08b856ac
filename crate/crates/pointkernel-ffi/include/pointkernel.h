#ifndef POINTKERNEL_H
#define POINTKERNEL_H

/* Generated by cbindgen from pointkernel-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum PkStatus {
  PK_STATUS_OK = 0,
  PK_STATUS_NULL_POINTER = 1,
  PK_STATUS_INVALID_ARGUMENT = 2,
  PK_STATUS_NOT_CONNECTED = 3,
  PK_STATUS_NOT_SEPARATED = 4,
  PK_STATUS_NOT_REPRESENTABLE = 5,
  PK_STATUS_ON_BOUNDARY = 6,
  PK_STATUS_INVALID_TIME_ORDER = 7,
  PK_STATUS_SINGULAR_SYSTEM = 8,
  PK_STATUS_NUMERICAL_FAILURE = 9,
} PkStatus;

/**
 * Incoming direction of the scattering ansatz.
 */
typedef enum PkDirection {
  PK_DIRECTION_LEFT_INCOMING = 0,
  PK_DIRECTION_RIGHT_INCOMING = 1,
} PkDirection;

/**
 * Time axis selector for the kernels.
 */
typedef enum PkTimeAxis {
  PK_TIME_AXIS_REAL = 0,
  PK_TIME_AXIS_IMAGINARY = 1,
} PkTimeAxis;

/**
 * Opaque point-interaction handle.
 */
typedef struct PkInteraction PkInteraction;

typedef struct PkComplex {
  double re;
  double im;
} PkComplex;

/**
 * Scattering coefficients at one wavenumber.
 */
typedef struct PkScattering {
  struct PkComplex t_plus;
  struct PkComplex t_minus;
  struct PkComplex r_plus;
  struct PkComplex r_minus;
  double transmission;
  double unitarity_defect;
} PkScattering;

/**
 * One-sided boundary values and derivatives at the origin.
 */
typedef struct PkBoundaryData {
  struct PkComplex value_plus;
  struct PkComplex value_minus;
  struct PkComplex deriv_plus;
  struct PkComplex deriv_minus;
} PkBoundaryData;

/**
 * Connected boundary-condition form: phase and unimodular matrix.
 */
typedef struct PkConnected {
  double theta;
  double a11;
  double a12;
  double a21;
  double a22;
} PkConnected;

/**
 * Separated boundary-condition form: normalized projective Robin pairs
 * p·u'(0±) = q·u(0±).
 */
typedef struct PkSeparated {
  double p_plus;
  double q_plus;
  double p_minus;
  double q_minus;
} PkSeparated;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Allocates an interaction with couplings (c1, c2_re + i·c2_im, c3).
 * Returns null if any coupling is non-finite.
 */
struct PkInteraction *pk_interaction_new(double c1, double c2_re, double c2_im, double c3);

/**
 * Allocates the energy-dependent interaction of the order-n delta
 * derivative with coupling c at wavenumber k. Returns null on invalid
 * arguments (n < 1 or k <= 0).
 */
struct PkInteraction *pk_super_singular_new(uint32_t n, double c, double k);

/**
 * Releases a handle allocated by this library. Null is ignored.
 *
 * # Safety
 * `interaction` must be null or a pointer previously returned by
 * `pk_interaction_new`, `pk_super_singular_new`, `pk_interaction_parity`,
 * `pk_from_connected`, or `pk_from_separated`, and not freed twice.
 */
void pk_interaction_free(struct PkInteraction *interaction);

/**
 * # Safety
 * `interaction` must be a valid handle; the out pointers must be valid.
 */
enum PkStatus pk_interaction_components(const struct PkInteraction *interaction,
                                        double *c1,
                                        double *c2_re,
                                        double *c2_im,
                                        double *c3);

/**
 * Writes the connection-matrix determinant c1·c3 + |c2|².
 *
 * # Safety
 * `interaction` must be a valid handle; `determinant` must be valid.
 */
enum PkStatus pk_interaction_determinant(const struct PkInteraction *interaction,
                                         double *determinant);

/**
 * Allocates the parity image (c1, −c2, c3). Returns null on null input.
 *
 * # Safety
 * `interaction` must be null or a valid handle.
 */
struct PkInteraction *pk_interaction_parity(const struct PkInteraction *interaction);

/**
 * Closed-form scattering coefficients at wavenumber k > 0.
 *
 * # Safety
 * `interaction` must be a valid handle; `out` must be valid.
 */
enum PkStatus pk_scattering(const struct PkInteraction *interaction,
                            double k,
                            struct PkScattering *out);

/**
 * Transmission probability |T|² at wavenumber k > 0.
 *
 * # Safety
 * `interaction` must be a valid handle; `out` must be valid.
 */
enum PkStatus pk_transmission_probability(const struct PkInteraction *interaction,
                                          double k,
                                          double *out);

/**
 * Transmission and reflection from the independent stationary-state solve
 * (left- or right-incoming), together with the boundary data of the state.
 *
 * # Safety
 * `interaction` must be a valid handle; out pointers must be valid.
 */
enum PkStatus pk_solve_stationary(const struct PkInteraction *interaction,
                                  double k,
                                  enum PkDirection direction,
                                  struct PkComplex *transmission,
                                  struct PkComplex *reflection,
                                  struct PkBoundaryData *boundary);

/**
 * Connected form of the interaction; fails with PK_STATUS_NOT_CONNECTED on
 * the separated stratum.
 *
 * # Safety
 * `interaction` must be a valid handle; `out` must be valid.
 */
enum PkStatus pk_to_connected(const struct PkInteraction *interaction, struct PkConnected *out);

/**
 * Couplings generating a connected form; writes a new handle into `out`.
 *
 * # Safety
 * `connected` and `out` must be valid pointers.
 */
enum PkStatus pk_from_connected(const struct PkConnected *connected, struct PkInteraction **out);

/**
 * Separated form of the interaction (normalized projective pairs); fails
 * with PK_STATUS_NOT_SEPARATED off the D = 4, Im c2 = 0 stratum.
 *
 * # Safety
 * `interaction` must be a valid handle; `out` must be valid.
 */
enum PkStatus pk_to_separated(const struct PkInteraction *interaction, struct PkSeparated *out);

/**
 * Couplings generating a separated form; writes a new handle into `out`.
 *
 * # Safety
 * `separated` and `out` must be valid pointers.
 */
enum PkStatus pk_from_separated(const struct PkSeparated *separated, struct PkInteraction **out);

/**
 * Free kernel ψ₀(y,t|x,s) on the chosen time axis; requires t > s.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PkStatus pk_free_kernel(double y,
                             double t,
                             double x,
                             double s,
                             enum PkTimeAxis axis,
                             struct PkComplex *out);

/**
 * Exact delta-prime propagator; requires t > s, x ≠ 0, y ≠ 0.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PkStatus pk_delta_prime_propagator(double c,
                                        double y,
                                        double t,
                                        double x,
                                        double s,
                                        enum PkTimeAxis axis,
                                        struct PkComplex *out);

/**
 * Analytic one-sided limits of the delta-prime propagator at the origin.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PkStatus pk_propagator_boundary_data(double c,
                                          double t,
                                          double x,
                                          double s,
                                          enum PkTimeAxis axis,
                                          struct PkBoundaryData *out);

/**
 * Tests the jump-average conditions; writes the larger of the two residual
 * magnitudes and sets `pass` to 1 when both are within `tol`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum PkStatus pk_check_jump_average(const struct PkBoundaryData *boundary,
                                    const struct PkInteraction *interaction,
                                    double tol,
                                    double *max_residual,
                                    int32_t *pass);

/**
 * Partial sum of the delta-prime Born series as per-quadrant coefficients.
 * `direct` and `mirror` each receive four values in the quadrant order
 * (x>0,y>0), (x>0,y<0), (x<0,y>0), (x<0,y<0).
 *
 * # Safety
 * `direct` and `mirror` must point to arrays of at least four doubles.
 */
enum PkStatus pk_born_partial_sum(double c, uint32_t n_terms, double *direct, double *mirror);

/**
 * Library version as a static C string.
 */
const char *pk_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POINTKERNEL_H */
