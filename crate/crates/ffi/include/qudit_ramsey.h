#ifndef QUDIT_RAMSEY_FFI_H
#define QUDIT_RAMSEY_FFI_H

/* Generated by cbindgen from the qudit-ramsey-ffi crate; do not edit by hand. */

#include <stddef.h>
#include <stdint.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum QrStatus {
  QR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  QR_STATUS_NULL_POINTER = 1,
  /**
   * An argument was malformed (non-finite value, bad range, bad grid).
   */
  QR_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The protocol kind/dimension combination has no signal rule.
   */
  QR_STATUS_UNSUPPORTED = 3,
  /**
   * The computation itself failed.
   */
  QR_STATUS_COMPUTE_FAILED = 4,
  /**
   * The sweep has too few extrema for resolution/contrast metrics.
   */
  QR_STATUS_METRICS_UNDEFINED = 5,
  /**
   * An index or capacity was out of range.
   */
  QR_STATUS_INDEX_OUT_OF_RANGE = 6,
  /**
   * A panic was caught at the boundary.
   */
  QR_STATUS_PANIC = 7,
} QrStatus;

/**
 * Protocol selector: 0 = pulse-based Ramsey, 1 = QFT gates, 2 = √X gates.
 */
typedef enum QrProtocol {
  QR_PROTOCOL_WM_RAMSEY = 0,
  QR_PROTOCOL_QFT = 1,
  QR_PROTOCOL_SQRT_X = 2,
} QrProtocol;

/**
 * Opaque sweep result: a detuning grid with per-point probabilities.
 */
typedef struct QrSweep QrSweep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Scalar fringe signal of `protocol` at one detuning.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum QrStatus qr_signal(uint32_t protocol,
                        uint32_t dim,
                        double tau,
                        double rabi,
                        double pulse,
                        double delta,
                        double *out);

/**
 * Quantum Fisher information of the protocol's final state with respect
 * to the detuning.
 *
 * # Safety
 * `out` must point to a writable double.
 */
enum QrStatus qr_qfi(uint32_t protocol,
                     uint32_t dim,
                     double tau,
                     double rabi,
                     double pulse,
                     double delta,
                     double *out);

/**
 * Run a detuning sweep and hand back an owning handle through `out`.
 * `points` must be odd and at least 3. Free the handle with
 * [`qr_sweep_free`].
 *
 * # Safety
 * `out` must point to a writable handle slot.
 */
enum QrStatus qr_sweep_run(uint32_t protocol,
                           uint32_t dim,
                           double tau,
                           double rabi,
                           double pulse,
                           double delta_min,
                           double delta_max,
                           size_t points,
                           struct QrSweep **out);

/**
 * Release a sweep handle. Passing null is a no-op.
 *
 * # Safety
 * `sweep` must be null or a handle from [`qr_sweep_run`] not yet freed.
 */
void qr_sweep_free(struct QrSweep *sweep);

/**
 * Number of grid points in the sweep; 0 for a null handle.
 *
 * # Safety
 * `sweep` must be null or a live handle from [`qr_sweep_run`].
 */
size_t qr_sweep_points(const struct QrSweep *sweep);

/**
 * Read one grid point. Either out-pointer may be null to skip it.
 *
 * # Safety
 * `sweep` must be a live handle; non-null out-pointers must be writable.
 */
enum QrStatus qr_sweep_get(const struct QrSweep *sweep,
                           size_t index,
                           double *delta,
                           double *probability);

/**
 * Copy the whole grid into caller buffers of length `capacity`
 * (≥ the sweep's point count). Either buffer may be null to skip it.
 *
 * # Safety
 * Non-null buffers must hold at least `capacity` writable doubles.
 */
enum QrStatus qr_sweep_fill(const struct QrSweep *sweep,
                            double *deltas,
                            double *probabilities,
                            size_t capacity);

/**
 * Resolution, contrast and RCI of the sweep. Any out-pointer may be
 * null to skip that value.
 *
 * # Safety
 * `sweep` must be a live handle; non-null out-pointers must be writable.
 */
enum QrStatus qr_sweep_metrics(const struct QrSweep *sweep,
                               double *resolution,
                               double *contrast,
                               double *rci);

/**
 * Static description of a status code.
 */
const char *qr_status_message(uint32_t status);

/**
 * Library version as a static string.
 */
const char *qr_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUDIT_RAMSEY_FFI_H */
