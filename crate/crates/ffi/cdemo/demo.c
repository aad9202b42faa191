/* Minimal consumer of the C API: runs the reference qutrit sweep,
 * prints its fringe metrics and the Fisher information at resonance.
 *
 * Build (from the repository root, after `cargo build --release`):
 *   cc crates/ffi/cdemo/demo.c -Icrates/ffi/include \
 *      -Ltarget/release -lqudit_ramsey_ffi -lm -lpthread -ldl -o demo
 */
#include <stdio.h>

#include "qudit_ramsey.h"

int main(void) {
    QrSweep *sweep = NULL;
    QrStatus status = qr_sweep_run(QR_PROTOCOL_WM_RAMSEY, 3, 10.0, 0.0, 1.0,
                                   -1.0, 1.0, 4001, &sweep);
    if (status != QR_STATUS_OK) {
        fprintf(stderr, "sweep failed: %s\n", qr_status_message(status));
        return 1;
    }

    double resolution, contrast, rci;
    status = qr_sweep_metrics(sweep, &resolution, &contrast, &rci);
    if (status != QR_STATUS_OK) {
        fprintf(stderr, "metrics failed: %s\n", qr_status_message(status));
        qr_sweep_free(sweep);
        return 1;
    }
    printf("points=%zu resolution=%.4f contrast=%.4f rci=%.4f\n",
           qr_sweep_points(sweep), resolution, contrast, rci);
    qr_sweep_free(sweep);

    double fisher;
    status = qr_qfi(QR_PROTOCOL_WM_RAMSEY, 3, 10.0, 0.0, 1.0, 0.0, &fisher);
    if (status != QR_STATUS_OK) {
        fprintf(stderr, "qfi failed: %s\n", qr_status_message(status));
        return 1;
    }
    printf("qfi_at_resonance=%.3f (library %s)\n", fisher, qr_version());
    return 0;
}
