//! Exercises the C ABI through the exported functions themselves.

use qudit_ramsey_ffi::*;

const WM: u32 = 0;
const QFT: u32 = 1;
const SQRT_X: u32 = 2;

#[test]
fn signal_at_resonance() {
    let mut value = f64::NAN;
    let status = unsafe { qr_signal(WM, 3, 10.0, 0.0, 1.0, 0.0, &mut value) };
    assert_eq!(status, QrStatus::Ok);
    assert!((value - 1.0).abs() < 1e-12);

    let status = unsafe { qr_signal(QFT, 2, 10.0, 0.0, 1.0, 0.3, &mut value) };
    assert_eq!(status, QrStatus::Ok);
    assert!((value - (1.5f64).sin().powi(2)).abs() < 1e-12);
}

#[test]
fn invalid_arguments_are_reported() {
    let mut value = 0.0;
    assert_eq!(
        unsafe { qr_signal(9, 3, 10.0, 0.0, 1.0, 0.0, &mut value) },
        QrStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qr_signal(QFT, 5, 10.0, 0.0, 1.0, 0.0, &mut value) },
        QrStatus::Unsupported
    );
    assert_eq!(
        unsafe { qr_signal(WM, 1, 10.0, 0.0, 1.0, 0.0, &mut value) },
        QrStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qr_signal(WM, 2, 10.0, -1.0, 1.0, 0.0, &mut value) },
        QrStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qr_signal(WM, 2, 10.0, 0.0, 1.0, 0.0, std::ptr::null_mut()) },
        QrStatus::NullPointer
    );
}

#[test]
fn sweep_lifecycle() {
    let mut handle: *mut QrSweep = std::ptr::null_mut();
    let status = unsafe { qr_sweep_run(WM, 2, 10.0, 0.0, 1.0, -1.0, 1.0, 401, &mut handle) };
    assert_eq!(status, QrStatus::Ok);
    assert!(!handle.is_null());
    assert_eq!(unsafe { qr_sweep_points(handle) }, 401);

    // midpoint is the resonant peak
    let (mut delta, mut prob) = (f64::NAN, f64::NAN);
    assert_eq!(unsafe { qr_sweep_get(handle, 200, &mut delta, &mut prob) }, QrStatus::Ok);
    assert_eq!(delta, 0.0);
    assert!((prob - 1.0).abs() < 1e-12);
    assert_eq!(
        unsafe { qr_sweep_get(handle, 401, &mut delta, &mut prob) },
        QrStatus::IndexOutOfRange
    );

    let mut deltas = vec![0.0f64; 401];
    let mut probs = vec![0.0f64; 401];
    assert_eq!(
        unsafe { qr_sweep_fill(handle, deltas.as_mut_ptr(), probs.as_mut_ptr(), 401) },
        QrStatus::Ok
    );
    assert_eq!(deltas[0], -1.0);
    assert_eq!(deltas[400], 1.0);
    assert_eq!(
        unsafe { qr_sweep_fill(handle, deltas.as_mut_ptr(), probs.as_mut_ptr(), 400) },
        QrStatus::IndexOutOfRange
    );

    let (mut re, mut co, mut rci) = (0.0, 0.0, 0.0);
    assert_eq!(unsafe { qr_sweep_metrics(handle, &mut re, &mut co, &mut rci) }, QrStatus::Ok);
    assert!((re - 3.586).abs() < 0.05, "resolution {re}");
    assert!((co - 1.0).abs() < 0.01, "contrast {co}");
    assert!((rci - re * co).abs() < 1e-12);

    unsafe { qr_sweep_free(handle) };
    unsafe { qr_sweep_free(std::ptr::null_mut()) }; // null is a no-op
}

#[test]
fn sweep_argument_validation() {
    let mut handle: *mut QrSweep = std::ptr::null_mut();
    assert_eq!(
        unsafe { qr_sweep_run(WM, 2, 10.0, 0.0, 1.0, -1.0, 1.0, 400, &mut handle) },
        QrStatus::InvalidArgument,
        "even grid"
    );
    assert_eq!(
        unsafe { qr_sweep_run(WM, 2, 10.0, 0.0, 1.0, 1.0, -1.0, 401, &mut handle) },
        QrStatus::InvalidArgument,
        "inverted window"
    );
    assert_eq!(
        unsafe { qr_sweep_run(SQRT_X, 4, 10.0, 0.0, 1.0, -1.0, 1.0, 401, &mut handle) },
        QrStatus::Unsupported
    );
    assert_eq!(
        unsafe { qr_sweep_run(WM, 2, 10.0, 0.0, 1.0, -1.0, 1.0, 401, std::ptr::null_mut()) },
        QrStatus::NullPointer
    );
}

#[test]
fn metrics_undefined_for_featureless_sweep() {
    let mut handle: *mut QrSweep = std::ptr::null_mut();
    let status =
        unsafe { qr_sweep_run(WM, 2, 10.0, 0.0, 1.0, -1e-3, 1e-3, 101, &mut handle) };
    assert_eq!(status, QrStatus::Ok);
    let mut re = 0.0;
    assert_eq!(
        unsafe {
            qr_sweep_metrics(handle, &mut re, std::ptr::null_mut(), std::ptr::null_mut())
        },
        QrStatus::MetricsUndefined
    );
    unsafe { qr_sweep_free(handle) };
}

#[test]
fn qfi_of_gate_qubit() {
    let mut value = 0.0;
    for delta in [-2.0, 0.0, 3.5] {
        let status = unsafe { qr_qfi(QFT, 2, 10.0, 0.0, 1.0, delta, &mut value) };
        assert_eq!(status, QrStatus::Ok);
        assert!((value - 100.0).abs() < 1e-5, "Δ = {delta}: {value}");
    }
    assert_eq!(
        unsafe { qr_qfi(WM, 2, 10.0, 0.0, 1.0, f64::NAN, &mut value) },
        QrStatus::InvalidArgument
    );
}

#[test]
fn status_messages_are_nul_terminated_ascii() {
    for code in 0..=8u32 {
        let ptr = qr_status_message(code);
        assert!(!ptr.is_null());
        let text = unsafe { std::ffi::CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!text.is_empty());
    }
    let version = unsafe { std::ffi::CStr::from_ptr(qr_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}
