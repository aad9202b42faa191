//! C ABI for the qudit-ramsey simulator.
//!
//! Conventions: every fallible call returns a [`QrStatus`] and writes its
//! results through out-pointers; sweeps live behind an opaque handle that
//! must be released with [`qr_sweep_free`]. Passing `rabi = 0` selects
//! the resonant π/2-pulse calibration π/(2·pulse). All calls are
//! panic-safe; a caught panic maps to `QR_STATUS_PANIC`.
//!
//! The matching header is generated into `include/qudit_ramsey.h` at
//! build time.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use qudit_ramsey::{
    default_rabi, fringe_metrics, qfi, run_sweep, signal, FringeSignal, MetricsError, Protocol,
    ProtocolError, ProtocolKind, SweepError, SweepSpec, WmSystem,
};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was malformed (non-finite value, bad range, bad grid).
    InvalidArgument = 2,
    /// The protocol kind/dimension combination has no signal rule.
    Unsupported = 3,
    /// The computation itself failed.
    ComputeFailed = 4,
    /// The sweep has too few extrema for resolution/contrast metrics.
    MetricsUndefined = 5,
    /// An index or capacity was out of range.
    IndexOutOfRange = 6,
    /// A panic was caught at the boundary.
    Panic = 7,
}

/// Protocol selector: 0 = pulse-based Ramsey, 1 = QFT gates, 2 = √X gates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrProtocol {
    WmRamsey = 0,
    Qft = 1,
    SqrtX = 2,
}

/// Opaque sweep result: a detuning grid with per-point probabilities.
pub struct QrSweep {
    signal: FringeSignal,
}

fn kind_from(code: u32) -> Option<ProtocolKind> {
    match code {
        0 => Some(ProtocolKind::WmRamsey),
        1 => Some(ProtocolKind::Qft),
        2 => Some(ProtocolKind::SqrtX),
        _ => None,
    }
}

fn system_from(dim: u32, rabi: f64, pulse: f64, delta: f64) -> Result<WmSystem, QrStatus> {
    if !rabi.is_finite() || rabi < 0.0 {
        return Err(QrStatus::InvalidArgument);
    }
    let resolved_rabi = if rabi == 0.0 { default_rabi(pulse) } else { rabi };
    WmSystem::new(dim as usize, resolved_rabi, pulse, delta).map_err(|_| QrStatus::InvalidArgument)
}

fn protocol_from(code: u32, dim: u32) -> Result<Protocol, QrStatus> {
    let kind = kind_from(code).ok_or(QrStatus::InvalidArgument)?;
    Protocol::new(kind, dim as usize).map_err(|e| match e {
        ProtocolError::UnsupportedCombination { .. } => QrStatus::Unsupported,
        _ => QrStatus::InvalidArgument,
    })
}

fn guarded(body: impl FnOnce() -> QrStatus) -> QrStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(QrStatus::Panic)
}

/// Scalar fringe signal of `protocol` at one detuning.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn qr_signal(
    protocol: u32,
    dim: u32,
    tau: f64,
    rabi: f64,
    pulse: f64,
    delta: f64,
    out: *mut f64,
) -> QrStatus {
    guarded(|| {
        if out.is_null() {
            return QrStatus::NullPointer;
        }
        let proto = match protocol_from(protocol, dim) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let sys = match system_from(dim, rabi, pulse, delta) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match signal(proto, &sys, tau) {
            Ok(value) => {
                unsafe { *out = value };
                QrStatus::Ok
            }
            Err(_) => QrStatus::ComputeFailed,
        }
    })
}

/// Quantum Fisher information of the protocol's final state with respect
/// to the detuning.
///
/// # Safety
/// `out` must point to a writable double.
#[no_mangle]
pub unsafe extern "C" fn qr_qfi(
    protocol: u32,
    dim: u32,
    tau: f64,
    rabi: f64,
    pulse: f64,
    delta: f64,
    out: *mut f64,
) -> QrStatus {
    guarded(|| {
        if out.is_null() {
            return QrStatus::NullPointer;
        }
        let proto = match protocol_from(protocol, dim) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let sys = match system_from(dim, rabi, pulse, 0.0) {
            Ok(s) => s,
            Err(s) => return s,
        };
        if !delta.is_finite() {
            return QrStatus::InvalidArgument;
        }
        match qfi(proto, &sys, tau, delta) {
            Ok(value) => {
                unsafe { *out = value };
                QrStatus::Ok
            }
            Err(_) => QrStatus::ComputeFailed,
        }
    })
}

/// Run a detuning sweep and hand back an owning handle through `out`.
/// `points` must be odd and at least 3. Free the handle with
/// [`qr_sweep_free`].
///
/// # Safety
/// `out` must point to a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_run(
    protocol: u32,
    dim: u32,
    tau: f64,
    rabi: f64,
    pulse: f64,
    delta_min: f64,
    delta_max: f64,
    points: usize,
    out: *mut *mut QrSweep,
) -> QrStatus {
    guarded(|| {
        if out.is_null() {
            return QrStatus::NullPointer;
        }
        let proto = match protocol_from(protocol, dim) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let sys = match system_from(dim, rabi, pulse, 0.0) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let spec = match SweepSpec::new(
            proto,
            tau,
            Some(sys.rabi()),
            pulse,
            delta_min,
            delta_max,
            points,
        ) {
            Ok(spec) => spec,
            Err(SweepError::Protocol(_)) => return QrStatus::Unsupported,
            Err(_) => return QrStatus::InvalidArgument,
        };
        match run_sweep(&spec) {
            Ok(signal) => {
                let handle = Box::into_raw(Box::new(QrSweep { signal }));
                unsafe { *out = handle };
                QrStatus::Ok
            }
            Err(_) => QrStatus::ComputeFailed,
        }
    })
}

/// Release a sweep handle. Passing null is a no-op.
///
/// # Safety
/// `sweep` must be null or a handle from [`qr_sweep_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_free(sweep: *mut QrSweep) {
    if !sweep.is_null() {
        drop(unsafe { Box::from_raw(sweep) });
    }
}

/// Number of grid points in the sweep; 0 for a null handle.
///
/// # Safety
/// `sweep` must be null or a live handle from [`qr_sweep_run`].
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_points(sweep: *const QrSweep) -> usize {
    if sweep.is_null() {
        return 0;
    }
    unsafe { &*sweep }.signal.len()
}

/// Read one grid point. Either out-pointer may be null to skip it.
///
/// # Safety
/// `sweep` must be a live handle; non-null out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_get(
    sweep: *const QrSweep,
    index: usize,
    delta: *mut f64,
    probability: *mut f64,
) -> QrStatus {
    guarded(|| {
        if sweep.is_null() {
            return QrStatus::NullPointer;
        }
        let signal = &unsafe { &*sweep }.signal;
        if index >= signal.len() {
            return QrStatus::IndexOutOfRange;
        }
        if !delta.is_null() {
            unsafe { *delta = signal.deltas()[index] };
        }
        if !probability.is_null() {
            unsafe { *probability = signal.probs()[index] };
        }
        QrStatus::Ok
    })
}

/// Copy the whole grid into caller buffers of length `capacity`
/// (≥ the sweep's point count). Either buffer may be null to skip it.
///
/// # Safety
/// Non-null buffers must hold at least `capacity` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_fill(
    sweep: *const QrSweep,
    deltas: *mut f64,
    probabilities: *mut f64,
    capacity: usize,
) -> QrStatus {
    guarded(|| {
        if sweep.is_null() {
            return QrStatus::NullPointer;
        }
        let signal = &unsafe { &*sweep }.signal;
        let n = signal.len();
        if capacity < n {
            return QrStatus::IndexOutOfRange;
        }
        if !deltas.is_null() {
            unsafe { std::ptr::copy_nonoverlapping(signal.deltas().as_ptr(), deltas, n) };
        }
        if !probabilities.is_null() {
            unsafe { std::ptr::copy_nonoverlapping(signal.probs().as_ptr(), probabilities, n) };
        }
        QrStatus::Ok
    })
}

/// Resolution, contrast and RCI of the sweep. Any out-pointer may be
/// null to skip that value.
///
/// # Safety
/// `sweep` must be a live handle; non-null out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_sweep_metrics(
    sweep: *const QrSweep,
    resolution: *mut f64,
    contrast: *mut f64,
    rci: *mut f64,
) -> QrStatus {
    guarded(|| {
        if sweep.is_null() {
            return QrStatus::NullPointer;
        }
        let signal = &unsafe { &*sweep }.signal;
        match fringe_metrics(signal) {
            Ok(m) => {
                if !resolution.is_null() {
                    unsafe { *resolution = m.resolution };
                }
                if !contrast.is_null() {
                    unsafe { *contrast = m.contrast };
                }
                if !rci.is_null() {
                    unsafe { *rci = m.rci };
                }
                QrStatus::Ok
            }
            Err(MetricsError::UndefinedResolution { .. } | MetricsError::UndefinedContrast) => {
                QrStatus::MetricsUndefined
            }
            Err(_) => QrStatus::ComputeFailed,
        }
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qr_status_message(status: u32) -> *const c_char {
    let message: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"invalid argument\0",
        3 => b"unsupported protocol/dimension combination\0",
        4 => b"computation failed\0",
        5 => b"metrics undefined for this sweep\0",
        6 => b"index out of range\0",
        7 => b"panic caught at the language boundary\0",
        _ => b"unknown status\0",
    };
    message.as_ptr() as *const c_char
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
