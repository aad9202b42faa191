//! Wigner–Majorana (WM) ladder systems: Hamiltonians, free evolution,
//! square-pulse propagators, and the qutrit closed forms.
//!
//! A D-level WM system couples only neighbouring states, with matrix
//! elements fixed by an embedded spin j = (D−1)/2:
//!
//! ```text
//! H[d][d]   = (d − (D+1)/2)·Δ              d = 1..D
//! H[d][d+1] = H[d+1][d] = ½√(d(D−d))·Ω     d = 1..D−1
//! ```
//!
//! so a single drive field steers the whole ladder. During free evolution
//! the drive is off and each state just accumulates detuning phase.
//! States carry 1-based labels |1⟩..|D⟩ throughout.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::linalg::{self, ComplexMatrix, LinalgError};

/// Interrogation time used by every reference trace.
pub const DEFAULT_TAU: f64 = 10.0;
/// Square-pulse duration used by every reference trace.
pub const DEFAULT_PULSE_DURATION: f64 = 1.0;

/// Resonant π/2-pulse calibration Ω = π/(2T).
pub fn default_rabi(pulse_duration: f64) -> f64 {
    std::f64::consts::FRAC_PI_2 / pulse_duration
}

#[derive(Debug, Error)]
pub enum WmError {
    #[error("system dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("pulse duration must be positive and finite, got {0}")]
    InvalidPulseDuration(f64),
    #[error("system parameters must be finite: rabi={rabi}, detuning={detuning}")]
    NonFiniteParameter { rabi: f64, detuning: f64 },
    #[error("interrogation time must be finite and non-negative, got {0}")]
    InvalidInterrogationTime(f64),
    #[error("closed form requires a qutrit (dimension 3), got dimension {0}")]
    NotAQutrit(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A WM system: dimension plus drive parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WmSystem {
    dim: usize,
    rabi: f64,
    pulse_duration: f64,
    detuning: f64,
}

impl WmSystem {
    pub fn new(dim: usize, rabi: f64, pulse_duration: f64, detuning: f64) -> Result<Self, WmError> {
        if dim < 2 {
            return Err(WmError::InvalidDimension(dim));
        }
        if !pulse_duration.is_finite() || pulse_duration <= 0.0 {
            return Err(WmError::InvalidPulseDuration(pulse_duration));
        }
        if !rabi.is_finite() || !detuning.is_finite() {
            return Err(WmError::NonFiniteParameter { rabi, detuning });
        }
        Ok(Self { dim, rabi, pulse_duration, detuning })
    }

    /// Resonant system with the default π/2-pulse calibration Ω = π/(2T).
    pub fn resonant(dim: usize, pulse_duration: f64) -> Result<Self, WmError> {
        Self::new(dim, default_rabi(pulse_duration), pulse_duration, 0.0)
    }

    /// Same system at a different detuning (the swept variable).
    pub fn with_detuning(mut self, detuning: f64) -> Self {
        debug_assert!(detuning.is_finite());
        self.detuning = detuning;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn pulse_duration(&self) -> f64 {
        self.pulse_duration
    }

    pub fn detuning(&self) -> f64 {
        self.detuning
    }
}

/// The D×D real-symmetric tridiagonal ladder Hamiltonian.
pub fn wm_hamiltonian(sys: &WmSystem) -> ComplexMatrix {
    let dim = sys.dim;
    let centre = (dim as f64 + 1.0) / 2.0;
    ComplexMatrix::from_fn(dim, |r, c| {
        if r == c {
            C64::new(((r + 1) as f64 - centre) * sys.detuning, 0.0)
        } else if c == r + 1 || r == c + 1 {
            let lower = (r.min(c) + 1) as f64; // 1-based label of the lower coupled state
            C64::new(0.5 * (lower * (dim as f64 - lower)).sqrt() * sys.rabi, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

pub(crate) fn free_evolution_diag(dim: usize, detuning: f64, tau: f64) -> ComplexMatrix {
    let centre = (dim as f64 + 1.0) / 2.0;
    ComplexMatrix::from_fn(dim, |r, c| {
        if r == c {
            C64::from_polar(1.0, -tau * ((r + 1) as f64 - centre) * detuning)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Diagonal free-evolution unitary: state |d⟩ accumulates phase
/// e^{−iτ(d−(D+1)/2)Δ}.
pub fn free_evolution(sys: &WmSystem, tau: f64) -> Result<ComplexMatrix, WmError> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(WmError::InvalidInterrogationTime(tau));
    }
    Ok(free_evolution_diag(sys.dim, sys.detuning, tau))
}

/// Square-pulse propagator R(T) = exp(−i H T).
pub fn pulse_propagator(sys: &WmSystem) -> Result<ComplexMatrix, WmError> {
    Ok(linalg::unitary_exp(&wm_hamiltonian(sys), sys.pulse_duration)?)
}

/// Closed-form qutrit pulse propagator.
///
/// With Ω̃ = √(Δ²+Ω²), generalized pulse area A = Ω̃T, c = cos A,
/// s = sin A and Δ̃ = Δ(1−c) − iΩ̃s:
///
/// ```text
///            ⎛ Δ² − ΔΔ̃ + ½Ω²(1+c)    ΩΔ̃/√2     ½Ω²(c−1)            ⎞
/// R₃ = Ω̃⁻² ⎜ ΩΔ̃/√2                Δ² + Ω²c   −ΩΔ̃*/√2             ⎟
///            ⎝ ½Ω²(c−1)             −ΩΔ̃*/√2    Δ² − ΔΔ̃* + ½Ω²(1+c) ⎠
/// ```
///
/// It equals [`pulse_propagator`] for dimension 3 to better than 1e−9;
/// that equality is what validates the transcription.
pub fn analytic_qutrit_propagator(sys: &WmSystem) -> Result<ComplexMatrix, WmError> {
    if sys.dim != 3 {
        return Err(WmError::NotAQutrit(sys.dim));
    }
    let delta = sys.detuning;
    let omega = sys.rabi;
    let omega_eff = (delta * delta + omega * omega).sqrt();
    if omega_eff == 0.0 {
        // No drive and no detuning: the pulse does nothing.
        return Ok(ComplexMatrix::identity(3));
    }
    let area = omega_eff * sys.pulse_duration;
    let (s, c) = area.sin_cos();
    let dtilde = C64::new(delta * (1.0 - c), -omega_eff * s);
    let d2 = delta * delta;
    let o2 = omega * omega;

    let corner_diag = C64::new(d2 + 0.5 * o2 * (1.0 + c), 0.0);
    let m00 = corner_diag - dtilde.scale(delta);
    let m22 = corner_diag - dtilde.conj().scale(delta);
    let m11 = C64::new(d2 + o2 * c, 0.0);
    let edge = dtilde.scale(omega / std::f64::consts::SQRT_2);
    let corner = C64::new(0.5 * o2 * (c - 1.0), 0.0);

    let norm = omega_eff * omega_eff;
    let rows = [
        [m00, edge, corner],
        [edge, m11, -edge.conj()],
        [corner, -edge.conj(), m22],
    ];
    Ok(ComplexMatrix::from_fn(3, |r, col| rows[r][col].unscale(norm)))
}

/// Closed-form central-state survival probability of the qutrit Ramsey
/// sequence R₃·F₃(τ)·R₃:
///
/// ```text
/// P(2←2) = |2(Δ² + Ω²c)² + e^{iΔτ}Δ̃²Ω² + e^{−iΔτ}Ω²Δ̃*²|² / (4Ω̃⁸)
/// ```
pub fn analytic_qutrit_ramsey(sys: &WmSystem, tau: f64) -> Result<f64, WmError> {
    if sys.dim != 3 {
        return Err(WmError::NotAQutrit(sys.dim));
    }
    if !tau.is_finite() || tau < 0.0 {
        return Err(WmError::InvalidInterrogationTime(tau));
    }
    let delta = sys.detuning;
    let omega = sys.rabi;
    let omega_eff_sq = delta * delta + omega * omega;
    if omega_eff_sq == 0.0 {
        return Ok(1.0); // pulses are the identity, central state survives
    }
    let area = omega_eff_sq.sqrt() * sys.pulse_duration;
    let (s, c) = area.sin_cos();
    let dtilde = C64::new(delta * (1.0 - c), -omega_eff_sq.sqrt() * s);
    let d2 = delta * delta;
    let o2 = omega * omega;

    let core = C64::new(2.0 * (d2 + o2 * c) * (d2 + o2 * c), 0.0)
        + C64::from_polar(1.0, delta * tau) * dtilde * dtilde * o2
        + C64::from_polar(1.0, -delta * tau) * dtilde.conj() * dtilde.conj() * o2;
    let p = core.norm_sqr() / (4.0 * omega_eff_sq.powi(4));
    Ok(p.clamp(0.0, 1.0))
}

/// Ideal qubit Ramsey fringe cos²(Δτ/2): the perfect-pulse limit of the
/// two-level sequence.
pub fn ideal_qubit_fringe(delta: f64, tau: f64) -> f64 {
    (0.5 * delta * tau).cos().powi(2)
}
