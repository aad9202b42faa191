//! Interrogation protocols and their scalar fringe signals.
//!
//! Three schemes are implemented:
//!
//! * `WmRamsey` — two square pulses around free evolution, R(T)·F(τ)·R(T),
//!   with the pulse dynamics generated by the ladder Hamiltonian;
//! * `Qft` — the discrete-Fourier gate applied before and after free
//!   evolution, G·F(τ)·G, with ideal (instantaneous, detuning-free) gates;
//! * `SqrtX` — likewise for the square root of the cyclic-shift gate.
//!
//! A [`SignalRule`] names the prepared state and the measured states whose
//! populations are summed into the scalar signal. For the pulse protocol
//! the rule depends on the parity of D: even-D systems are prepared in an
//! m = ±1/2 state and read out on its two shoulders, odd-D systems are
//! prepared in the central state (which for the qutrit is also the
//! measured state).

use std::fmt;

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::linalg::ComplexMatrix;
use crate::wm_model::{self, WmError, WmSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProtocolKind {
    WmRamsey,
    Qft,
    SqrtX,
}

impl fmt::Display for ProtocolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProtocolKind::WmRamsey => write!(f, "wm"),
            ProtocolKind::Qft => write!(f, "qft"),
            ProtocolKind::SqrtX => write!(f, "sqrtx"),
        }
    }
}

/// An interrogation scheme for a fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Protocol {
    pub kind: ProtocolKind,
    pub dim: usize,
}

impl Protocol {
    /// Validates that the (kind, dim) combination has a signal rule.
    pub fn new(kind: ProtocolKind, dim: usize) -> Result<Self, ProtocolError> {
        signal_rule_for(dim, kind)?;
        Ok(Self { kind, dim })
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.dim)
    }
}

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("protocol {kind}{dim} is not supported: no signal rule for this kind and dimension")]
    UnsupportedCombination { kind: ProtocolKind, dim: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("protocol dimension {protocol_dim} does not match system dimension {system_dim}")]
    DimensionMismatch { protocol_dim: usize, system_dim: usize },
    #[error("the pulse-based protocol has no ideal-gate sequence")]
    NotAGateProtocol,
    #[error(transparent)]
    Model(#[from] WmError),
}

/// Prepared state and measured states (1-based labels, unit weights).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignalRule {
    pub prepared: usize,
    pub measured: Vec<usize>,
}

/// The prepared/measured-state rule for each protocol.
///
/// Pulse protocol: D = 2 drives ground → excited; D = 3 reads the central
/// state's survival; even D ≥ 4 prepares |D/2⟩ and sums its two shoulders;
/// odd D ≥ 5 prepares the central state and sums its two shoulders.
/// Gate protocols are defined for D ∈ {2, 3}: ground → excited for the
/// qubit, central-state survival for the qutrit.
pub fn signal_rule_for(dim: usize, kind: ProtocolKind) -> Result<SignalRule, ProtocolError> {
    if dim < 2 {
        return Err(ProtocolError::DimensionTooSmall(dim));
    }
    match kind {
        ProtocolKind::WmRamsey => Ok(match dim {
            2 => SignalRule { prepared: 1, measured: vec![2] },
            3 => SignalRule { prepared: 2, measured: vec![2] },
            d if d.is_multiple_of(2) => {
                let p = d / 2;
                SignalRule { prepared: p, measured: vec![p - 1, p + 1] }
            }
            d => {
                let p = d.div_ceil(2); // central state (D+1)/2
                SignalRule { prepared: p, measured: vec![p - 1, p + 1] }
            }
        }),
        ProtocolKind::Qft | ProtocolKind::SqrtX => match dim {
            2 => Ok(SignalRule { prepared: 1, measured: vec![2] }),
            3 => Ok(SignalRule { prepared: 2, measured: vec![2] }),
            _ => Err(ProtocolError::UnsupportedCombination { kind, dim }),
        },
    }
}

/// Pulse–free–pulse sequence U = R(T)·F(τ)·R(T).
pub fn ramsey_sequence(sys: &WmSystem, tau: f64) -> Result<ComplexMatrix, ProtocolError> {
    let pulse = wm_model::pulse_propagator(sys)?;
    let free = wm_model::free_evolution(sys, tau)?;
    Ok(pulse.mul(&free).mul(&pulse))
}

/// Discrete-Fourier gate: element (m, k) = ω^{mk}/√D on 0-based indices,
/// ω = e^{2πi/D}. Reduces to the Hadamard gate at D = 2.
pub fn qft_gate(dim: usize) -> ComplexMatrix {
    assert!(dim >= 2, "gate dimension must be at least 2");
    let norm = 1.0 / (dim as f64).sqrt();
    ComplexMatrix::from_fn(dim, |m, k| {
        // reduce the exponent mod D so roots of unity stay exact
        let e = (m * k) % dim;
        C64::from_polar(norm, std::f64::consts::TAU * e as f64 / dim as f64)
    })
}

/// Square root of the cyclic shift: √X = QFT·√Z·QFT†, where
/// Z = diag(1, ω, …, ω^{D−1}) and √Z takes the principal branch ω^{k/2}.
/// Squaring it recovers the shift X = QFT·Z·QFT†.
pub fn sqrt_x_gate(dim: usize) -> ComplexMatrix {
    let qft = qft_gate(dim);
    let sqrt_z = ComplexMatrix::from_fn(dim, |r, c| {
        if r == c {
            C64::from_polar(1.0, std::f64::consts::PI * r as f64 / dim as f64)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    qft.mul(&sqrt_z).mul(&qft.adjoint())
}

/// Gate-based sequence U = G·F(τ, Δ)·G with ideal instantaneous gates.
pub fn gate_sequence(
    kind: ProtocolKind,
    dim: usize,
    detuning: f64,
    tau: f64,
) -> Result<ComplexMatrix, ProtocolError> {
    let gate = match kind {
        ProtocolKind::Qft => qft_gate(dim),
        ProtocolKind::SqrtX => sqrt_x_gate(dim),
        ProtocolKind::WmRamsey => return Err(ProtocolError::NotAGateProtocol),
    };
    if !tau.is_finite() || tau < 0.0 {
        return Err(WmError::InvalidInterrogationTime(tau).into());
    }
    let free = wm_model::free_evolution_diag(dim, detuning, tau);
    Ok(gate.mul(&free).mul(&gate))
}

/// Full interrogation unitary for the protocol at the system's detuning.
pub fn sequence(protocol: Protocol, sys: &WmSystem, tau: f64) -> Result<ComplexMatrix, ProtocolError> {
    if protocol.dim != sys.dim() {
        return Err(ProtocolError::DimensionMismatch {
            protocol_dim: protocol.dim,
            system_dim: sys.dim(),
        });
    }
    match protocol.kind {
        ProtocolKind::WmRamsey => ramsey_sequence(sys, tau),
        ProtocolKind::Qft | ProtocolKind::SqrtX => {
            gate_sequence(protocol.kind, protocol.dim, sys.detuning(), tau)
        }
    }
}

/// Scalar Ramsey signal: Σ over measured states of |⟨i|U|prepared⟩|².
pub fn signal(protocol: Protocol, sys: &WmSystem, tau: f64) -> Result<f64, ProtocolError> {
    let rule = signal_rule_for(protocol.dim, protocol.kind)?;
    let u = sequence(protocol, sys, tau)?;
    Ok(rule
        .measured
        .iter()
        .map(|&m| u.get(m - 1, rule.prepared - 1).norm_sqr())
        .sum())
}

/// Final state U·|prepared⟩ as amplitudes over |1⟩..|D⟩.
pub fn final_state(protocol: Protocol, sys: &WmSystem, tau: f64) -> Result<Vec<C64>, ProtocolError> {
    let rule = signal_rule_for(protocol.dim, protocol.kind)?;
    let u = sequence(protocol, sys, tau)?;
    Ok(u.column(rule.prepared - 1))
}
