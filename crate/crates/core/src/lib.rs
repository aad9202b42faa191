//! Ramsey interferometry for ladder-coupled multilevel (qudit) systems.
//!
//! A D-level system with Wigner–Majorana symmetry — nearest-neighbour
//! couplings ∝ √(d(D−d)) — behaves as a spin j = (D−1)/2 driven by a
//! single field, so standard two-pulse Ramsey interrogation extends to
//! any D without extra control hardware. This crate simulates those
//! interrogations (pulse-based and ideal-gate variants), sweeps the
//! detuning to produce fringe traces, and scores them with the
//! resolution–contrast index and quantum Fisher information.
//!
//! Module map:
//!
//! * [`linalg`] — dense complex matrices, Hermitian eigensolver, exp(−iHt);
//! * [`wm_model`] — ladder Hamiltonians, free evolution, pulses, qutrit
//!   closed forms;
//! * [`protocols`] — interrogation sequences and signal rules;
//! * [`metrics`] — extrema, resolution/contrast/RCI, Fisher information;
//! * [`sweep`] — detuning sweeps and the metrics table;
//! * [`tolerances`] — every numeric tolerance, in one place.

pub mod linalg;
pub mod metrics;
pub mod protocols;
pub mod sweep;
pub mod tolerances;
pub mod wm_model;

pub use linalg::{hermitian_eigen, unitary_exp, ComplexMatrix, LinalgError};
pub use metrics::{
    find_extrema, fringe_metrics, qfi, qfi_with_step, Extremum, FringeMetrics, FringeSignal,
    MetricsError, SignalMeta,
};
pub use protocols::{
    final_state, gate_sequence, qft_gate, ramsey_sequence, sequence, signal, signal_rule_for,
    sqrt_x_gate, Protocol, ProtocolError, ProtocolKind, SignalRule,
};
pub use sweep::{
    run_sweep, run_sweep_single_threaded, table_one, table_one_single_threaded, table_protocols,
    MetricTableRow, SweepError, SweepSpec, DEFAULT_DELTA_MAX, DEFAULT_DELTA_MIN, DEFAULT_POINTS,
    MIN_TABLE_POINTS, REFERENCE_TABLE,
};
pub use wm_model::{
    analytic_qutrit_propagator, analytic_qutrit_ramsey, default_rabi, free_evolution,
    ideal_qubit_fringe, pulse_propagator, wm_hamiltonian, WmError, WmSystem,
    DEFAULT_PULSE_DURATION, DEFAULT_TAU,
};
