//! Numerical tolerances, fixed in one place.
//!
//! Constants are grouped by the subsystem that owns them. Tests assert
//! against these same values, so a change here propagates everywhere.

/// Maximum admissible |m − m†| entry before a matrix is rejected as
/// non-Hermitian. Ladder Hamiltonians are constructed analytically, so
/// asymmetry above rounding noise indicates a construction bug upstream.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Reconstruction error ‖V Λ V† − H‖_max allowed for the eigensolver.
pub const EIGEN_RECONSTRUCTION_TOL: f64 = 1e-10;

/// Unitarity defect ‖U†U − I‖_max allowed for spectral propagators.
pub const PROPAGATOR_UNITARITY_TOL: f64 = 1e-10;

/// exp(−iH·0) must reproduce the identity to this accuracy.
pub const ZERO_TIME_IDENTITY_TOL: f64 = 1e-12;

/// Unitarity defect allowed for a composed interrogation sequence.
pub const SEQUENCE_UNITARITY_TOL: f64 = 1e-9;

/// Unitarity defect allowed for ideal gates up to dimension 16.
pub const GATE_UNITARITY_TOL: f64 = 1e-11;

/// Agreement required between the qutrit closed forms and the numeric
/// propagator path.
pub const ANALYTIC_NUMERIC_TOL: f64 = 1e-9;

/// Probabilities may stray into [−slack, 1 + slack] from rounding before
/// being rejected as out of range.
pub const PROBABILITY_SLACK: f64 = 1e-9;

/// Grid spacings may deviate from uniformity by this fraction of the
/// full window width.
pub const GRID_UNIFORMITY_TOL: f64 = 1e-12;

/// Default detuning step for the quantum Fisher information derivative.
pub const QFI_DEFAULT_STEP: f64 = 1e-5;

/// Finite differences can leave the Fisher information marginally
/// negative; values above this floor are clamped to zero, anything below
/// it is a bug.
pub const QFI_NEGATIVE_FLOOR: f64 = -1e-8;
