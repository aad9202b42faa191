//! Detuning sweeps and the aggregate metrics table.
//!
//! Per-point evaluations are independent, so sweeps run on a thread pool
//! by default; a single-threaded path producing bit-identical output is
//! part of the determinism contract.

use rayon::prelude::*;
use thiserror::Error;

use crate::metrics::{self, FringeMetrics, FringeSignal, MetricsError, SignalMeta};
use crate::protocols::{self, Protocol, ProtocolError, ProtocolKind};
use crate::wm_model::{default_rabi, WmError, WmSystem, DEFAULT_PULSE_DURATION, DEFAULT_TAU};

pub const DEFAULT_POINTS: usize = 4001;
pub const DEFAULT_DELTA_MIN: f64 = -1.0;
pub const DEFAULT_DELTA_MAX: f64 = 1.0;
/// Minimum grid size accepted by the metrics table.
pub const MIN_TABLE_POINTS: usize = 2001;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep window is empty or inverted: delta_min {min} must lie below delta_max {max}")]
    InvalidWindow { min: f64, max: f64 },
    #[error("sweep needs at least 3 grid points, got {0}")]
    TooFewPoints(usize),
    #[error("grid points must be odd so the window midpoint is sampled, got {0}")]
    EvenPoints(usize),
    #[error("table requires at least {minimum} grid points, got {points}")]
    TooFewTablePoints { points: usize, minimum: usize },
    #[error("table row {label}: {source}")]
    TableRow {
        label: &'static str,
        #[source]
        source: Box<SweepError>,
    },
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Model(#[from] WmError),
}

/// A fully-resolved sweep request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub protocol: Protocol,
    pub tau: f64,
    pub rabi: f64,
    pub pulse_duration: f64,
    pub delta_min: f64,
    pub delta_max: f64,
    pub points: usize,
}

impl SweepSpec {
    /// Validates the window and grid; `rabi = None` applies the resonant
    /// π/2-pulse calibration Ω = π/(2T).
    pub fn new(
        protocol: Protocol,
        tau: f64,
        rabi: Option<f64>,
        pulse_duration: f64,
        delta_min: f64,
        delta_max: f64,
        points: usize,
    ) -> Result<Self, SweepError> {
        if !(delta_min.is_finite() && delta_max.is_finite()) || delta_min >= delta_max {
            return Err(SweepError::InvalidWindow { min: delta_min, max: delta_max });
        }
        if points < 3 {
            return Err(SweepError::TooFewPoints(points));
        }
        if points.is_multiple_of(2) {
            return Err(SweepError::EvenPoints(points));
        }
        let rabi = rabi.unwrap_or_else(|| default_rabi(pulse_duration));
        // validates dimension, pulse duration and parameter finiteness
        WmSystem::new(protocol.dim, rabi, pulse_duration, 0.0)?;
        if !tau.is_finite() || tau < 0.0 {
            return Err(WmError::InvalidInterrogationTime(tau).into());
        }
        Ok(Self { protocol, tau, rabi, pulse_duration, delta_min, delta_max, points })
    }

    /// Caption parameters: τ = 10, T = 1, Ω = π/2, Δ ∈ [−1, 1], 4001 points.
    pub fn reference(protocol: Protocol) -> Result<Self, SweepError> {
        Self::new(
            protocol,
            DEFAULT_TAU,
            None,
            DEFAULT_PULSE_DURATION,
            DEFAULT_DELTA_MIN,
            DEFAULT_DELTA_MAX,
            DEFAULT_POINTS,
        )
    }

    /// i-th grid detuning. The formula divides the index fraction first so
    /// the midpoint and the endpoints land exactly.
    pub fn delta_at(&self, index: usize) -> f64 {
        self.delta_min
            + (self.delta_max - self.delta_min) * (index as f64 / (self.points as f64 - 1.0))
    }

    fn meta(&self) -> SignalMeta {
        SignalMeta {
            protocol: self.protocol,
            tau: self.tau,
            rabi: self.rabi,
            pulse_duration: self.pulse_duration,
        }
    }

    fn point(&self, index: usize) -> Result<f64, SweepError> {
        let sys = WmSystem::new(
            self.protocol.dim,
            self.rabi,
            self.pulse_duration,
            self.delta_at(index),
        )?;
        Ok(protocols::signal(self.protocol, &sys, self.tau)?)
    }
}

/// Run the sweep on the global thread pool. Deterministic: identical
/// specs produce bit-identical signals, and the output matches
/// [`run_sweep_single_threaded`] exactly.
pub fn run_sweep(spec: &SweepSpec) -> Result<FringeSignal, SweepError> {
    let probs = (0..spec.points)
        .into_par_iter()
        .map(|i| spec.point(i))
        .collect::<Result<Vec<f64>, SweepError>>()?;
    assemble(spec, probs)
}

/// Sequential fallback with bit-identical output.
pub fn run_sweep_single_threaded(spec: &SweepSpec) -> Result<FringeSignal, SweepError> {
    let probs = (0..spec.points).map(|i| spec.point(i)).collect::<Result<Vec<f64>, _>>()?;
    assemble(spec, probs)
}

fn assemble(spec: &SweepSpec, probs: Vec<f64>) -> Result<FringeSignal, SweepError> {
    let deltas: Vec<f64> = (0..spec.points).map(|i| spec.delta_at(i)).collect();
    Ok(FringeSignal::new(deltas, probs, spec.meta())?)
}

/// One row of the metrics table.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTableRow {
    pub label: &'static str,
    pub resolution: f64,
    pub contrast: f64,
    pub rci: f64,
}

/// The eight tabulated protocols in presentation order: the qubit, the
/// two qutrit gate schemes, then the pulse protocol for D = 3..7.
pub fn table_protocols() -> Vec<(&'static str, Protocol)> {
    let wm = |dim| Protocol::new(ProtocolKind::WmRamsey, dim).expect("valid pulse protocol");
    vec![
        ("2", wm(2)),
        ("sqrtX3", Protocol::new(ProtocolKind::SqrtX, 3).expect("valid gate protocol")),
        ("QFT3", Protocol::new(ProtocolKind::Qft, 3).expect("valid gate protocol")),
        ("3", wm(3)),
        ("4", wm(4)),
        ("5", wm(5)),
        ("6", wm(6)),
        ("7", wm(7)),
    ]
}

/// Reference metrics for the table protocols at the caption parameters:
/// (label, resolution, contrast, rci).
pub const REFERENCE_TABLE: [(&str, f64, f64, f64); 8] = [
    ("2", 3.584, 0.999, 3.582),
    ("sqrtX3", 3.184, 0.623, 1.984),
    ("QFT3", 6.823, 0.583, 3.976),
    ("3", 7.165, 0.998, 7.151),
    ("4", 10.756, 0.706, 7.588),
    ("5", 14.330, 0.745, 10.681),
    ("6", 17.801, 0.613, 10.912),
    ("7", 21.390, 0.569, 12.171),
];

/// Metrics table over all tabulated protocols at the caption parameters.
pub fn table_one(points: usize) -> Result<Vec<MetricTableRow>, SweepError> {
    table_impl(points, run_sweep)
}

/// [`table_one`] on the sequential sweep path.
pub fn table_one_single_threaded(points: usize) -> Result<Vec<MetricTableRow>, SweepError> {
    table_impl(points, run_sweep_single_threaded)
}

fn table_impl(
    points: usize,
    runner: fn(&SweepSpec) -> Result<FringeSignal, SweepError>,
) -> Result<Vec<MetricTableRow>, SweepError> {
    if points < MIN_TABLE_POINTS {
        return Err(SweepError::TooFewTablePoints { points, minimum: MIN_TABLE_POINTS });
    }
    let mut rows = Vec::new();
    for (label, protocol) in table_protocols() {
        let row = (|| -> Result<MetricTableRow, SweepError> {
            let spec = SweepSpec::new(
                protocol,
                DEFAULT_TAU,
                None,
                DEFAULT_PULSE_DURATION,
                DEFAULT_DELTA_MIN,
                DEFAULT_DELTA_MAX,
                points,
            )?;
            let signal = runner(&spec)?;
            let FringeMetrics { resolution, contrast, rci, .. } = metrics::fringe_metrics(&signal)?;
            Ok(MetricTableRow { label, resolution, contrast, rci })
        })()
        .map_err(|source| SweepError::TableRow { label, source: Box::new(source) })?;
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerances::ANALYTIC_NUMERIC_TOL;
    use crate::wm_model;

    fn wm(dim: usize) -> Protocol {
        Protocol::new(ProtocolKind::WmRamsey, dim).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            SweepSpec::new(wm(2), 10.0, None, 1.0, 1.0, -1.0, 101),
            Err(SweepError::InvalidWindow { .. })
        ));
        assert!(matches!(
            SweepSpec::new(wm(2), 10.0, None, 1.0, -1.0, 1.0, 100),
            Err(SweepError::EvenPoints(100))
        ));
        assert!(matches!(
            SweepSpec::new(wm(2), 10.0, None, 1.0, -1.0, 1.0, 1),
            Err(SweepError::TooFewPoints(1))
        ));
        assert!(matches!(
            SweepSpec::new(wm(2), -1.0, None, 1.0, -1.0, 1.0, 101),
            Err(SweepError::Model(WmError::InvalidInterrogationTime(_)))
        ));
    }

    #[test]
    fn default_rabi_is_half_pi_over_pulse() {
        let spec = SweepSpec::new(wm(2), 10.0, None, 2.0, -1.0, 1.0, 101).unwrap();
        assert!((spec.rabi - std::f64::consts::FRAC_PI_2 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn grid_hits_midpoint_and_endpoints_exactly() {
        let spec = SweepSpec::reference(wm(2)).unwrap();
        assert_eq!(spec.delta_at(0), -1.0);
        assert_eq!(spec.delta_at(spec.points - 1), 1.0);
        assert_eq!(spec.delta_at((spec.points - 1) / 2), 0.0);
    }

    #[test]
    fn resonant_point_of_reference_qubit_sweep_is_unity() {
        let spec = SweepSpec::new(wm(2), 10.0, None, 1.0, -1.0, 1.0, 401).unwrap();
        let signal = run_sweep(&spec).unwrap();
        let mid = (spec.points - 1) / 2;
        assert!((signal.probs()[mid] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn qutrit_sweep_matches_closed_form_pointwise() {
        let spec = SweepSpec::new(wm(3), 10.0, None, 1.0, -1.0, 1.0, 401).unwrap();
        let signal = run_sweep(&spec).unwrap();
        for (i, (&delta, &p)) in signal.deltas().iter().zip(signal.probs()).enumerate() {
            let sys = WmSystem::new(3, spec.rabi, 1.0, delta).unwrap();
            let expect = wm_model::analytic_qutrit_ramsey(&sys, 10.0).unwrap();
            assert!((p - expect).abs() < ANALYTIC_NUMERIC_TOL, "point {i}");
        }
    }

    #[test]
    fn ququartit_sweep_has_dominant_central_maximum() {
        let spec = SweepSpec::reference(wm(4)).unwrap();
        let signal = run_sweep(&spec).unwrap();
        let (maxima, _) = metrics::find_extrema(&signal);
        let global = maxima
            .iter()
            .cloned()
            .fold(None::<metrics::Extremum>, |best, e| match best {
                Some(b) if b.value >= e.value => Some(b),
                _ => Some(e),
            })
            .unwrap();
        assert!(global.delta.abs() < 1e-3, "global maximum at {}", global.delta);
        // flanking peaks: symmetric about zero and strictly lower
        let mut side: Vec<_> = maxima.iter().filter(|e| e.delta.abs() > 1e-3).collect();
        side.sort_by(|a, b| b.value.partial_cmp(&a.value).unwrap());
        let (s1, s2) = (side[0], side[1]);
        assert!((s1.delta + s2.delta).abs() < 1e-3, "side peaks not mirrored");
        assert!(s1.value < global.value && s2.value < global.value);
    }

    #[test]
    fn parallel_and_sequential_sweeps_agree_bitwise() {
        let spec = SweepSpec::new(wm(5), 10.0, None, 1.0, -1.0, 1.0, 801).unwrap();
        let a = run_sweep(&spec).unwrap();
        let b = run_sweep_single_threaded(&spec).unwrap();
        assert_eq!(a.probs().len(), b.probs().len());
        for (x, y) in a.probs().iter().zip(b.probs()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        let c = run_sweep(&spec).unwrap();
        for (x, y) in a.probs().iter().zip(c.probs()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn table_rejects_small_grids() {
        assert!(matches!(
            table_one(1001),
            Err(SweepError::TooFewTablePoints { points: 1001, minimum: MIN_TABLE_POINTS })
        ));
    }

    #[test]
    fn table_rows_in_reference_order() {
        let rows = table_one(MIN_TABLE_POINTS).unwrap();
        let labels: Vec<_> = rows.iter().map(|r| r.label).collect();
        assert_eq!(labels, vec!["2", "sqrtX3", "QFT3", "3", "4", "5", "6", "7"]);
        for row in &rows {
            assert!(row.resolution > 0.0);
            assert!((row.rci - row.resolution * row.contrast).abs() < 1e-12);
        }
    }

    #[test]
    fn resolution_scales_linearly_with_dimension() {
        let rows = table_one(MIN_TABLE_POINTS).unwrap();
        let re2 = rows[0].resolution;
        for row in rows.iter().filter(|r| r.label.len() == 1 && r.label != "2") {
            let d: usize = row.label.parse().unwrap();
            let per_gap = row.resolution / (d as f64 - 1.0);
            assert!(
                (per_gap / re2 - 1.0).abs() < 0.03,
                "dim {d}: Re/(D−1) = {per_gap:.4} vs Re(2) = {re2:.4}"
            );
        }
    }

    #[test]
    fn doubling_tau_doubles_qubit_resolution() {
        // Fringe period scales as 1/τ. A short pulse keeps the extra
        // pulse phase (effective time τ + 4T/π) below the 2% tolerance;
        // at T = 1 that offset alone would drag the ratio to 1.89.
        let m10 = metrics::fringe_metrics(
            &run_sweep(&SweepSpec::new(wm(2), 10.0, None, 0.1, -1.0, 1.0, 4001).unwrap()).unwrap(),
        )
        .unwrap();
        let m20 = metrics::fringe_metrics(
            &run_sweep(&SweepSpec::new(wm(2), 20.0, None, 0.1, -1.0, 1.0, 4001).unwrap()).unwrap(),
        )
        .unwrap();
        let ratio = m20.resolution / m10.resolution;
        assert!((ratio - 2.0).abs() < 0.04, "ratio {ratio}");
    }

    #[test]
    fn metrics_converge_under_grid_refinement() {
        for protocol in [wm(2), wm(5)] {
            let coarse = metrics::fringe_metrics(
                &run_sweep(&SweepSpec::new(protocol, 10.0, None, 1.0, -1.0, 1.0, 4001).unwrap())
                    .unwrap(),
            )
            .unwrap();
            let fine = metrics::fringe_metrics(
                &run_sweep(&SweepSpec::new(protocol, 10.0, None, 1.0, -1.0, 1.0, 8001).unwrap())
                    .unwrap(),
            )
            .unwrap();
            let d_re = (coarse.resolution / fine.resolution - 1.0).abs();
            let d_co = (coarse.contrast / fine.contrast - 1.0).abs();
            assert!(d_re < 0.002, "{protocol:?}: resolution drift {d_re:.5}");
            assert!(d_co < 0.002, "{protocol:?}: contrast drift {d_co:.5}");
        }
    }
}
