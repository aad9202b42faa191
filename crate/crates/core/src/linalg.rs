//! Dense complex linear algebra for small Hermitian problems.
//!
//! Everything here targets matrices of dimension ≤ 16: a cyclic Jacobi
//! eigensolver for Hermitian input and the unitary propagator
//! `exp(−i H t)` assembled from the spectral decomposition. The solver is
//! deterministic: identical input produces bit-identical eigenpairs, and
//! each eigenvector's phase is fixed by making its largest-magnitude
//! component real and positive.

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::tolerances::HERMITICITY_TOL;

const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: max |m − m†| entry is {max_asymmetry:.3e}, tolerance {tol:.1e}")]
    NotHermitian { max_asymmetry: f64, tol: f64 },
    #[error("non-finite entry at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("evolution time must be finite, got {0}")]
    NonFiniteTime(f64),
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

/// Dense square matrix of complex amplitudes, row-major storage.
///
/// Basis states carry 1-based labels |1⟩..|D⟩ in the surrounding domain
/// code; state |d⟩ maps to row/column index `d − 1` here.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self { dim, entries: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, entry(r, c));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn column(&self, col: usize) -> Vec<C64> {
        (0..self.dim).map(|r| self.get(r, col)).collect()
    }

    /// Scale column `j` by `factors[j]`; used for V·diag(f).
    pub(crate) fn scale_columns(&self, factors: &[C64]) -> Self {
        assert_eq!(factors.len(), self.dim);
        Self::from_fn(self.dim, |r, c| self.get(r, c) * factors[c])
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of |m − m†|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    /// Largest entry of |m†m − I|.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).max_abs_diff(&Self::identity(self.dim))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    fn check_finite(&self) -> Result<(), LinalgError> {
        for r in 0..self.dim {
            for c in 0..self.dim {
                let z = self.get(r, c);
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(LinalgError::NonFiniteEntry { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    /// (m + m†)/2, with the diagonal forced exactly real.
    fn symmetrized(&self) -> Self {
        let mut out = Self::from_fn(self.dim, |r, c| {
            (self.get(r, c) + self.get(c, r).conj()).scale(0.5)
        });
        for i in 0..self.dim {
            let d = out.get(i, i);
            out.set(i, i, C64::new(d.re, 0.0));
        }
        out
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is symmetrized as (m + m†)/2 before iterating to absorb
/// construction rounding; asymmetry beyond [`HERMITICITY_TOL`] is
/// rejected. Eigenvalues come back ascending, eigenvectors as the columns
/// of a unitary matrix satisfying m = V diag(λ) V†.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix), LinalgError> {
    m.check_finite()?;
    let defect = m.hermiticity_defect();
    if defect > HERMITICITY_TOL {
        return Err(LinalgError::NotHermitian { max_asymmetry: defect, tol: HERMITICITY_TOL });
    }

    let n = m.dim();
    let mut a = m.symmetrized();
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off_max = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a.get(p, q).norm());
            }
        }
        let scale = a.max_abs_entry().max(f64::MIN_POSITIVE);
        if off_max <= (n as f64) * f64::EPSILON * scale {
            return Ok(sort_and_fix_phases(&a, &v));
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    Err(LinalgError::NoConvergence { sweeps: MAX_JACOBI_SWEEPS })
}

/// One complex Jacobi rotation annihilating the (p, q) entry.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a.get(p, q);
    let abs_apq = apq.norm();
    if abs_apq < f64::MIN_POSITIVE {
        return;
    }
    let phase = apq.unscale(abs_apq);
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    // Rotation angle from t² − 2τt − 1 = 0, smaller root for stability.
    let tau = (aqq - app) / (2.0 * abs_apq);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let sp = phase.scale(t * c); // s·e^{iφ}

    // A ← A·R, columns p and q.
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip.scale(c) + sp.conj() * aiq);
        a.set(i, q, aiq.scale(c) - sp * aip);
    }
    // A ← R†·A, rows p and q.
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj.scale(c) + sp * aqj);
        a.set(q, j, aqj.scale(c) - sp.conj() * apj);
    }
    // V ← V·R.
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip.scale(c) + sp.conj() * viq);
        v.set(i, q, viq.scale(c) - sp * vip);
    }
    // The rotation annihilates (p, q) analytically; pin the residue.
    let app_new = a.get(p, p).re;
    let aqq_new = a.get(q, q).re;
    a.set(p, p, C64::new(app_new, 0.0));
    a.set(q, q, C64::new(aqq_new, 0.0));
    a.set(p, q, C64::new(0.0, 0.0));
    a.set(q, p, C64::new(0.0, 0.0));
}

fn sort_and_fix_phases(a: &ComplexMatrix, v: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = a.dim();
    let evals: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).expect("finite eigenvalues"));

    let mut sorted = Vec::with_capacity(n);
    let mut vectors = ComplexMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        sorted.push(evals[old_col]);
        let mut pivot_row = 0;
        let mut pivot_mag = 0.0f64;
        for i in 0..n {
            let mag = v.get(i, old_col).norm_sqr();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        let pivot = v.get(pivot_row, old_col);
        let mag = pivot.norm();
        let factor = if mag > 0.0 { pivot.conj().unscale(mag) } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            vectors.set(i, new_col, v.get(i, old_col) * factor);
        }
    }
    (sorted, vectors)
}

/// Unitary propagator U = exp(−i h t) = V diag(e^{−iλt}) V† for Hermitian h.
pub fn unitary_exp(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix, LinalgError> {
    if !t.is_finite() {
        return Err(LinalgError::NonFiniteTime(t));
    }
    let (evals, vecs) = hermitian_eigen(h)?;
    let phases: Vec<C64> = evals.iter().map(|&l| C64::from_polar(1.0, -l * t)).collect();
    Ok(vecs.scale_columns(&phases).mul(&vecs.adjoint()))
}
