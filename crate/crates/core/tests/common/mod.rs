//! Shared test oracles, independent of the library's computation paths.

#![allow(dead_code)]

use num_complex::Complex64 as C64;
use qudit_ramsey::ComplexMatrix;

/// Matrix exponential exp(−i h t) by scaling-and-squaring with a 20-term
/// Taylor series. Deliberately avoids the eigendecomposition route used
/// by the library so the two paths are independent.
pub fn expm_taylor(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let n = h.dim();
    // A = −i·h·t
    let a = ComplexMatrix::from_fn(n, |r, c| h.get(r, c) * C64::new(0.0, -t));

    // scale so the series argument has small norm
    let mut norm = 0.0f64;
    for r in 0..n {
        let row_sum: f64 = (0..n).map(|c| a.get(r, c).norm()).sum();
        norm = norm.max(row_sum);
    }
    let mut squarings = 0u32;
    let mut scale = 1.0f64;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let scaled = ComplexMatrix::from_fn(n, |r, c| a.get(r, c).scale(scale));

    // 20-term Taylor series of exp(scaled)
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=20 {
        term = term.mul(&scaled);
        term = ComplexMatrix::from_fn(n, |r, c| term.get(r, c).unscale(k as f64));
        let previous = sum.clone();
        sum = ComplexMatrix::from_fn(n, |r, c| previous.get(r, c) + term.get(r, c));
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// det(m − λI) by complex LU with partial pivoting; used to check
/// eigenvalues against the characteristic polynomial.
pub fn char_poly_at(m: &ComplexMatrix, lambda: f64) -> C64 {
    let n = m.dim();
    let mut a: Vec<Vec<C64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        m.get(r, c) - C64::new(lambda, 0.0)
                    } else {
                        m.get(r, c)
                    }
                })
                .collect()
        })
        .collect();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot_mag == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            det = -det;
        }
        let pivot = a[col][col];
        det *= pivot;
        let pivot_row: Vec<C64> = a[col][col..].to_vec();
        for r in (col + 1)..n {
            let factor = a[r][col] / pivot;
            for (offset, &p) in pivot_row.iter().enumerate() {
                a[r][col + offset] -= factor * p;
            }
        }
    }
    det
}

/// Deterministic 64-bit generator for reproducible random parameter sets.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let unit = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * unit
    }
}
