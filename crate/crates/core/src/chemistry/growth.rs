use serde::Serialize;

use super::table::{Element, PeriodicTable};
use super::ChemistryError;

const TOLERANCE: f64 = 1e-10;
const MAX_ITERATIONS: usize = 100_000;

/// Square matrix whose entry `(i, j)` counts element `j` in the decay of element `i`.
/// Every decay product must be among `elements`.
pub fn decay_matrix(elements: &[Element]) -> Result<Vec<Vec<f64>>, ChemistryError> {
    let n = elements.len();
    let index = |name: &str| elements.iter().position(|e| e.name == name);
    let mut m = vec![vec![0.0; n]; n];
    for (i, e) in elements.iter().enumerate() {
        for p in &e.decay {
            let j = index(p).ok_or_else(|| {
                ChemistryError::Domain(format!("{} decays to {p}, which is not in the set", e.name))
            })?;
            m[i][j] += 1.0;
        }
    }
    Ok(m)
}

/// Dominant eigenvalue of a nonnegative matrix by power iteration on the row
/// vector of abundances. Returns `(lambda, iterations, residual)`.
pub fn dominant_eigenvalue(m: &[Vec<f64>]) -> Result<(f64, usize, f64), ChemistryError> {
    let n = m.len();
    if n == 0 {
        return Err(ChemistryError::Domain("empty matrix".into()));
    }
    let mut x = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        let mut y = vec![0.0; n];
        for (i, row) in m.iter().enumerate() {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            for (yj, &mij) in y.iter_mut().zip(row) {
                *yj += xi * mij;
            }
        }
        let lambda: f64 = y.iter().sum();
        if lambda <= 0.0 {
            return Err(ChemistryError::Domain("matrix is nilpotent on the start vector".into()));
        }
        y.iter_mut().for_each(|v| *v /= lambda);
        residual = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum::<f64>();
        x = y;
        if residual <= TOLERANCE {
            return Ok((lambda, it, residual));
        }
    }
    Err(ChemistryError::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

fn det_shifted(m: &[Vec<f64>], x: f64) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= x;
    }
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p][col].abs().total_cmp(&a[q][col].abs()))
            .expect("nonempty range");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if f != 0.0 {
                for c in col..n {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    det
}

/// A root of `det(M - xI)` in `[lo, hi]` by bisection; the determinant must
/// change sign over the interval.
pub fn characteristic_root(m: &[Vec<f64>], lo: f64, hi: f64) -> Result<f64, ChemistryError> {
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = det_shifted(m, lo).signum();
    let f_hi = det_shifted(m, hi).signum();
    if f_lo == f_hi {
        return Err(ChemistryError::Domain(format!("no sign change of det(M - xI) on [{lo}, {hi}]")));
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        let f_mid = det_shifted(m, mid).signum();
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid == f_lo {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    /// Dominant eigenvalue of the 92-element decay matrix.
    pub lambda: f64,
    pub iterations: usize,
    pub residual: f64,
    /// Bisection root of the characteristic polynomial near `lambda`.
    pub characteristic_root: f64,
    /// Dominant eigenvalue with the two transuranic elements included.
    pub lambda_all: f64,
}

/// Growth rate of the decay system, computed twice over and cross-checked.
pub fn growth_rate(table: &PeriodicTable) -> Result<GrowthReport, ChemistryError> {
    let m = decay_matrix(table.common())?;
    let (lambda, iterations, residual) = dominant_eigenvalue(&m)?;
    let root = characteristic_root(&m, lambda - 1e-4, lambda + 1e-4)?;
    if (root - lambda).abs() > 1e-8 {
        return Err(ChemistryError::InvariantViolation(format!(
            "power iteration gives {lambda}, characteristic polynomial gives {root}"
        )));
    }
    let (lambda_all, _, _) = dominant_eigenvalue(&decay_matrix(table.elements())?)?;
    if (lambda_all - lambda).abs() > 1e-8 {
        return Err(ChemistryError::InvariantViolation(format!(
            "92 elements give {lambda}, 94 give {lambda_all}"
        )));
    }
    Ok(GrowthReport { lambda, iterations, residual, characteristic_root: root, lambda_all })
}
