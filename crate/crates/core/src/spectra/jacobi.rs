use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Default relative rotation threshold of the Jacobi solver.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Largest order accepted by the float eigensolver.
pub const SPECTRAL_LIMIT: usize = 2000;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, ascending, with multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// `λ_max / λ_min`; meaningful for positive spectra.
    pub fn condition_number(&self) -> f64 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi / lo,
            _ => 1.0,
        }
    }

    pub fn product(&self) -> f64 {
        self.eigenvalues.iter().product()
    }

    pub fn count_positive(&self) -> usize {
        self.eigenvalues.iter().filter(|&&x| x > 0.0).count()
    }

    pub fn count_near(&self, target: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|&&x| (x - target).abs() < tol).count()
    }
}

/// Cyclic Jacobi eigenvalues of a symmetric integer matrix.
pub fn eigenvalues_sym(m: &IntegerMatrix, tol: f64) -> Result<Spectrum> {
    let n = m.order();
    if n > SPECTRAL_LIMIT {
        return Err(Error::TooLarge { op: "float eigensolver", n, limit: SPECTRAL_LIMIT });
    }
    if !m.is_symmetric() {
        return Err(Error::input("eigenvalues_sym needs a symmetric matrix"));
    }
    let rows = m.to_f64()?;
    let mut eigenvalues = jacobi_eigenvalues(rows, tol);
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues, tol })
}

/// Cyclic Jacobi on a dense symmetric float matrix.
///
/// A pair `(p, q)` is rotated while `|a_pq| > tol · sqrt(|a_pp a_qq|)`. The relative
/// threshold keeps small eigenvalues of positive definite matrices accurate to high
/// relative precision. Pairs below `1e-30 · ‖A‖_F` are treated as converged.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Vec<f64> {
    let n = a.len();
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let floor = frob * 1e-30;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= floor || apq.abs() <= tol * (a[p][p] * a[q][q]).abs().sqrt() {
                    continue;
                }
                rotated = true;
                rotate(&mut a, p, q);
            }
        }
        if !rotated {
            break;
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..a.len() {
        if r == p || r == q {
            continue;
        }
        let g = a[r][p];
        let h = a[r][q];
        let rp = g - s * (h + g * tau);
        let rq = h + s * (g - h * tau);
        a[r][p] = rp;
        a[p][r] = rp;
        a[r][q] = rq;
        a[q][r] = rq;
    }
}
