//! Floating-point spectra: eigenvalues, reciprocal pairing, the counting zeta function.

mod jacobi;
mod refine;
mod zeta;

pub use jacobi::{eigenvalues_sym, jacobi_eigenvalues, Spectrum, DEFAULT_TOL, SPECTRAL_LIMIT};
pub use refine::{refined_logs, LogPair, RefinedLogs};
pub use zeta::{
    functional_equation_residual, plain_mirror_residual, zeta, zeta_grid, Region, ZetaFunction, ZetaGrid, ZetaSample,
};

use crate::error::{Error, Result};

/// `max_k |λ_k · λ_{n+1−k} − 1|` over the ascending spectrum; zero when the spectrum is
/// closed under `λ ↦ 1/λ`.
pub fn spectral_symmetry_residual(spec: &Spectrum) -> f64 {
    let ev = &spec.eigenvalues;
    let n = ev.len();
    (0..n).map(|k| (ev[k] * ev[n - 1 - k] - 1.0).abs()).fold(0.0, f64::max)
}

/// Number of eigenvalues within `tol` of one.
pub fn unit_eigenvalue_multiplicity(spec: &Spectrum, tol: f64) -> usize {
    spec.count_near(1.0, tol)
}

/// `max_k |μ_k + μ_{n+1−k}|`: zero when the spectrum is symmetric about the origin.
pub fn origin_symmetry_residual(spec: &Spectrum) -> f64 {
    let ev = &spec.eigenvalues;
    let n = ev.len();
    (0..n).map(|k| (ev[k] + ev[n - 1 - k]).abs()).fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Binning {
    /// Equal-width bins on `[λ_min, λ_max]`.
    Linear,
    /// Equal-width bins in `log λ` on `[−M, M]`, `M = max |log λ|`; mirror-symmetric under
    /// `λ ↦ 1/λ`. Positive spectra only.
    Log,
}

/// Normalized eigenvalue histogram.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    /// `bins + 1` ascending edges (in `log λ` for [`Binning::Log`]).
    pub edges: Vec<f64>,
    /// Fraction of eigenvalues per bin; sums to one.
    pub mass: Vec<f64>,
}

pub fn density_of_states(spec: &Spectrum, bins: usize, binning: Binning) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::input("density of states needs at least one bin"));
    }
    if spec.is_empty() {
        return Err(Error::input("density of states of an empty spectrum"));
    }
    let values: Vec<f64> = match binning {
        Binning::Linear => spec.eigenvalues.clone(),
        Binning::Log => {
            if spec.eigenvalues.iter().any(|&x| x <= 0.0) {
                return Err(Error::Domain("log binning needs a positive spectrum".into()));
            }
            spec.eigenvalues.iter().map(|x| x.ln()).collect()
        }
    };
    let (mut lo, mut hi) = match binning {
        Binning::Linear => (values[0], values[values.len() - 1]),
        Binning::Log => {
            let m = values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            (-m, m)
        }
    };
    if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
        lo -= 0.5;
        hi += 0.5;
    }
    let width = (hi - lo) / bins as f64;
    let mut mass = vec![0.0; bins];
    let unit = 1.0 / values.len() as f64;
    for x in values {
        let idx = (((x - lo) / width).floor().max(0.0) as usize).min(bins - 1);
        mass[idx] += unit;
    }
    let edges = (0..=bins).map(|i| lo + width * i as f64).collect();
    Ok(Histogram { edges, mass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum { eigenvalues: v.to_vec(), tol: DEFAULT_TOL }
    }

    #[test]
    fn residuals() {
        assert_eq!(spectral_symmetry_residual(&spec(&[1.0])), 0.0);
        assert!(spectral_symmetry_residual(&spec(&[0.5, 1.0, 2.0])) < 1e-15);
        assert!(spectral_symmetry_residual(&spec(&[2.0, 3.0])) > 1.0);
        assert_eq!(origin_symmetry_residual(&spec(&[-2.0, 0.0, 2.0])), 0.0);
        assert_eq!(unit_eigenvalue_multiplicity(&spec(&[0.5, 1.0, 1.0 + 1e-12, 2.0]), 1e-9), 2);
    }

    #[test]
    fn point_histogram() {
        let h = density_of_states(&spec(&[1.0]), 1, Binning::Linear).unwrap();
        assert_eq!(h.mass, vec![1.0]);
        let h = density_of_states(&spec(&[1.0]), 1, Binning::Log).unwrap();
        assert_eq!(h.mass, vec![1.0]);
    }

    #[test]
    fn histogram_mass_is_one() {
        let h = density_of_states(&spec(&[0.25, 0.5, 1.0, 2.0, 4.0]), 4, Binning::Log).unwrap();
        assert!((h.mass.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert_eq!(h.edges.len(), 5);
        assert!(density_of_states(&spec(&[1.0]), 0, Binning::Linear).is_err());
        assert!(density_of_states(&spec(&[-1.0, 1.0]), 3, Binning::Log).is_err());
    }
}
