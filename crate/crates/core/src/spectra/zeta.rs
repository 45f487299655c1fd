use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use super::refine::{refined_logs, LogPair};
use super::{eigenvalues_sym, Spectrum};
use crate::error::{Error, Result};
use crate::exact::{char_poly, Polynomial, CHAR_POLY_LIMIT};
use crate::matrix::IntegerMatrix;
use crate::rng::SeededRng;

/// `ζ(s) = Σ_k λ_k^{−s} = Σ_k exp(−s log λ_k)` with the real logarithm of each `λ_k > 0`.
///
/// Logarithms are held as double-double pairs and each term is formed with the rounding error
/// of `s · log λ` carried into the exponential, so that `ζ(s)` and `ζ(−s̄)` for a reciprocal
/// spectrum are computed from exactly mirrored inputs.
#[derive(Clone, Debug)]
pub struct ZetaFunction {
    logs: Vec<LogPair>,
    unrefined: usize,
}

impl ZetaFunction {
    /// From float eigenvalues alone.
    pub fn new(spec: &Spectrum) -> Result<Self> {
        if let Some(bad) = spec.eigenvalues.iter().find(|&&x| !(x > 0.0)) {
            return Err(Error::Domain(format!(
                "zeta needs positive eigenvalues, found {bad}"
            )));
        }
        let logs = spec
            .eigenvalues
            .iter()
            .map(|x| LogPair {
                hi: x.ln(),
                lo: 0.0,
            })
            .collect();
        Ok(Self {
            logs,
            unrefined: spec.len(),
        })
    }

    /// Eigenvalues of the symmetric integer matrix `m`, polished against its exact
    /// characteristic polynomial when `n ≤ CHAR_POLY_LIMIT`.
    pub fn for_matrix(m: &IntegerMatrix, tol: f64) -> Result<Self> {
        let spec = eigenvalues_sym(m, tol)?;
        if m.order() > CHAR_POLY_LIMIT {
            return Self::new(&spec);
        }
        Self::refined(&spec, &char_poly(m)?)
    }

    /// Float eigenvalues polished against `poly`, the exact characteristic polynomial.
    pub fn refined(spec: &Spectrum, poly: &Polynomial) -> Result<Self> {
        let refined = refined_logs(spec, poly)?;
        Ok(Self { logs: refined.logs, unrefined: refined.unrefined })
    }

    pub fn logs(&self) -> &[LogPair] {
        &self.logs
    }

    /// Eigenvalues whose logarithm is only float accurate.
    pub fn unrefined(&self) -> usize {
        self.unrefined
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        let (a, b) = (s.re, s.im);
        let mut re = Neumaier::default();
        let mut im = Neumaier::default();
        for l in &self.logs {
            // −a log λ and −b log λ with their rounding errors.
            let xh = -a * l.hi;
            let xl = (-a).mul_add(l.hi, -xh) - a * l.lo;
            let th = -b * l.hi;
            let tl = (-b).mul_add(l.hi, -th) - b * l.lo;
            let e = xh.exp();
            let mag = e + e * xl;
            let (sin, cos) = th.sin_cos();
            re.add(mag * (cos - tl * sin));
            im.add(mag * (sin + tl * cos));
        }
        Complex64::new(re.total(), im.total())
    }
}

/// Compensated summation that also absorbs large cancelling terms.
#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

pub fn zeta(spec: &Spectrum, s: Complex64) -> Result<Complex64> {
    Ok(ZetaFunction::new(spec)?.eval(s))
}

/// `max |ζ(−a+ib) − conj ζ(a+ib)|` over seeded samples with `a ∈ [−4, 4]`, `b ∈ [0, 30]`.
///
/// For a spectrum closed under `λ ↦ 1/λ`, `ζ(−a+ib) = Σ λ^{a−ib}` is the complex conjugate of
/// `ζ(a+ib)`, so `|ζ|` is mirror symmetric about `Re s = 0` and `arg ζ` is antisymmetric.
/// The plain difference `ζ(a+ib) − ζ(−a+ib)` vanishes only on the real axis; see
/// [`plain_mirror_residual`].
pub fn functional_equation_residual(spec: &Spectrum, samples: usize, seed: u64) -> Result<f64> {
    Ok(ZetaFunction::new(spec)?.functional_equation_residual(samples, seed))
}

/// `max |ζ(a+ib) − ζ(−a+ib)|` over the same samples as [`functional_equation_residual`].
pub fn plain_mirror_residual(spec: &Spectrum, samples: usize, seed: u64) -> Result<f64> {
    Ok(ZetaFunction::new(spec)?.plain_mirror_residual(samples, seed))
}

impl ZetaFunction {
    /// See the free function [`functional_equation_residual`].
    pub fn functional_equation_residual(&self, samples: usize, seed: u64) -> f64 {
        self.mirror_samples(samples, seed, |left, right| (right - left.conj()).norm())
    }

    pub fn plain_mirror_residual(&self, samples: usize, seed: u64) -> f64 {
        self.mirror_samples(samples, seed, |left, right| (left - right).norm())
    }

    fn mirror_samples(&self, samples: usize, seed: u64, gap: impl Fn(Complex64, Complex64) -> f64) -> f64 {
        let mut rng = SeededRng::new(seed);
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let a = rng.uniform_f64(-4.0, 4.0);
            let b = rng.uniform_f64(0.0, 30.0);
            worst = worst.max(gap(self.eval(Complex64::new(a, b)), self.eval(Complex64::new(-a, b))));
        }
        worst
    }
}

/// Rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Default for Region {
    /// `|Re s| ≤ 4`, `0 ≤ Im s ≤ 30`.
    fn default() -> Self {
        Self {
            re_min: -4.0,
            re_max: 4.0,
            im_min: 0.0,
            im_max: 30.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaSample {
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    pub arg: f64,
}

/// `|ζ|` and `arg ζ` sampled on a rectangular lattice, row-major: `Im s` is the slow index
/// and `Re s` the fast one.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaGrid {
    pub region: Region,
    pub re_step: f64,
    pub im_step: f64,
    pub re_count: usize,
    pub im_count: usize,
    pub samples: Vec<ZetaSample>,
}

/// Lattice points `lo, lo+step, …` up to `hi` (inclusive within rounding), rounded to 12 decimals.
fn lattice(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..count)
        .map(|i| ((lo + step * i as f64) * 1e12).round() / 1e12)
        .collect()
}

pub fn zeta_grid(spec: &Spectrum, region: Region, re_step: f64, im_step: f64) -> Result<ZetaGrid> {
    ZetaFunction::new(spec)?.grid(region, re_step, im_step)
}

impl ZetaFunction {
    pub fn grid(&self, region: Region, re_step: f64, im_step: f64) -> Result<ZetaGrid> {
        if !(re_step > 0.0 && im_step > 0.0) {
            return Err(Error::input("grid steps must be positive"));
        }
        if !(region.re_min <= region.re_max && region.im_min <= region.im_max) {
            return Err(Error::input("empty grid region"));
        }
        let z = self;
        let res = lattice(region.re_min, region.re_max, re_step);
        let ims = lattice(region.im_min, region.im_max, im_step);
        let samples = ims
            .par_iter()
            .flat_map_iter(|&im| {
                let z = &z;
                res.iter().map(move |&re| {
                    let v = z.eval(Complex64::new(re, im));
                    ZetaSample {
                        re,
                        im,
                        abs: v.norm(),
                        arg: v.arg(),
                    }
                })
            })
            .collect();
        Ok(ZetaGrid {
            region,
            re_step,
            im_step,
            re_count: res.len(),
            im_count: ims.len(),
            samples,
        })
    }
}

impl ZetaGrid {
    pub fn sample(&self, re_index: usize, im_index: usize) -> &ZetaSample {
        &self.samples[im_index * self.re_count + re_index]
    }

    /// `max |ζ(a+ib)| − |ζ(−a+ib)|` over mirrored lattice columns. Needs a region symmetric
    /// about the imaginary axis.
    pub fn mirror_residual(&self) -> Result<f64> {
        if (self.region.re_min + self.region.re_max).abs() > 1e-12 {
            return Err(Error::input("mirror check needs re_min = -re_max"));
        }
        let mut worst = 0.0f64;
        for j in 0..self.im_count {
            for i in 0..self.re_count {
                let a = self.sample(i, j);
                let b = self.sample(self.re_count - 1 - i, j);
                worst = worst.max((a.abs - b.abs).abs());
            }
        }
        Ok(worst)
    }

    /// CSV with header `re,im,abs,arg`, one row per sample in storage order.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["re", "im", "abs", "arg"])?;
        for s in &self.samples {
            w.write_record([
                s.re.to_string(),
                s.im.to_string(),
                s.abs.to_string(),
                s.arg.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("ascii"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::DEFAULT_TOL;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum {
            eigenvalues: v.to_vec(),
            tol: DEFAULT_TOL,
        }
    }

    #[test]
    fn zeta_at_zero_counts_eigenvalues() {
        let s = spec(&[0.5, 1.0, 2.0]);
        let v = zeta(&s, Complex64::new(0.0, 0.0)).unwrap();
        assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zeta_rejects_nonpositive_spectrum() {
        assert!(matches!(
            zeta(&spec(&[0.0, 1.0]), Complex64::new(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(ZetaFunction::new(&spec(&[f64::NAN])).is_err());
    }

    #[test]
    fn point_grid_is_constant_one() {
        let g = zeta_grid(&spec(&[1.0]), Region::default(), 0.5, 0.5).unwrap();
        assert_eq!(g.re_count, 17);
        assert_eq!(g.im_count, 61);
        assert!(g.samples.iter().all(|s| (s.abs - 1.0).abs() < 1e-15));
        assert_eq!(g.mirror_residual().unwrap(), 0.0);
    }

    #[test]
    fn default_lattice_has_exact_endpoints() {
        let xs = lattice(-4.0, 4.0, 0.05);
        assert_eq!(xs.len(), 161);
        assert_eq!(xs[0], -4.0);
        assert_eq!(xs[80], 0.0);
        assert_eq!(xs[160], 4.0);
        assert_eq!(xs[3], -3.85);
    }

    #[test]
    fn functional_equation_for_point_is_exact() {
        assert_eq!(
            functional_equation_residual(&spec(&[1.0]), 50, 3).unwrap(),
            0.0
        );
    }

    #[test]
    fn reciprocal_pair_is_conjugate_symmetric() {
        let s = spec(&[0.25, 1.0, 4.0]);
        assert!(functional_equation_residual(&s, 100, 0).unwrap() < 1e-12);
        // Off the real axis the mirrored values are conjugates, not equal.
        assert!(plain_mirror_residual(&s, 100, 0).unwrap() > 0.1);
        let z = ZetaFunction::new(&s).unwrap();
        let (a, b) = (
            z.eval(Complex64::new(1.5, 2.0)),
            z.eval(Complex64::new(-1.5, 2.0)),
        );
        assert!((a.norm() - b.norm()).abs() < 1e-12);
    }

    #[test]
    fn csv_header_and_rows() {
        let g = zeta_grid(
            &spec(&[1.0]),
            Region {
                re_min: 0.0,
                re_max: 1.0,
                im_min: 0.0,
                im_max: 0.0,
            },
            1.0,
            1.0,
        )
        .unwrap();
        assert_eq!(
            g.to_csv_string().unwrap(),
            "re,im,abs,arg\n0,0,1,0\n1,0,1,0\n"
        );
    }

    #[test]
    fn bad_steps_rejected() {
        assert!(zeta_grid(&spec(&[1.0]), Region::default(), 0.0, 1.0).is_err());
    }
}
