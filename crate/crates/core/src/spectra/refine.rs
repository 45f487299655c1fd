//! Eigenvalues beyond double precision.
//!
//! Jacobi eigenvalues are accurate to roughly `ε · λ_max` in absolute terms, which is a poor
//! relative accuracy for the small eigenvalues of an ill-conditioned `K`. Each cluster of
//! float eigenvalues is polished by Newton's method on the exact characteristic polynomial,
//! evaluated without rounding at dyadic points `X / 2^s`, and the logarithms are then taken
//! in 256-bit arithmetic and stored as double-double pairs.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, Zero};

use super::Spectrum;
use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// Fractional bits of the dyadic Newton iterates.
const FRACTION_BITS: u32 = 160;
const WORKING_PRECISION: usize = 256;
const MAX_NEWTON_STEPS: usize = 200;
/// Float eigenvalues closer than this (relatively) are treated as one multiple root.
const CLUSTER_GAP: f64 = 1e-8;
/// A polished root must stay this close (relatively) to the float estimate.
const ACCEPT_SHIFT: f64 = 1e-7;

/// `ln λ` as an unevaluated sum `hi + lo`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogPair {
    pub hi: f64,
    pub lo: f64,
}

/// Log-spectrum after polishing, with the number of eigenvalues that kept their float value.
#[derive(Clone, Debug)]
pub struct RefinedLogs {
    pub logs: Vec<LogPair>,
    pub unrefined: usize,
}

/// Derivative coefficients `(k+1) c_{k+1}`.
fn derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// `Σ c_k X^k Y^{deg−k}` with `Y = 2^s`, the polynomial scaled by `Y^deg`.
fn eval_scaled(coeffs: &[BigInt], x: &BigInt, s: u32) -> BigInt {
    let deg = coeffs.len() - 1;
    let mut acc = coeffs[deg].clone();
    for k in (0..deg).rev() {
        acc = acc * x + (&coeffs[k] << (s as usize * (deg - k)));
    }
    acc
}

/// Newton iteration `X ← X − m p(x) / p'(x)` on `x = X / 2^s`. Returns `None` if it does not
/// settle.
fn polish(coeffs: &[BigInt], slope: &[BigInt], x0: f64, m: usize) -> Option<BigInt> {
    let scale = 2f64.powi(FRACTION_BITS as i32);
    let mut x = BigInt::from_f64((x0 * scale).round())?;
    let mult = BigInt::from(m);
    for _ in 0..MAX_NEWTON_STEPS {
        // p(x) = P / 2^{sn}, p'(x) = D / 2^{s(n-1)}, so the step in units of 2^{-s} is m P / D.
        let p = eval_scaled(coeffs, &x, FRACTION_BITS);
        let d = eval_scaled(slope, &x, FRACTION_BITS);
        if p.is_zero() {
            return Some(x);
        }
        if d.is_zero() {
            return None;
        }
        let (num, den): (BigInt, BigInt) = if d.is_negative() { (-(&mult * p), -d) } else { (&mult * p, d) };
        // Round to nearest.
        let twice: BigInt = (num << 1usize) + &den;
        let step = twice.div_floor(&(den << 1usize));
        if step.is_zero() {
            return Some(x);
        }
        x -= step;
    }
    None
}

fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// `ln(X / 2^s)` as a double-double pair.
fn log_pair(x: &BigInt, cc: &mut Consts) -> LogPair {
    let rm = RoundingMode::ToEven;
    let p = WORKING_PRECISION;
    let value = BigFloat::parse(&x.to_string(), Radix::Dec, p, rm, cc).mul(
        &BigFloat::from_f64(2f64.powi(-(FRACTION_BITS as i32)), p),
        p,
        rm,
    );
    let log = value.ln(p, rm, cc);
    let hi = to_f64(&log);
    let lo = to_f64(&log.sub(&BigFloat::from_f64(hi, p), p, rm));
    LogPair { hi, lo }
}

/// Polishes every eigenvalue of `spec` against `poly`, whose roots it approximates, and
/// returns the logarithms. Needs a positive spectrum.
pub fn refined_logs(spec: &Spectrum, poly: &Polynomial) -> Result<RefinedLogs> {
    let ev = &spec.eigenvalues;
    if let Some(bad) = ev.iter().find(|&&x| !(x > 0.0)) {
        return Err(Error::Domain(format!(
            "log-spectrum needs positive eigenvalues, found {bad}"
        )));
    }
    if poly.degree() != ev.len() {
        return Err(Error::input(format!(
            "polynomial of degree {} for {} eigenvalues",
            poly.degree(),
            ev.len()
        )));
    }
    let coeffs = poly.coeffs();
    let slope = derivative(coeffs);
    let mut cc =
        Consts::new().map_err(|e| Error::Exactness(format!("bigfloat constants: {e:?}")))?;
    let mut logs = Vec::with_capacity(ev.len());
    let mut unrefined = 0;
    let mut start = 0;
    while start < ev.len() {
        let mut end = start + 1;
        while end < ev.len() && ev[end] - ev[end - 1] <= CLUSTER_GAP * ev[end] {
            end += 1;
        }
        let m = end - start;
        let centre = ev[start..end].iter().sum::<f64>() / m as f64;
        let root = polish(coeffs, &slope, centre, m).filter(|x| {
            let approx =
                x.to_string().parse::<f64>().unwrap_or(f64::NAN) / 2f64.powi(FRACTION_BITS as i32);
            (approx - centre).abs() <= ACCEPT_SHIFT * centre
        });
        match root {
            Some(x) => {
                let pair = log_pair(&x, &mut cc);
                logs.extend(std::iter::repeat_n(pair, m));
            }
            None => {
                unrefined += m;
                logs.extend(ev[start..end].iter().map(|&v| LogPair {
                    hi: v.ln(),
                    lo: 0.0,
                }));
            }
        }
        start = end;
    }
    Ok(RefinedLogs { logs, unrefined })
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
    fn polishes_a_quadratic_pair() {
        // x^2 - 6x + 1 has roots 3 ± 2√2, whose logarithms are negatives of each other.
        let p = Polynomial::from_i64(&[1, -6, 1]);
        let r = refined_logs(&spec(&[0.1715728752538, 5.8284271247462]), &p).unwrap();
        assert_eq!(r.unrefined, 0);
        let (a, b) = (r.logs[0], r.logs[1]);
        assert_eq!(a.hi, -b.hi);
        assert!((a.lo + b.lo).abs() < 1e-30);
        // 3 + 2√2 = (1 + √2)^2, so the logarithm is 2 asinh 1.
        assert!((b.hi - 2.0 * 1f64.asinh()).abs() < 1e-15);
    }

    #[test]
    fn double_root_is_polished_with_multiplicity() {
        // (x - 1)^2 (x - 4)
        let p = Polynomial::from_i64(&[-4, 9, -6, 1]);
        let r = refined_logs(
            &spec(&[0.9999999999999, 1.0000000000001, 4.0000000000002]),
            &p,
        )
        .unwrap();
        assert_eq!(r.unrefined, 0);
        assert_eq!(r.logs[0], LogPair { hi: 0.0, lo: 0.0 });
        assert_eq!(r.logs[1], r.logs[0]);
        assert_eq!(r.logs[2].hi, 4f64.ln());
    }

    #[test]
    fn far_estimate_keeps_float_value() {
        let p = Polynomial::from_i64(&[-2, 1]);
        let r = refined_logs(&spec(&[3.0]), &p).unwrap();
        assert_eq!(r.unrefined, 1);
        assert_eq!(r.logs[0].hi, 3f64.ln());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        assert!(refined_logs(&spec(&[1.0]), &Polynomial::from_i64(&[1, -2, 1])).is_err());
    }
}
