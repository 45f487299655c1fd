//! The full theorem suite for one complex, as a structured report.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::complex::{AnyComplex, CellComplex};
use crate::error::Result;
use crate::exact::{char_poly, det_exact, det_rational, leading_minors, palindrome_check, CHAR_POLY_LIMIT};
use crate::matrices::{
    connection_green_inverse, connection_matrix, counting_family, counting_family_green, counting_matrix,
    green_star_inverse, parametrized_green, parametrized_matrix,
};
use crate::spectra::{eigenvalues_sym, spectral_symmetry_residual, ZetaFunction, DEFAULT_TOL};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Number of seeded samples for the functional equation.
    pub samples: usize,
    pub seed: u64,
    /// Functional-equation tolerance is `fe_tol · n`.
    pub fe_tol: f64,
    /// Reciprocal-pairing tolerance is `pairing_tol · κ(K)`.
    pub pairing_tol: f64,
    pub eigen_tol: f64,
    /// Sample points for the `L_t` identities.
    pub t_values: Vec<BigRational>,
    /// Also assert the literal `L_t · g_t = I` and `det L_t = (−1)^n t^{f'(1)}`. These fail
    /// for `t ≠ ±1`, so they are off by default.
    pub literal_lt: bool,
    pub record_timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 100,
            seed: 0,
            fe_tol: 1e-6,
            pairing_tol: 1e-7,
            eigen_tol: DEFAULT_TOL,
            t_values: vec![
                BigRational::from_integer(2.into()),
                BigRational::from_integer((-2).into()),
                BigRational::new(1.into(), 3.into()),
            ],
            literal_lt: false,
            record_timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// `true` for integer/rational checks, `false` for float checks with a tolerance.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexSummary {
    pub kind: &'static str,
    pub n: usize,
    pub f_vector: Vec<u64>,
    pub euler_characteristic: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub summary: ComplexSummary,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check, `PASS`/`FAIL`/`SKIP` first.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "complex: {} n={} f={:?} chi={}\n",
            self.summary.kind, self.summary.n, self.summary.f_vector, self.summary.euler_characteristic
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag} {}", c.name));
            if let (Some(r), Some(t)) = (c.residual, c.tolerance) {
                out.push_str(&format!(" residual={r:.3e} tol={t:.3e}"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out.push_str(if self.pass { "all checks passed\n" } else { "verification FAILED\n" });
        out
    }
}

struct Suite {
    checks: Vec<CheckResult>,
    timings: bool,
}

impl Suite {
    fn exact(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, Option<String>)>) -> Result<()> {
        let start = Instant::now();
        let (ok, detail) = f()?;
        self.push(name.into(), ok, true, None, None, detail, start);
        Ok(())
    }

    fn numeric(&mut self, name: &str, f: impl FnOnce() -> Result<(f64, f64)>) -> Result<()> {
        let start = Instant::now();
        let (residual, tolerance) = f()?;
        self.push(name.into(), residual < tolerance, false, Some(residual), Some(tolerance), None, start);
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: String,
        ok: bool,
        exact: bool,
        residual: Option<f64>,
        tolerance: Option<f64>,
        detail: Option<String>,
        start: Instant,
    ) {
        let millis = self.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(CheckResult { name, status, exact, residual, tolerance, detail, millis });
    }

    fn skip(&mut self, name: &str, why: String) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Skipped,
            exact: true,
            residual: None,
            tolerance: None,
            detail: Some(why),
            millis: None,
        });
    }
}

fn show(t: &BigRational) -> String {
    t.to_string()
}

/// `(−1)^n t^e`.
fn signed_power(t: &BigRational, e: u64, n: usize) -> BigRational {
    let p = num_traits::pow(t.clone(), e as usize);
    if n % 2 == 0 {
        p
    } else {
        -p
    }
}

/// Runs the theorem suite. Errors only for inputs outside the routines' domains; failed
/// checks are reported in the returned value.
pub fn verify(c: &AnyComplex, opts: &VerifyOptions) -> Result<VerifyReport> {
    let n = c.cell_count();
    let summary = ComplexSummary {
        kind: if c.as_simplicial().is_some() { "simplicial" } else { "cw" },
        n,
        f_vector: c.f_vector().counts().to_vec(),
        euler_characteristic: c.euler_characteristic(),
    };
    let mut suite = Suite { checks: Vec::new(), timings: opts.record_timings };
    let k = counting_matrix(c);
    let k_inv = green_star_inverse(c);

    suite.exact("unimodularity", || {
        let d = det_exact(&k);
        Ok((d.is_one(), Some(format!("det K = {d}"))))
    })?;
    suite.exact("green_star", || Ok((k.mul(&k_inv).is_identity(), None)))?;
    suite.exact("positive_definite", || {
        let minors = leading_minors(&k);
        let bad = minors.iter().position(|m| !m.is_positive());
        Ok((bad.is_none(), bad.map(|i| format!("leading minor {} = {}", i + 1, minors[i]))))
    })?;
    suite.exact("energy", || {
        let e = k_inv.entry_sum();
        Ok((e == BigInt::from(n), Some(format!("sum K^-1 = {e}"))))
    })?;
    let poly = if n <= CHAR_POLY_LIMIT { Some(char_poly(&k)?) } else { None };
    match &poly {
        Some(p) => suite.exact("palindrome", || Ok((palindrome_check(p), None)))?,
        None => suite.skip("palindrome", format!("n = {n} exceeds {CHAR_POLY_LIMIT}")),
    }

    let spectrum = eigenvalues_sym(&k, opts.eigen_tol)?;
    suite.numeric("reciprocal_pairing", || {
        Ok((spectral_symmetry_residual(&spectrum), opts.pairing_tol * spectrum.condition_number()))
    })?;
    suite.numeric("functional_equation", || {
        // Polished logarithms when the exact polynomial is at hand.
        let zeta = match &poly {
            Some(p) => ZetaFunction::refined(&spectrum, p)?,
            None => ZetaFunction::new(&spectrum)?,
        };
        let r = zeta.functional_equation_residual(opts.samples, opts.seed);
        Ok((r, opts.fe_tol * n.max(1) as f64))
    })?;

    if let Some(g) = c.as_simplicial() {
        let l = connection_matrix(g);
        let l_inv = connection_green_inverse(g);
        suite.exact("connection_green", || Ok((l.mul(&l_inv).is_identity(), None)))?;
        suite.exact("connection_energy", || {
            let e = l_inv.entry_sum();
            Ok((e == BigInt::from(g.euler_characteristic()), Some(format!("sum L^-1 = {e}"))))
        })?;
        let f = g.f_vector();
        suite.exact("lt_at_one", || {
            let l1 = parametrized_matrix(g, &BigRational::one())?;
            Ok((l1 == k.map(|x| BigRational::from_integer(-x)), None))
        })?;
        for t in &opts.t_values {
            let t_name = show(t);
            let gt = parametrized_green(g, t)?;
            suite.exact(format!("lt_energy[t={t_name}]"), || {
                Ok((gt.entry_sum() == BigRational::one() - f.f_eval(t), None))
            })?;
            if opts.literal_lt {
                let lt = parametrized_matrix(g, t)?;
                suite.exact(format!("lt_inverse[t={t_name}]"), || Ok((lt.mul(&gt).is_identity(), None)))?;
                suite.exact(format!("lt_determinant[t={t_name}]"), || {
                    let expected = signed_power(t, f.f_derivative_at_one(), n);
                    let d = det_rational(&lt);
                    Ok((d == expected, Some(format!("det = {d}"))))
                })?;
            }
            let kt = counting_family(g, t)?;
            let kt_inv = counting_family_green(g, t)?;
            suite.exact(format!("kt_inverse[t={t_name}]"), || Ok((kt.mul(&kt_inv).is_identity(), None)))?;
            suite.exact(format!("kt_determinant[t={t_name}]"), || {
                let d = det_rational(&kt);
                Ok((d == signed_power(t, f.f_derivative_at_one(), 0), Some(format!("det = {d}"))))
            })?;
            suite.exact(format!("kt_energy[t={t_name}]"), || {
                Ok((kt_inv.entry_sum() == f.f_eval(&t.recip()) - BigRational::one(), None))
            })?;
        }
    }

    let pass = suite.checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerifyReport { summary, checks: suite.checks, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard_complex, CwComplex, SimplicialComplex, StandardKind};

    #[test]
    fn star3_passes_everything() {
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        let r = verify(&g.into(), &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert_eq!(r.checks.len(), 10 + 3 * 4);
        assert!(r.check("lt_inverse[t=2]").is_none());
    }

    #[test]
    fn literal_lt_checks_fail_away_from_one() {
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        let opts = VerifyOptions { literal_lt: true, ..VerifyOptions::default() };
        let r = verify(&g.into(), &opts).unwrap();
        assert!(!r.pass);
        assert_eq!(r.check("lt_inverse[t=2]").unwrap().status, Status::Fail);
        assert_eq!(r.check("lt_energy[t=1/3]").unwrap().status, Status::Pass);
        let one = VerifyOptions { literal_lt: true, t_values: vec![BigRational::one()], ..VerifyOptions::default() };
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        assert!(verify(&g.into(), &one).unwrap().pass);
    }

    #[test]
    fn cw_complex_skips_connection_checks() {
        let g = standard_complex(StandardKind::Cycle, 4).unwrap();
        let cw = CwComplex::from(&g).cone_cell().unwrap();
        let r = verify(&cw.into(), &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
        assert!(r.check("connection_green").is_none());
        assert_eq!(r.summary.kind, "cw");
        assert_eq!(r.check("energy").unwrap().detail.as_deref(), Some("sum K^-1 = 9"));
    }

    #[test]
    fn empty_complex_passes() {
        let r = verify(&SimplicialComplex::empty().into(), &VerifyOptions::default()).unwrap();
        assert!(r.pass, "{}", r.to_text());
    }

    #[test]
    fn report_is_deterministic_without_timings() {
        let g: AnyComplex = standard_complex(StandardKind::Complete, 3).unwrap().into();
        let a = serde_json::to_string(&verify(&g, &VerifyOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&verify(&g, &VerifyOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("millis"));
    }
}
