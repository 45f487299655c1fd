use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::det_exact;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Largest matrix order accepted by [`char_poly`].
pub const CHAR_POLY_LIMIT: usize = 200;

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Index of the last stored coefficient; stored leading zeros count.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `|p(x)| / Σ_k |c_k| |x|^k`, the relative size of `p(x)` against its terms.
    pub fn relative_residual(&self, x: f64) -> f64 {
        let mut value = 0.0f64;
        let mut scale = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let c = c.to_f64().unwrap_or(f64::INFINITY);
            value = value * x + c;
            scale = scale * x.abs() + c.abs();
        }
        if scale == 0.0 {
            0.0
        } else {
            value.abs() / scale
        }
    }

    fn add_scaled(&mut self, other: &[BigInt], factor: &BigInt) {
        if self.coeffs.len() < other.len() {
            self.coeffs.resize(other.len(), BigInt::zero());
        }
        for (c, o) in self.coeffs.iter_mut().zip(other) {
            *c += o * factor;
        }
    }
}

/// Characteristic polynomial `p(x) = det(M − xI)`, coefficients ascending.
///
/// Computed modulo enough word-sized primes to cover a Hadamard bound on the coefficients,
/// each by Hessenberg reduction, and reassembled by Chinese remaindering. The result is exact.
pub fn char_poly(m: &IntegerMatrix) -> Result<Polynomial> {
    let n = m.order();
    if n > CHAR_POLY_LIMIT {
        return Err(Error::TooLarge { op: "exact characteristic polynomial", n, limit: CHAR_POLY_LIMIT });
    }
    // |coefficient| ≤ 2^n Π_i max(1, ‖row_i‖); the modulus must exceed twice that.
    let needed = n as u64
        + m.rows()
            .map(|r| {
                let sq: BigInt = r.iter().map(|x| x * x).sum();
                sq.bits().div_ceil(2)
            })
            .sum::<u64>()
        + 2;
    let primes = modular_primes(needed);
    let residues: Vec<Vec<u64>> = primes.par_iter().map(|&p| char_poly_mod(m, p)).collect();
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (&p, res) in primes.iter().zip(&residues) {
        let pb = BigInt::from(p);
        let inv = mod_pow((&modulus % &pb).to_u64().expect("residue"), p - 2, p);
        for (c, &r) in coeffs.iter_mut().zip(res) {
            let cur = c.mod_floor(&pb).to_u64().expect("residue");
            let t = (r + p - cur) % p * inv % p;
            *c += &modulus * t;
        }
        modulus *= p;
    }
    let half = &modulus >> 1usize;
    for c in &mut coeffs {
        if *c > half {
            *c -= &modulus;
        }
    }
    let expected_lead = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    if coeffs[n] != expected_lead {
        return Err(Error::Exactness(format!("leading coefficient {} differs from (-1)^{n}", coeffs[n])));
    }
    Ok(Polynomial::new(coeffs))
}

/// Distinct primes below `2^31`, descending, whose product has more than `bits` bits.
fn modular_primes(bits: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut covered = 0u64;
    let mut candidate = (1u64 << 31) - 1;
    while covered <= bits {
        if is_prime(candidate) {
            primes.push(candidate);
            covered += 30;
        }
        candidate -= 2;
    }
    primes
}

fn is_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| x % d != 0)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `det(M − xI) mod p` through a Hessenberg form of `M mod p`.
fn char_poly_mod(m: &IntegerMatrix, p: u64) -> Vec<u64> {
    let n = m.order();
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> =
        m.rows().map(|r| r.iter().map(|x| x.mod_floor(&pb).to_u64().expect("residue")).collect()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i][j] != 0) else { continue };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = mod_pow(a[j + 1][j], p - 2, p);
        for k in j + 2..n {
            let u = a[k][j] * inv % p;
            if u == 0 {
                continue;
            }
            // row_k −= u row_{j+1}, then col_{j+1} += u col_k keeps the similarity.
            for c in 0..n {
                a[k][c] = (a[k][c] + (p - u) * a[j + 1][c]) % p;
            }
            for row in a.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[k]) % p;
            }
        }
    }
    // polys[i] = det(xI − H_i) for the leading i×i block, ascending coefficients.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for i in 0..n {
        let mut next = vec![0u64; i + 2];
        for (d, &c) in polys[i].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + (p - a[i][i]) * c) % p;
        }
        let mut sub = 1u64;
        for r in (0..i).rev() {
            sub = sub * a[r + 1][r] % p;
            let f = sub * a[r][i] % p;
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[r].iter().enumerate() {
                next[d] = (next[d] + (p - f) * c) % p;
            }
        }
        polys.push(next);
    }
    let mut out = polys.pop().expect("nonempty");
    if n % 2 == 1 {
        for c in &mut out {
            *c = (p - *c) % p;
        }
    }
    out
}

/// [`char_poly`] by interpolation: `det(M − jI)` for `j = 0..=n` through Newton forward
/// differences. Slower, `O(n⁴)` big-integer steps, and independent of the modular route.
///
/// For an integer polynomial the falling-factorial coefficients `Δ^k p(0) / k!` are integers;
/// a nonzero remainder in that division means an arithmetic fault and is reported as an error.
pub fn char_poly_by_interpolation(m: &IntegerMatrix) -> Result<Polynomial> {
    let n = m.order();
    if n > CHAR_POLY_LIMIT {
        return Err(Error::TooLarge { op: "exact characteristic polynomial", n, limit: CHAR_POLY_LIMIT });
    }
    let mut diffs: Vec<BigInt> = (0..=n)
        .into_par_iter()
        .map(|j| det_exact(&m.shifted_diagonal(&BigInt::from(j))))
        .collect();
    // in place: diffs[k] becomes Δ^k p(0)
    for k in 1..=n {
        for i in (k..=n).rev() {
            let d = &diffs[i] - &diffs[i - 1];
            diffs[i] = d;
        }
    }
    let mut poly = Polynomial::new(vec![BigInt::zero(); n + 1]);
    // falling factorial x(x-1)…(x-k+1), ascending coefficients
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, delta) in diffs.iter().enumerate() {
        if k > 0 {
            factorial *= k;
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (d, c) in falling.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &shift;
            }
            falling = next;
        }
        let (coeff, rem) = delta.div_rem(&factorial);
        if !rem.is_zero() {
            return Err(Error::Exactness(format!(
                "interpolation coefficient {k} is not integral ({delta} / {factorial})"
            )));
        }
        poly.add_scaled(&falling, &coeff);
    }
    let expected_lead = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    if poly.coeffs[n] != expected_lead {
        return Err(Error::Exactness(format!(
            "leading coefficient {} differs from (-1)^{n}",
            poly.coeffs[n]
        )));
    }
    Ok(poly)
}

/// `c_k = (−1)^n c_{n−k}` for all `k`, with `n` the degree: the roots are closed under
/// `λ ↦ 1/λ` (given a constant term of modulus one).
pub fn palindrome_check(p: &Polynomial) -> bool {
    let n = p.degree();
    let odd = n % 2 == 1;
    (0..=n).all(|k| {
        let mirrored = &p.coeffs[n - k];
        if odd {
            p.coeffs[k] == -mirrored
        } else {
            &p.coeffs[k] == mirrored
        }
    })
}
