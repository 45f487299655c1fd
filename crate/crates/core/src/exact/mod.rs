//! Exact big-integer linear algebra: Bareiss determinants, leading minors, fraction-free
//! inverses, characteristic polynomials.

mod poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntegerMatrix, Matrix, RationalMatrix};

pub use poly::{char_poly, char_poly_by_interpolation, palindrome_check, Polynomial, CHAR_POLY_LIMIT};

/// Largest order accepted by the exact determinant and inverse routines.
pub const EXACT_LIMIT: usize = 500;

/// Row-major working copy used by the elimination kernels.
struct Work {
    n: usize,
    cols: usize,
    a: Vec<BigInt>,
}

impl Work {
    fn new(n: usize, cols: usize, a: Vec<BigInt>) -> Self {
        Self { n, cols, a }
    }

    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        if r != s {
            for j in 0..self.cols {
                self.a.swap(r * self.cols + j, s * self.cols + j);
            }
        }
    }

    /// `row_i ← (p·row_i − row_i[k]·row_k) / prev` on columns `from..`, with `p = row_k[k]`.
    /// Exact by Sylvester's identity.
    fn bareiss_update(&mut self, i: usize, k: usize, from: usize, prev: &BigInt) {
        let cols = self.cols;
        let (lo, hi) = if i < k {
            let (a, b) = self.a.split_at_mut(k * cols);
            (&mut a[i * cols..(i + 1) * cols], &b[..cols])
        } else {
            let (a, b) = self.a.split_at_mut(i * cols);
            (&mut b[..cols], &a[k * cols..(k + 1) * cols])
        };
        let (row_i, row_k) = (lo, hi);
        let pivot = &row_k[k];
        let factor = row_i[k].clone();
        let unit = prev.is_one();
        let mut scratch = BigInt::zero();
        for j in from..cols {
            if j == k {
                continue;
            }
            let rkj = &row_k[j];
            if factor.is_zero() || rkj.is_zero() {
                if row_i[j].is_zero() {
                    continue;
                }
                row_i[j] *= pivot;
            } else {
                row_i[j] *= pivot;
                scratch.clone_from(&factor);
                scratch *= rkj;
                row_i[j] -= &scratch;
            }
            if !unit {
                row_i[j] /= prev;
            }
        }
        row_i[k] = BigInt::zero();
    }
}

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
/// The empty matrix has determinant one.
pub fn det_exact(m: &IntegerMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    let mut w = Work::new(n, n, m.entries().to_vec());
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if w.at(k, k).is_zero() {
            match (k + 1..n).find(|&i| !w.at(i, k).is_zero()) {
                Some(p) => {
                    w.swap_rows(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            w.bareiss_update(i, k, k + 1, &prev);
        }
        prev = w.at(k, k).clone();
    }
    let d = w.at(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a rational matrix: rows are scaled to integers by the lcm of their
/// denominators, the integer determinant is taken by Bareiss, and the scaling is divided out.
pub fn det_rational(m: &RationalMatrix) -> BigRational {
    let n = m.order();
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n * n);
    for row in m.rows() {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.extend(row.iter().map(|x| x.numer() * (&l / x.denom())));
        scale *= l;
    }
    let int = Matrix::from_rows(rows.chunks(n.max(1)).take(n).map(<[BigInt]>::to_vec).collect())
        .expect("square");
    BigRational::new(det_exact(&int), scale)
}

/// All leading principal minors `det M[..k, ..k]` for `k = 1..=n`.
///
/// Read off the Bareiss pivots when elimination runs without row exchanges; once a zero
/// pivot appears the remaining minors are computed one by one.
pub fn leading_minors(m: &IntegerMatrix) -> Vec<BigInt> {
    let n = m.order();
    let mut minors = Vec::with_capacity(n);
    let mut w = Work::new(n, n, m.entries().to_vec());
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = w.at(k, k).clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            minors.extend((k + 2..=n).map(|size| det_exact(&m.leading_block(size))));
            return minors;
        }
        for i in k + 1..n {
            w.bareiss_update(i, k, k + 1, &prev);
        }
        prev = pivot;
    }
    minors
}

/// True when every leading principal minor is positive (Sylvester's criterion).
pub fn is_positive_definite(m: &IntegerMatrix) -> bool {
    m.is_symmetric() && leading_minors(m).iter().all(Signed::is_positive)
}

/// Exact inverse by fraction-free Gauss–Jordan on `[M | I]`.
///
/// Every row is updated against every pivot, dividing by the previous pivot; at the end
/// the left block is `det·I` and the right block is the adjugate.
pub fn inverse_exact(m: &IntegerMatrix) -> Result<RationalMatrix> {
    let n = m.order();
    if n > EXACT_LIMIT {
        return Err(Error::TooLarge { op: "exact inverse", n, limit: EXACT_LIMIT });
    }
    let cols = 2 * n;
    let mut a = Vec::with_capacity(n * cols);
    for (i, row) in m.rows().enumerate() {
        a.extend(row.iter().cloned());
        a.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
    }
    let mut w = Work::new(n, cols, a);
    let mut prev = BigInt::one();
    for k in 0..n {
        if w.at(k, k).is_zero() {
            let p = (k + 1..n).find(|&i| !w.at(i, k).is_zero()).ok_or(Error::Singular)?;
            w.swap_rows(k, p);
        }
        for i in (0..n).filter(|&i| i != k) {
            w.bareiss_update(i, k, 0, &prev);
        }
        // rows already reduced keep a diagonal equal to the running pivot
        let pivot = w.at(k, k).clone();
        for i in 0..k {
            debug_assert_eq!(w.at(i, i), &pivot);
        }
        prev = pivot;
    }
    debug_assert_eq!(w.n, n);
    let det = prev;
    let inv = Matrix::from_fn(n, m.labels().to_vec(), |i, j| {
        BigRational::new(w.at(i, n + j).clone(), det.clone())
    });
    Ok(inv)
}

/// Exact inverse of a unimodular matrix, `None` if the inverse is not integral.
pub fn inverse_integer(m: &IntegerMatrix) -> Result<Option<IntegerMatrix>> {
    Ok(inverse_exact(m)?.to_integer())
}
