//! Dense square matrices with exact entries.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense square matrix stored row-major, with one label per row/column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
    labels: Vec<String>,
}

pub type IntegerMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn from_fn(n: usize, labels: Vec<String>, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert_eq!(labels.len(), n, "one label per row");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries, labels }
    }

    /// Builds from row vectors; labels default to `1..=n`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            entries.extend(row);
        }
        Ok(Self { n, entries, labels: default_labels(n) })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, entries: self.entries.iter().map(f).collect(), labels: self.labels.clone() }
    }

    /// Principal submatrix on the first `k` rows and columns.
    pub fn leading_block(&self, k: usize) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(k, self.labels[..k].to_vec(), |i, j| self.get(i, j).clone())
    }

    /// First `(i, j)` (row-major) where the entries differ, `None` when equal.
    /// Matrices of different order differ at `(min n, min n)`.
    pub fn first_difference(&self, other: &Matrix<T>) -> Option<(usize, usize)>
    where
        T: PartialEq,
    {
        if self.n != other.n {
            let k = self.n.min(other.n);
            return Some((k, k));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|p| (p / self.n, p % self.n))
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, default_labels(n), |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool
    where
        T: PartialEq,
    {
        (0..self.n).all(|i| (0..self.n).all(|j| *self.get(i, j) == if i == j { T::one() } else { T::zero() }))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    /// Exact product `self · rhs`; labels follow `self`.
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cell = &mut entries[i * n + j];
                        *cell = &*cell + &(a * b);
                    }
                }
            }
        }
        Matrix { n, entries, labels: self.labels.clone() }
    }

    pub fn entry_sum(&self) -> T {
        self.entries.iter().fold(T::zero(), |acc, x| &acc + x)
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.rows().map(|r| r.iter().fold(T::zero(), |acc, x| &acc + x)).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl IntegerMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn sub(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.n, rhs.n);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix { n: self.n, entries, labels: self.labels.clone() }
    }

    /// `self − shift·I`.
    pub fn shifted_diagonal(&self, shift: &BigInt) -> IntegerMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] -= shift;
        }
        m
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Float copy, or an error naming the first entry that overflows `f64`.
    pub fn to_f64(&self) -> Result<Vec<Vec<f64>>> {
        self.rows()
            .map(|row| {
                row.iter()
                    .map(|x| match x.to_f64() {
                        Some(v) if v.is_finite() => Ok(v),
                        _ => Err(Error::FloatOverflow { entry: x.to_string() }),
                    })
                    .collect()
            })
            .collect()
    }
}

impl RationalMatrix {
    /// Integer matrix when every entry has denominator one.
    pub fn to_integer(&self) -> Option<IntegerMatrix> {
        if self.entries.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}
