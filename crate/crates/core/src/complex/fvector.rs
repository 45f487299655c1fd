use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::Polynomial;

/// Number of simplices (or cells) in each dimension, `f_0, …, f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The f-function `f_G(t) = 1 + Σ_k f_k t^{k+1}` as an integer polynomial.
    pub fn f_polynomial(&self) -> Polynomial {
        let coeffs = std::iter::once(BigInt::one())
            .chain(self.counts.iter().map(|&f| BigInt::from(f)))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn f_eval(&self, t: &BigRational) -> BigRational {
        self.f_polynomial().eval_rational(t)
    }

    /// `f'_G(1) = Σ_k (k+1) f_k`, the total number of vertex incidences.
    pub fn f_derivative_at_one(&self) -> u64 {
        self.counts.iter().enumerate().map(|(k, &f)| (k as u64 + 1) * f).sum()
    }

    /// Antiderivative `F_G(t) = t + Σ_k f_k t^{k+2}/(k+2)` with `F_G(0) = 0`.
    pub fn antiderivative_eval(&self, t: &BigRational) -> BigRational {
        let mut acc = t.clone();
        let mut power = t * t;
        for (k, &f) in self.counts.iter().enumerate() {
            if !f.is_zero() {
                let denom = BigInt::from(k as u64 + 2);
                acc += &power * BigRational::new(BigInt::from(f), denom);
            }
            power = &power * t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn star3_f_function() {
        let f = FVector::new(vec![4, 3]);
        let coeffs: Vec<i64> = f
            .f_polynomial()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(coeffs, [1, 4, 3]);
        assert_eq!(f.f_derivative_at_one(), 10);
        assert_eq!(f.f_eval(&q(2, 1)), q(21, 1));
    }

    #[test]
    fn empty_complex_f_function_is_one() {
        let f = FVector::default();
        assert_eq!(f.f_eval(&q(7, 3)), q(1, 1));
        assert_eq!(f.antiderivative_eval(&q(7, 3)), q(7, 3));
    }

    #[test]
    fn point_f_function_and_antiderivative() {
        let f = FVector::new(vec![1]);
        let t = q(3, 5);
        assert_eq!(f.f_eval(&t), q(8, 5));
        // t + t^2/2
        assert_eq!(f.antiderivative_eval(&t), q(3, 5) + q(9, 50));
        assert_eq!(f.antiderivative_eval(&q(0, 1)), q(0, 1));
    }
}
