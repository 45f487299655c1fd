//! Counting matrix `K`, connection matrix `L`, the parametrized family `L_t`, and their
//! Green functions assembled from closed star formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::complex::{sorted_intersection_len, AnyComplex, CellComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::{IntegerMatrix, Matrix, RationalMatrix};

/// Assembles a symmetric matrix row by row in parallel; `f(i, j)` is evaluated for `j >= i`.
fn symmetric<T, F>(n: usize, labels: Vec<String>, f: F) -> Matrix<T>
where
    T: Clone + Send + Sync,
    F: Fn(usize, usize) -> T + Sync,
{
    let upper: Vec<Vec<T>> = (0..n).into_par_iter().map(|i| (i..n).map(|j| f(i, j)).collect()).collect();
    Matrix::from_fn(n, labels, |i, j| {
        if i <= j {
            upper[i][j - i].clone()
        } else {
            upper[j][i - j].clone()
        }
    })
}

fn sign(c: &impl CellComplex, i: usize, j: usize) -> i64 {
    (c.cell_omega(i) * c.cell_omega(j)) as i64
}

/// Borrows the simplicial complex or fails with [`Error::Unsupported`] for CW input.
pub fn require_simplicial(c: &AnyComplex) -> Result<&SimplicialComplex> {
    c.as_simplicial()
        .ok_or_else(|| Error::Unsupported("this matrix is defined for simplicial complexes only".into()))
}

/// `K(x,y) = |W⁻(x) ∩ W⁻(y)|`, counted on the cores.
pub fn counting_matrix(c: &impl CellComplex) -> IntegerMatrix {
    symmetric(c.cell_count(), c.labels(), |i, j| {
        BigInt::from(sorted_intersection_len(c.core_of(i), c.core_of(j)))
    })
}

/// `K(x,y) = 2^{|x∩y|} − 1`, from vertex intersections alone.
pub fn counting_matrix_by_vertices(g: &SimplicialComplex) -> IntegerMatrix {
    symmetric(g.len(), g.labels(), |i, j| {
        let k = g.get(i).intersection_len(g.get(j));
        (BigInt::one() << k) - 1
    })
}

/// `L(x,y) = 1` if `x ∩ y ≠ ∅`, else `0`.
pub fn connection_matrix(g: &SimplicialComplex) -> IntegerMatrix {
    symmetric(g.len(), g.labels(), |i, j| {
        BigInt::from((g.get(i).intersection_len(g.get(j)) > 0) as i64)
    })
}

/// `K⁻¹(x,y) = ω(x) ω(y) |W⁺(x) ∩ W⁺(y)|`.
pub fn green_star_inverse(c: &impl CellComplex) -> IntegerMatrix {
    symmetric(c.cell_count(), c.labels(), |i, j| {
        BigInt::from(sign(c, i, j) * sorted_intersection_len(c.star_of(i), c.star_of(j)) as i64)
    })
}

/// `L⁻¹(x,y) = ω(x) ω(y) χ(W⁺(x) ∩ W⁺(y))`.
pub fn connection_green_inverse(g: &SimplicialComplex) -> IntegerMatrix {
    symmetric(g.len(), g.labels(), |i, j| {
        let chi: i64 = merged(g.star_of(i), g.star_of(j)).map(|z| g.get(z).omega() as i64).sum();
        BigInt::from(sign(g, i, j) * chi)
    })
}

/// Common elements of two ascending index lists.
fn merged<'a>(a: &'a [usize], b: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    return Some(a[i - 1]);
                }
            }
        }
        None
    })
}

fn require_nonzero(t: &BigRational) -> Result<()> {
    if t.is_zero() {
        Err(Error::Domain("the parametrized family is undefined at t = 0".into()))
    } else {
        Ok(())
    }
}

/// `L_t(x,y) = (1 − f_{W⁻(x)∩W⁻(y)}(t)) / t^{dim(x∩y)}`.
///
/// The core of `x ∩ y` is a full simplex on `k = |x∩y|` vertices, whose f-function is
/// `(1+t)^k`; disjoint pairs give `0`.
pub fn parametrized_matrix(g: &SimplicialComplex, t: &BigRational) -> Result<RationalMatrix> {
    require_nonzero(t)?;
    let max_k = g.dimension().map_or(0, |d| d + 1);
    let one = BigRational::one();
    let base = &one + t;
    let mut by_k = vec![BigRational::zero()];
    let mut power = one.clone();
    let mut t_power = one.clone(); // t^{k-1}
    for k in 1..=max_k {
        power = &power * &base;
        if k > 1 {
            t_power = &t_power * t;
        }
        by_k.push((&one - &power) / &t_power);
    }
    Ok(symmetric(g.len(), g.labels(), |i, j| by_k[g.get(i).intersection_len(g.get(j))].clone()))
}

/// `g_t(x,y) = ω(x) ω(y) (1 − f_{W⁺(x)∩W⁺(y)}(t))`, where a set `S` of simplices has
/// `f_S(t) = 1 + Σ_{z∈S} t^{|z|}`.
pub fn parametrized_green(g: &SimplicialComplex, t: &BigRational) -> Result<RationalMatrix> {
    require_nonzero(t)?;
    let max_k = g.dimension().map_or(0, |d| d + 1);
    let mut powers = vec![BigRational::one()];
    for k in 1..=max_k {
        powers.push(&powers[k - 1] * t);
    }
    Ok(symmetric(g.len(), g.labels(), |i, j| {
        let total = merged(g.star_of(i), g.star_of(j))
            .fold(BigRational::zero(), |acc, z| acc + &powers[g.get(z).len()]);
        if sign(g, i, j) > 0 {
            -total
        } else {
            total
        }
    }))
}

/// `K_t(x,y) = Σ_{z ⊆ x∩y} t^{|z|} = (1+t)^{|x∩y|} − 1`.
///
/// This is `f_{W⁻(x)∩W⁻(y)}(t) − 1`: the numerator of `L_t` with the sign flipped and no
/// power of `t` divided out. It is a Gram matrix `A D_t Aᵀ` with `D_t = diag(t^{|z|})`, so
/// `det K_t = t^{f'_G(1)}` and `K_1 = K`.
pub fn counting_family(g: &SimplicialComplex, t: &BigRational) -> Result<RationalMatrix> {
    require_nonzero(t)?;
    let max_k = g.dimension().map_or(0, |d| d + 1);
    let base = BigRational::one() + t;
    let mut by_k = vec![BigRational::zero()];
    let mut power = BigRational::one();
    for _ in 1..=max_k {
        power = &power * &base;
        by_k.push(&power - BigRational::one());
    }
    Ok(symmetric(g.len(), g.labels(), |i, j| by_k[g.get(i).intersection_len(g.get(j))].clone()))
}

/// Inverse of [`counting_family`]: `ω(x) ω(y) Σ_{z ∈ W⁺(x)∩W⁺(y)} t^{−|z|}`.
///
/// Its entries sum to `f_G(1/t) − 1`. Note that `parametrized_green(g, t)` equals
/// `−counting_family_green(g, 1/t)`.
pub fn counting_family_green(g: &SimplicialComplex, t: &BigRational) -> Result<RationalMatrix> {
    require_nonzero(t)?;
    let inv = t.recip();
    let max_k = g.dimension().map_or(0, |d| d + 1);
    let mut powers = vec![BigRational::one()];
    for k in 1..=max_k {
        powers.push(&powers[k - 1] * &inv);
    }
    Ok(symmetric(g.len(), g.labels(), |i, j| {
        let total = merged(g.star_of(i), g.star_of(j))
            .fold(BigRational::zero(), |acc, z| acc + &powers[g.get(z).len()]);
        if sign(g, i, j) > 0 {
            total
        } else {
            -total
        }
    }))
}

/// `Q = K − K⁻¹` with `K⁻¹` from the star formula.
pub fn supercharge(c: &impl CellComplex) -> IntegerMatrix {
    counting_matrix(c).sub(&green_star_inverse(c))
}

/// `V(x) = Σ_y K⁻¹(x,y)`.
pub fn potential(c: &impl CellComplex) -> Vec<BigInt> {
    green_star_inverse(c).row_sums()
}

/// `Σ_{x,y} K⁻¹(x,y)`; equals the number of cells.
pub fn total_energy(c: &impl CellComplex) -> BigInt {
    potential(c).into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard_complex, CwComplex, StandardKind};
    use crate::exact::det_rational;

    fn star3() -> SimplicialComplex {
        standard_complex(StandardKind::Star, 3).unwrap()
    }

    fn rows(m: &IntegerMatrix) -> Vec<Vec<i64>> {
        m.rows().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn point_matrices() {
        let p = standard_complex(StandardKind::Complete, 1).unwrap();
        assert_eq!(rows(&counting_matrix(&p)), [[1]]);
        assert_eq!(rows(&connection_matrix(&p)), [[1]]);
        assert_eq!(rows(&green_star_inverse(&p)), [[1]]);
        assert_eq!(rows(&connection_green_inverse(&p)), [[1]]);
        assert_eq!(rows(&supercharge(&p)), [[0]]);
    }

    #[test]
    fn star3_counting_diagonal_and_labels() {
        let k = counting_matrix(&star3());
        let diag: Vec<i64> = (0..7).map(|i| i64::try_from(k.get(i, i)).unwrap()).collect();
        assert_eq!(diag, [1, 1, 1, 1, 3, 3, 3]);
        assert_eq!(k.labels()[4], "{1,2}");
        assert_eq!(k, counting_matrix_by_vertices(&star3()));
    }

    #[test]
    fn connection_pattern_matches_counting_support() {
        let g = star3();
        let k = counting_matrix(&g);
        let l = connection_matrix(&g);
        let support = k.map(|x| BigInt::from(!x.is_zero() as i64));
        assert_eq!(l, support);
    }

    #[test]
    fn connection_green_diagonal_is_star_euler_characteristic() {
        let g = star3();
        let li = connection_green_inverse(&g);
        assert!(connection_matrix(&g).mul(&li).is_identity());
        for i in 0..g.len() {
            let chi: i64 = g.star_of(i).iter().map(|&z| g.get(z).omega() as i64).sum();
            assert_eq!(li.get(i, i), &BigInt::from(chi));
        }
        let tri = standard_complex(StandardKind::Complete, 3).unwrap();
        assert_eq!(connection_green_inverse(&tri).entry_sum(), BigInt::from(1));
    }

    #[test]
    fn star3_potential_and_energy() {
        let v: Vec<i64> = potential(&star3()).iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(v, [4, 2, 2, 2, -1, -1, -1]);
        assert_eq!(total_energy(&star3()), BigInt::from(7));
        assert_eq!(total_energy(&SimplicialComplex::empty()), BigInt::zero());
    }

    #[test]
    fn star3_supercharge_is_traceless() {
        assert_eq!(supercharge(&star3()).trace(), BigInt::zero());
    }

    #[test]
    fn lt_at_one_is_minus_k() {
        let g = star3();
        let l1 = parametrized_matrix(&g, &q(1, 1)).unwrap();
        let minus_k = counting_matrix(&g).map(|x| BigRational::from_integer(-x));
        assert_eq!(l1, minus_k);
    }

    #[test]
    fn lt_for_a_point_is_not_inverse_to_gt() {
        // L_t = [-t] and g_t = [-t]: the product is t^2, so the pair is inverse only at t = ±1.
        let p = standard_complex(StandardKind::Complete, 1).unwrap();
        for (t, sq) in [(q(2, 1), q(4, 1)), (q(-1, 1), q(1, 1)), (q(1, 3), q(1, 9))] {
            let lt = parametrized_matrix(&p, &t).unwrap();
            let gt = parametrized_green(&p, &t).unwrap();
            assert_eq!(lt.get(0, 0), &-t.clone());
            assert_eq!(gt.get(0, 0), &-t.clone());
            assert_eq!(lt.mul(&gt).get(0, 0), &sq);
        }
    }

    #[test]
    fn lt_edge_values_at_two() {
        let e = standard_complex(StandardKind::Complete, 2).unwrap();
        let t = q(2, 1);
        let lt = parametrized_matrix(&e, &t).unwrap();
        // Diagonal of the edge: (1 - 3^2) / 2 = -4.
        assert_eq!(lt.get(2, 2), &q(-4, 1));
        assert_eq!(lt.get(0, 1), &q(0, 1));
        assert_eq!(det_rational(&lt), q(0, 1));
        let gt = parametrized_green(&e, &t).unwrap();
        assert_eq!(gt.entry_sum(), q(-8, 1));
    }

    #[test]
    fn literal_green_sums_to_one_minus_f() {
        let g = star3();
        for t in [q(2, 1), q(-2, 1), q(1, 3)] {
            let gt = parametrized_green(&g, &t).unwrap();
            assert_eq!(gt.entry_sum(), BigRational::one() - g.f_vector().f_eval(&t));
        }
    }

    #[test]
    fn counting_family_identities_on_star3() {
        let g = star3();
        let f = g.f_vector();
        for t in [q(2, 1), q(-2, 1), q(1, 3), q(1, 1)] {
            let kt = counting_family(&g, &t).unwrap();
            let gt = counting_family_green(&g, &t).unwrap();
            assert!(kt.mul(&gt).is_identity());
            assert_eq!(det_rational(&kt), num_traits::pow(t.clone(), f.f_derivative_at_one() as usize));
            assert_eq!(gt.entry_sum(), f.f_eval(&t.recip()) - BigRational::one());
            let literal = parametrized_green(&g, &t.recip()).unwrap();
            assert_eq!(literal, gt.map(|x| -x.clone()));
        }
        let k = counting_matrix(&g).map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(counting_family(&g, &q(1, 1)).unwrap(), k);
    }

    #[test]
    fn lt_rejects_zero() {
        assert!(matches!(parametrized_matrix(&star3(), &q(0, 1)), Err(Error::Domain(_))));
        assert!(matches!(parametrized_green(&star3(), &q(0, 1)), Err(Error::Domain(_))));
        assert!(matches!(counting_family(&star3(), &q(0, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn connection_matrix_refuses_cw_input() {
        let cw: AnyComplex = CwComplex::from(&star3()).into();
        assert!(matches!(require_simplicial(&cw), Err(Error::Unsupported(_))));
    }
}
