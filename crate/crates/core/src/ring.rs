//! Disjoint union and product of complexes, represented by direct sums and Kronecker
//! products of counting matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::{CellComplex, Simplex, SimplicialComplex};
use crate::exact::det_exact;
use crate::matrices::counting_matrix;
use crate::matrix::{IntegerMatrix, Matrix};

/// `G + H`: the simplices of `G` followed by those of `H` relabelled past `G`'s largest label.
///
/// Canonical order would interleave the two parts; this keeps them as blocks so the counting
/// matrix is literally `K(G) ⊕ K(H)`. The result is still closed, but its simplex list is in
/// block order rather than canonical order.
pub fn disjoint_union(g: &SimplicialComplex, h: &SimplicialComplex) -> DisjointUnion {
    let shifted = h.shifted(g.max_label());
    DisjointUnion { left: g.clone(), right: shifted }
}

/// The two blocks of a disjoint union, in block order.
#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub left: SimplicialComplex,
    pub right: SimplicialComplex,
}

impl DisjointUnion {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Simplices in block order.
    pub fn simplices(&self) -> Vec<&Simplex> {
        self.left.simplices().iter().chain(self.right.simplices()).collect()
    }

    /// The union as an ordinary complex in canonical order.
    pub fn to_complex(&self) -> SimplicialComplex {
        let all: Vec<Simplex> = self.simplices().into_iter().cloned().collect();
        SimplicialComplex::from_closed(all)
    }

    /// `K(x,y) = |W⁻(x) ∩ W⁻(y)|` over the block-ordered simplices, computed directly from
    /// vertex sets (no block structure assumed).
    pub fn counting_matrix(&self) -> IntegerMatrix {
        let s = self.simplices();
        let labels = s.iter().map(ToString::to_string).collect();
        Matrix::from_fn(s.len(), labels, |i, j| (BigInt::one() << s[i].intersection_len(s[j])) - 1)
    }
}

/// Block-diagonal `A ⊕ B`.
pub fn direct_sum(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    let (n, m) = (a.order(), b.order());
    let labels = a.labels().iter().chain(b.labels()).cloned().collect();
    Matrix::from_fn(n + m, labels, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - n, j - n).clone(),
        _ => BigInt::zero(),
    })
}

/// Kronecker product `A ⊗ B`; row `(x, y)` sits at index `x·m + y`.
pub fn kronecker(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    let m = b.order();
    let labels = pair_labels(a.labels(), b.labels());
    Matrix::from_fn(a.order() * m, labels, |i, j| a.get(i / m, j / m) * b.get(i % m, j % m))
}

fn pair_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("({x},{y})"))).collect()
}

/// Matrix on pairs `(a, b) ∈ G × H` with entry `2^{|a∩c| + |b∩d|} − 1`, in the same pair
/// order as [`kronecker`].
pub fn product_counting_matrix(g: &SimplicialComplex, h: &SimplicialComplex) -> IntegerMatrix {
    let m = h.len();
    let labels = pair_labels(&g.labels(), &h.labels());
    Matrix::from_fn(g.len() * m, labels, |i, j| {
        let k = g.get(i / m).intersection_len(g.get(j / m)) + h.get(i % m).intersection_len(h.get(j % m));
        (BigInt::one() << k) - 1
    })
}

/// True when `kronecker(A, B)` and `kronecker(B, A)` agree under the commutation permutation
/// `(x, y) ↦ (y, x)`.
pub fn commutation_similar(a: &IntegerMatrix, b: &IntegerMatrix) -> bool {
    let ab = kronecker(a, b);
    let ba = kronecker(b, a);
    let (n, m) = (a.order(), b.order());
    let perm = |i: usize| (i % m) * n + i / m;
    (0..n * m).all(|i| (0..n * m).all(|j| ab.get(i, j) == ba.get(perm(i), perm(j))))
}

/// One exact verdict, serialized as `{"op", "pass", "first_diff"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingCheck {
    pub op: String,
    pub pass: bool,
    pub first_diff: Option<[usize; 2]>,
}

impl RingCheck {
    fn equality(op: &str, lhs: &IntegerMatrix, rhs: &IntegerMatrix) -> Self {
        let diff = lhs.first_difference(rhs);
        Self { op: op.into(), pass: diff.is_none(), first_diff: diff.map(|(i, j)| [i, j]) }
    }

    fn verdict(op: &str, pass: bool) -> Self {
        Self { op: op.into(), pass, first_diff: None }
    }
}

/// Exact consistency checks of the matrix representation for a pair of complexes.
#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub operands: [String; 2],
    pub checks: Vec<RingCheck>,
    /// Verdict over the first three checks; the product-formula checks are data.
    pub pass: bool,
    pub kronecker_det: String,
    pub product_formula_det: String,
}

impl RingReport {
    pub fn check(&self, op: &str) -> Option<&RingCheck> {
        self.checks.iter().find(|c| c.op == op)
    }
}

/// Runs every representation check on `(G, H)`:
///
/// * `direct_sum`: `K(G + H) = K(G) ⊕ K(H)`;
/// * `kronecker_unimodular`: `det(K(G) ⊗ K(H)) = 1`;
/// * `commutation_similarity`: `K(G) ⊗ K(H)` is permutation-similar to `K(H) ⊗ K(G)`;
/// * `product_formula`: the pair-entry matrix `2^{|a∩c|+|b∩d|} − 1` equals `K(G) ⊗ K(H)`;
/// * `product_formula_unimodular`: that pair-entry matrix has determinant one.
///
/// The last two are recorded as data; they fail whenever both factors have intersecting
/// simplices, since `(2^i − 1)(2^j − 1) ≠ 2^{i+j} − 1` for `i, j ≥ 1`.
pub fn representation_check(
    names: [&str; 2],
    g: &SimplicialComplex,
    h: &SimplicialComplex,
) -> RingReport {
    let kg = counting_matrix(g);
    let kh = counting_matrix(h);
    let union = disjoint_union(g, h);
    let kron = kronecker(&kg, &kh);
    let product = product_counting_matrix(g, h);
    let kron_det = det_exact(&kron);
    let product_det = det_exact(&product);
    let checks = vec![
        RingCheck::equality("direct_sum", &union.counting_matrix(), &direct_sum(&kg, &kh)),
        RingCheck::verdict("kronecker_unimodular", kron_det.is_one()),
        RingCheck::verdict("commutation_similarity", commutation_similar(&kg, &kh)),
        RingCheck::equality("product_formula", &product, &kron),
        RingCheck::verdict("product_formula_unimodular", product_det.abs().is_one()),
    ];
    let pass = checks.iter().take(3).all(|c| c.pass);
    RingReport {
        operands: [names[0].to_string(), names[1].to_string()],
        checks,
        pass,
        kronecker_det: kron_det.to_string(),
        product_formula_det: product_det.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard_complex, StandardKind};

    fn point() -> SimplicialComplex {
        standard_complex(StandardKind::Complete, 1).unwrap()
    }

    fn int(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn point_plus_point() {
        let u = disjoint_union(&point(), &point());
        assert_eq!(u.len(), 2);
        assert!(u.counting_matrix().is_identity());
    }

    #[test]
    fn union_with_empty_is_identity_element() {
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        let u = disjoint_union(&g, &SimplicialComplex::empty());
        assert_eq!(u.to_complex(), g);
        assert_eq!(u.counting_matrix(), counting_matrix(&g));
    }

    #[test]
    fn star3_plus_triangle() {
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        let h = standard_complex(StandardKind::Complete, 3).unwrap();
        let u = disjoint_union(&g, &h);
        assert_eq!(u.len(), 14);
        assert_eq!(det_exact(&u.counting_matrix()), BigInt::one());
    }

    #[test]
    fn kronecker_and_direct_sum_shapes() {
        let one = int(&[&[1]]);
        assert_eq!(kronecker(&one, &one).first_difference(&one), None);
        assert_eq!(kronecker(&one, &one).labels(), ["(1,1)"]);
        let a = int(&[&[2, 1], &[1, 1]]);
        let b = int(&[&[1, 1], &[1, 2]]);
        let k = kronecker(&a, &b);
        assert_eq!(k.order(), 4);
        assert_eq!(k.get(1, 3), &BigInt::from(2)); // a[0][1] * b[1][1]
        assert_eq!(det_exact(&direct_sum(&a, &b)), BigInt::one());
        assert!(commutation_similar(&a, &b));
    }

    #[test]
    fn product_with_point_is_identity() {
        let g = standard_complex(StandardKind::Star, 3).unwrap();
        let k = counting_matrix(&g);
        assert_eq!(kronecker(&counting_matrix(&point()), &k).first_difference(&k), None);
    }

    #[test]
    fn pair_formula_counts_both_intersections() {
        // {1} x {1} intersects itself in both factors: 2^{1+1} - 1.
        assert_eq!(product_counting_matrix(&point(), &point()).first_difference(&int(&[&[3]])), None);
        let g = standard_complex(StandardKind::Complete, 2).unwrap();
        let p = product_counting_matrix(&g, &point());
        assert_eq!(p.get(2, 2), &BigInt::from(7));
        assert_eq!(p.get(0, 1), &BigInt::from(1));
    }

    #[test]
    fn point_pair_passes_the_theorem_checks() {
        let r = representation_check(["p", "q"], &point(), &point());
        assert!(r.pass, "{r:?}");
        assert!(!r.check("product_formula").unwrap().pass);
        assert_eq!(r.product_formula_det, "3");
    }

    #[test]
    fn edge_times_edge_differs() {
        let e = standard_complex(StandardKind::Complete, 2).unwrap();
        let r = representation_check(["edge", "edge"], &e, &e);
        assert!(r.check("direct_sum").unwrap().pass);
        assert!(r.check("kronecker_unimodular").unwrap().pass);
        let p = r.check("product_formula").unwrap();
        assert!(!p.pass);
        assert!(p.first_diff.is_some());
        let json = serde_json::to_value(p).unwrap();
        assert_eq!(json["op"], "product_formula");
        assert_eq!(json["pass"], false);
    }
}
