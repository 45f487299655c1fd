use super::{CellComplex, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Named families of complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// Cyclic complex `C_n`: vertices `1..=n`, edges `{i, i+1}` and `{1, n}`; `n >= 3`.
    Cycle,
    /// All nonempty subsets of `{1..=n}`; `n >= 1`.
    Complete,
    /// Whitney complex of the star graph with centre `1` and `n` spikes `2..=n+1`; `n >= 1`.
    Star,
    /// Boundary of the `(d+1)`-dimensional cross polytope, a `d`-sphere on `2(d+1)` vertices.
    /// Antipodal pairs are `(i, 2d+3-i)`; `d = 2` is the octahedron.
    CrossPolytope,
}

pub fn standard_complex(kind: StandardKind, size: usize) -> Result<SimplicialComplex> {
    let bad = |min: usize| {
        Error::input(format!("{kind:?} needs size >= {min}, got {size}"))
    };
    let n = u32::try_from(size).map_err(|_| Error::input("size too large"))?;
    let generators: Vec<Vec<u32>> = match kind {
        StandardKind::Cycle => {
            if size < 3 {
                return Err(bad(3));
            }
            (1..=n).map(|i| vec![i, i % n + 1]).collect()
        }
        StandardKind::Complete => {
            if size < 1 {
                return Err(bad(1));
            }
            if size > 20 {
                return Err(Error::input("complete complex limited to 20 vertices"));
            }
            vec![(1..=n).collect()]
        }
        StandardKind::Star => {
            if size < 1 {
                return Err(bad(1));
            }
            (2..=n + 1).map(|leaf| vec![1, leaf]).collect()
        }
        StandardKind::CrossPolytope => {
            if size > 15 {
                return Err(Error::input("cross polytope limited to d <= 15"));
            }
            let top = 2 * n + 3;
            (0u32..1 << (n + 1))
                .map(|mask| (1..=n + 1).map(|i| if mask & (1 << (i - 1)) == 0 { i } else { top - i }).collect())
                .collect()
        }
    };
    SimplicialComplex::generate_closure(generators)
}

/// `G ∪ H ∪ {x ∪ y}`, with `H` relabelled past the largest label of `G`.
pub fn join(g: &SimplicialComplex, h: &SimplicialComplex) -> SimplicialComplex {
    let h = h.shifted(g.max_label());
    let mut all: Vec<Simplex> = g.simplices().to_vec();
    all.extend(h.simplices().iter().cloned());
    for x in g.simplices() {
        for y in h.simplices() {
            all.push(x.union(y));
        }
    }
    SimplicialComplex::from_closed(all)
}

/// Join with the two-point complex.
pub fn suspension(g: &SimplicialComplex) -> SimplicialComplex {
    let two_points = SimplicialComplex::generate_closure([[1], [2]]).expect("valid");
    join(g, &two_points)
}

/// Seeded random complex on vertices `1..=n` from `m` generator sets.
///
/// Each generator: draw `k` uniformly from `1..=n`, then `k` vertices uniformly from `1..=n`
/// with replacement, then deduplicate. The result is the closure of the generators.
pub fn random_complex(n: u32, m: u32, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || m == 0 {
        return Err(Error::input("random complex needs n >= 1 and m >= 1"));
    }
    let mut rng = SeededRng::new(seed);
    let generators: Vec<Vec<u32>> = (0..m)
        .map(|_| {
            let k = 1 + rng.below(n as u64);
            (0..k).map(|_| 1 + rng.below(n as u64) as u32).collect()
        })
        .collect();
    SimplicialComplex::generate_closure(generators)
}

/// Order complex of the inclusion poset: one vertex per simplex (labelled by its canonical
/// position plus one), one simplex per chain `x_1 ⊂ x_2 ⊂ …`.
pub fn barycentric_refinement(g: &SimplicialComplex) -> SimplicialComplex {
    let mut chains = Vec::new();
    let mut current = Vec::new();
    for start in 0..g.len() {
        extend_chains(g, start, &mut current, &mut chains);
    }
    SimplicialComplex::from_closed(chains)
}

fn extend_chains(g: &SimplicialComplex, top: usize, current: &mut Vec<u32>, out: &mut Vec<Simplex>) {
    current.push(top as u32 + 1);
    // star indices are ascending, and proper supersets come later in canonical order
    let mut labels = current.clone();
    labels.sort_unstable();
    out.push(Simplex::from_sorted_unchecked(labels));
    for &next in g.star_of(top) {
        if next != top {
            extend_chains(g, next, current, out);
        }
    }
    current.pop();
}
