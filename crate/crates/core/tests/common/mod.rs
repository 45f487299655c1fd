#![allow(dead_code)]

use std::path::PathBuf;

use kount::complex::{random_complex, standard_complex, StandardKind};
use kount::rng::SeededRng;
use kount::{CwComplex, IntegerMatrix, SimplicialComplex};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Whitespace-separated integer matrix, one row per line.
pub fn golden(name: &str) -> IntegerMatrix {
    let text = std::fs::read_to_string(data_path(&format!("{name}.txt"))).expect("golden file");
    let rows: Vec<Vec<i64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntegerMatrix::from_i64_rows(&refs).unwrap()
}

pub fn star3() -> SimplicialComplex {
    standard_complex(StandardKind::Star, 3).unwrap()
}

pub fn triangle() -> SimplicialComplex {
    standard_complex(StandardKind::Complete, 3).unwrap()
}

pub fn c4() -> SimplicialComplex {
    standard_complex(StandardKind::Cycle, 4).unwrap()
}

pub fn c4_disc() -> CwComplex {
    CwComplex::from(&c4()).cone_cell().unwrap()
}

pub fn octahedron() -> SimplicialComplex {
    standard_complex(StandardKind::CrossPolytope, 2).unwrap()
}

pub fn octahedron_cell() -> CwComplex {
    CwComplex::from(&octahedron()).cone_cell().unwrap()
}

/// `count` complexes from R(n ≤ max_n, m ≤ max_m): sizes drawn from a master generator,
/// each complex seeded by its position.
pub fn random_family(count: usize, max_n: u64, max_m: u64, seed: u64) -> Vec<SimplicialComplex> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|i| {
            let n = 1 + rng.below(max_n) as u32;
            let m = 1 + rng.below(max_m) as u32;
            random_complex(n, m, seed.wrapping_mul(1_000_003).wrapping_add(i as u64)).unwrap()
        })
        .collect()
}

/// `Σ_{z ⊆ x∩y} 1` by enumerating subsets of the smaller set; independent of the library's
/// core bookkeeping.
pub fn brute_force_k(g: &SimplicialComplex) -> IntegerMatrix {
    let s = g.simplices();
    let n = s.len();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = s
                .iter()
                .filter(|z| z.is_subset_of(&s[i]) && z.is_subset_of(&s[j]))
                .count() as i64;
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntegerMatrix::from_i64_rows(&refs).unwrap()
}

/// Sorted `f64` comparison with a tolerance; reports the worst gap.
pub fn max_gap(actual: &[f64], expected: &[f64]) -> f64 {
    assert_eq!(actual.len(), expected.len());
    let mut e = expected.to_vec();
    e.sort_by(f64::total_cmp);
    actual.iter().zip(&e).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}
