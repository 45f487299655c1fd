mod common;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use common::*;
use kount::complex::{random_complex, standard_complex, StandardKind};
use kount::exact::{inverse_exact, leading_minors};
use kount::io::{complex_to_json, matrix_to_csv, matrix_to_json, parse_complex, parse_matrix};
use kount::matrices::{counting_matrix, green_star_inverse, potential, supercharge, total_energy};
use kount::spectra::{eigenvalues_sym, Region, ZetaFunction, DEFAULT_TOL};
use kount::{AnyComplex, IntegerMatrix};

fn read(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

#[test]
fn frozen_random_complex_is_reproduced() {
    let g = random_complex(6, 9, 1).unwrap();
    assert_eq!(g.len(), 27);
    assert_eq!(g.f_vector().counts(), &[6, 11, 8, 2]);
    let text = read("random_6_9_seed1.json");
    assert_eq!(complex_to_json(&AnyComplex::Simplicial(g.clone()), None), text);
    let loaded = parse_complex(&text).unwrap();
    assert_eq!(loaded.complex.as_simplicial().unwrap().simplices(), g.simplices());
}

#[test]
fn k5_zeta_grid_matches_frozen_csv() {
    let k5 = standard_complex(StandardKind::Complete, 5).unwrap();
    let grid = ZetaFunction::for_matrix(&counting_matrix(&k5), DEFAULT_TOL)
        .unwrap()
        .grid(Region::default(), 0.5, 0.5)
        .unwrap();
    assert_eq!(grid.to_csv_string().unwrap(), read("k5_zeta_step05.csv"));
}

#[test]
fn zeta_at_negative_integers_is_a_trace_of_powers() {
    // ζ(−k) = Σ λ^k = tr K^k, an integer.
    let k = counting_matrix(&standard_complex(StandardKind::Complete, 5).unwrap());
    let zeta = ZetaFunction::for_matrix(&k, DEFAULT_TOL).unwrap();
    let mut power = IntegerMatrix::identity(k.order());
    for e in 1..=4 {
        power = power.mul(&k);
        let exact = power.trace().to_f64().unwrap();
        let v = zeta.eval(Complex64::new(-(e as f64), 0.0));
        assert!((v.re - exact).abs() <= 4.0 * f64::EPSILON * exact, "k = {e}: {v} vs {exact}");
        assert!(v.im.abs() <= f64::EPSILON * exact);
    }
}

#[test]
fn star3_potential_and_energy() {
    let v: Vec<i64> = potential(&star3()).iter().map(|x| x.to_i64().unwrap()).collect();
    assert_eq!(v, [4, 2, 2, 2, -1, -1, -1]);
    assert_eq!(total_energy(&star3()), BigInt::from(7));
    assert_eq!(total_energy(&octahedron_cell()), BigInt::from(27));
}

#[test]
fn star3_supercharge_is_traceless() {
    assert_eq!(supercharge(&star3()).trace(), BigInt::from(0));
}

#[test]
fn golden_inverses_agree_with_linear_solver() {
    let cases: Vec<(&str, IntegerMatrix, IntegerMatrix)> = vec![
        ("star3", counting_matrix(&star3()), green_star_inverse(&star3())),
        ("triangle", counting_matrix(&triangle()), green_star_inverse(&triangle())),
        ("c4", counting_matrix(&c4()), green_star_inverse(&c4())),
        ("c4_disc", counting_matrix(&c4_disc()), green_star_inverse(&c4_disc())),
        ("octahedron_cell", counting_matrix(&octahedron_cell()), green_star_inverse(&octahedron_cell())),
    ];
    for (name, k, k_inv) in cases {
        assert_eq!(k.entries(), golden(&format!("{name}_k")).entries(), "{name} K");
        let solved = inverse_exact(&k).unwrap().to_integer().expect("unimodular");
        assert_eq!(solved.entries(), k_inv.entries(), "{name} formula vs solver");
    }
}

#[test]
fn leading_minor_goldens() {
    let star = leading_minors(&counting_matrix(&star3()));
    assert_eq!(star.len(), 7);
    assert_eq!(star[6], BigInt::from(1));
    let oct = leading_minors(&counting_matrix(&octahedron_cell()));
    assert_eq!(oct.len(), 27);
    assert!(oct.iter().all(|m| *m > BigInt::from(0)));
}

#[test]
fn matrix_json_and_csv_round_trip() {
    let k = golden("octahedron_cell_k");
    let back: IntegerMatrix = parse_matrix(&matrix_to_json(&k)).unwrap();
    assert_eq!(back, k);
    let csv = matrix_to_csv(&counting_matrix(&star3())).unwrap();
    assert_eq!(csv.lines().count(), 8);
}

#[test]
fn c4_spectrum_from_whitney_graph() {
    let spec = eigenvalues_sym(&counting_matrix(&c4()), DEFAULT_TOL).unwrap();
    let (s2, s3) = (2f64.sqrt(), 3f64.sqrt());
    let expected = [3.0 - 2.0 * s2, 2.0 - s3, 2.0 - s3, 1.0, 1.0, 2.0 + s3, 2.0 + s3, 3.0 + 2.0 * s2];
    assert!(max_gap(&spec.eigenvalues, &expected) < 1e-9);
}
