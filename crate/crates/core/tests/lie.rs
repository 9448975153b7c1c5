use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symspin::lie::*;
use symspin::spin::*;
use symspin::tensor::*;
use symspin::{Matrix, C64};

fn gen(n: usize, kx: usize, ky: usize, kz: usize) -> Matrix {
    symmetric_generator(&SymmetricGenerator::new(n, kx, ky, kz).unwrap()).unwrap()
}

#[test]
fn abelian_closure_is_one_dimensional() {
    let z = pauli::<f64>(PauliLabel::Z).scale(C64::new(0.0, 1.0));
    assert_eq!(closure(&[z]).unwrap().len(), 1);
}

#[test]
fn control_closure_for_two_and_three_spins() {
    assert_eq!(control_closure(2).unwrap().len(), 9);
    assert_eq!(control_closure(3).unwrap().len(), 19);
}

#[test]
fn closure_rejects_non_skew_or_mixed_inputs() {
    assert!(closure(&[pauli::<f64>(PauliLabel::X)]).is_err());
    let a = Matrix::identity(2).scale(C64::new(0.0, 1.0));
    let b = Matrix::identity(4).scale(C64::new(0.0, 1.0));
    assert!(closure(&[a, b]).is_err());
}

#[test]
fn predicted_dimension_values() {
    assert_eq!(predicted_dimension(2), 9);
    assert_eq!(predicted_dimension(3), 19);
    assert_eq!(predicted_dimension(4), 34);
    assert_eq!(predicted_dimension(5), 55);
}

#[test]
fn membership_examples() {
    let basis = control_closure(3).unwrap();
    for g in control_generators(3).unwrap() {
        assert!(basis.contains(&g).unwrap());
    }
    assert!(basis.contains(&gen(3, 1, 1, 1)).unwrap());
    let local = pauli_string_matrix::<f64>(&"z00".parse().unwrap()).scale(C64::new(0.0, 1.0));
    assert!(!basis.contains(&local).unwrap());
}

#[test]
fn symmetric_closure_report_for_two_and_three_spins() {
    for n in [2, 3] {
        let r = verify_symmetric_closure(n, false).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!(r.generated_dim, r.predicted_dim);
        assert!(r.max_invariance_residual <= 1e-10);
        assert!(r.max_trace <= 1e-10);
    }
}

/// The binomial prediction counts one more direction than the control closure reaches
/// from four spins on; the report must say so in structured form.
#[test]
fn symmetric_closure_report_for_four_and_five_spins() {
    for (n, got, want) in [(4, 33, 34), (5, 54, 55)] {
        let r = verify_symmetric_closure(n, false).unwrap();
        assert_eq!(r.predicted_dim, want);
        assert_eq!(r.generated_dim, got);
        assert!(!r.dimension_ok);
        assert!(r.invariance_ok && r.traceless_ok);
        assert!(!r.passed);
        assert!(r.failures.iter().any(|f| f.contains("dimension")));
    }
}

#[test]
fn report_serializes_the_dimensions() {
    let json = verify_symmetric_closure(2, true).unwrap().to_json();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["generated_dim"], 9);
    assert_eq!(v["predicted_dim"], 9);
    assert!(v["identity_results"].as_array().unwrap().len() >= 6);
}

#[test]
fn xy_bracket_gives_twice_the_z_generator() {
    let id = BracketIdentity::new("xy", 3, (1, 0, 0), (0, 1, 0), &[(2.0, (0, 0, 1))]).unwrap();
    let c = check_bracket_identity(&id).unwrap();
    assert!(c.holds);
    assert!(c.deviations.is_empty());
    assert_eq!(c.measured_rhs.len(), 1);
    assert!((c.measured_rhs[0].coefficient - 2.0).abs() < 1e-12);
}

#[test]
fn bracket_with_identity_vanishes() {
    let id = BracketIdentity::new("id", 3, (1, 1, 0), (0, 0, 0), &[]).unwrap();
    let c = check_bracket_identity(&id).unwrap();
    assert!(c.holds);
    assert!(c.measured_rhs.is_empty());
}

#[test]
fn level_three_raise_identity_records_measured_coefficients() {
    let id = identity_catalog(4)
        .into_iter()
        .find(|i| i.name == "raise-z[k=3]")
        .unwrap();
    let c = check_bracket_identity(&id).unwrap();
    assert!(c.consistency_residual <= 1e-9);
    assert!(!c.holds);
    assert!(!c.deviations.is_empty());
}

#[test]
fn catalog_expansions_are_bracket_consistent() {
    for n in 3..=5 {
        let table = GeneratorTable::new(n).unwrap();
        let cat = identity_catalog(n);
        assert!(cat.len() >= 6 + 4 * (n - 2));
        for id in cat {
            assert!(
                table.check(&id).unwrap().consistency_residual <= 1e-9,
                "{}",
                id.name
            );
        }
    }
}

#[test]
fn closure_elements_are_traceless_skew_and_invariant() {
    for n in 2..=5 {
        for b in control_closure(n).unwrap().elements() {
            assert!(b.skew_residual() <= 1e-10);
            assert!(b.trace().norm() <= 1e-10);
            assert!(permutation_residual(b).unwrap() <= 1e-10);
        }
    }
}

#[test]
fn jacobi_identity_on_random_triples() {
    let basis = control_closure(3).unwrap();
    let e = basis.elements();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (a, b, c) = (
            &e[rng.random_range(0..e.len())],
            &e[rng.random_range(0..e.len())],
            &e[rng.random_range(0..e.len())],
        );
        let t1 = commutator(a, &commutator(b, c).unwrap()).unwrap();
        let t2 = commutator(b, &commutator(c, a).unwrap()).unwrap();
        let t3 = commutator(c, &commutator(a, b).unwrap()).unwrap();
        assert!((&(&t1 + &t2) + &t3).max_abs() <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn closure_dimension_ignores_order_and_remixing(seed in any::<u64>(), n in 2usize..=3) {
        let g = control_generators(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mixed: Vec<Matrix> = (0..3)
            .map(|_| {
                g.iter().fold(Matrix::zeros(1 << n), |acc, m| {
                    &acc + &m.scale_real(rng.random_range(-1.0..1.0))
                })
            })
            .collect();
        let reversed: Vec<Matrix> = g.iter().rev().cloned().collect();
        prop_assert_eq!(closure(&reversed).unwrap().len(), predicted_dimension(n));
        prop_assert_eq!(closure(&mixed).unwrap().len(), predicted_dimension(n));
    }
}
