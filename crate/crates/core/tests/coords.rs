use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symspin::coords::*;
use symspin::lie::{closure, control_closure};
use symspin::spin::*;
use symspin::{Matrix, C64};

fn ci(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn image(b: &BasisChange, s: &SpinState) -> Vec<C64> {
    b.matrix.mul_vec(s.amplitudes()).unwrap()
}

fn is_unit_vector(v: &[C64], k: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, z)| (z - ci(if i == k { 1.0 } else { 0.0 }, 0.0)).norm() < 1e-14)
}

#[test]
fn swap_in_two_spin_coordinates() {
    let t = basis_t();
    let swapped = t.conjugate(&transposition(2, 1).unwrap()).unwrap();
    let want = Matrix::from_diagonal(&[ci(-1., 0.), ci(1., 0.), ci(1., 0.), ci(1., 0.)]);
    assert!((&swapped - &want).max_abs() < 1e-15);
}

#[test]
fn one_excitation_maps_to_third_axis() {
    assert!(is_unit_vector(
        &image(&basis_t(), &phi_state(2, 1).unwrap()),
        2
    ));
}

#[test]
fn coordinate_changes_are_unitary() {
    assert!(basis_t().matrix.is_unitary());
    assert!(basis_t_hat().is_unitary());
    assert!(basis_m().matrix.is_unitary());
}

#[test]
fn two_spin_displays_match() {
    for cmp in two_spin_comparisons().unwrap() {
        assert!(
            cmp.matches,
            "{} deviates by {}",
            cmp.name, cmp.max_deviation
        );
    }
}

#[test]
fn x_generator_in_two_spin_coordinates() {
    let [ax, _, _] = conjugated_generators(&basis_t()).unwrap();
    assert!((&ax - &printed_a_x()).max_abs() <= PRINTED_TOL);
    assert!((ax[(1, 2)] - ci(0.0, -std::f64::consts::SQRT_2)).norm() < 1e-15);
}

#[test]
fn three_spin_zz_is_diagonal() {
    let [_, _, hzz] = conjugated_generators(&basis_m()).unwrap();
    let d: Vec<C64> = [-1., -1., -1., -1., 3., -1., -1., 3.]
        .iter()
        .map(|&e| ci(0.0, -e))
        .collect();
    assert!((&hzz - &Matrix::from_diagonal(&d)).max_abs() < 1e-14);
}

#[test]
fn three_spin_hamiltonian_displays_match() {
    let cmps = three_spin_comparisons().unwrap();
    for cmp in &cmps[..3] {
        assert!(
            cmp.matches,
            "{} deviates by {}",
            cmp.name, cmp.max_deviation
        );
    }
}

/// The printed transposition display differs from the computed one by a sign on the two
/// χ-diagonal entries; the comparison must list exactly those.
#[test]
fn transposition_display_deviations_are_reported() {
    let cmp = three_spin_comparisons().unwrap().pop().unwrap();
    assert!(!cmp.matches);
    assert!(cmp.sign_only);
    let cells: Vec<(usize, usize)> = cmp.deviations.iter().map(|d| (d.row, d.col)).collect();
    assert_eq!(cells, vec![(2, 2), (3, 3)]);
    let sq = &cmp.computed * &cmp.computed;
    assert!((&sq - &Matrix::identity(8)).max_abs() < 1e-14);
    assert!((&(&printed_m_pi23() * &printed_m_pi23()) - &Matrix::identity(8)).max_abs() > 0.1);
}

#[test]
fn lowest_dicke_state_is_fifth_axis() {
    let m = basis_m();
    for k in 0..4 {
        assert!(is_unit_vector(&image(&m, &phi_state(3, k).unwrap()), 4 + k));
    }
}

#[test]
fn conjugating_identity_is_trivial() {
    assert!(
        (&basis_t().conjugate(&Matrix::identity(4)).unwrap() - &Matrix::identity(4)).max_abs()
            < 1e-15
    );
}

#[test]
fn three_spin_y_generator_matches_display() {
    let [_, hy, _] = conjugated_generators(&basis_m()).unwrap();
    assert!((&hy - &printed_m_hy()).max_abs() <= PRINTED_TOL);
}

#[test]
fn x_hamiltonian_annihilates_the_antisymmetric_two_spin_state() {
    let hx = hamiltonian_x::<f64>(2).unwrap().scale(ci(0.0, 1.0));
    let form = block_split(&basis_t(), &hx).unwrap();
    assert_eq!(form.blocks[0].dim(), 1);
    assert!(form.blocks[0][(0, 0)].norm() < 1e-15);
}

#[test]
fn identity_splits_into_identity_blocks() {
    let form = block_split(&basis_t(), &Matrix::identity(4).scale(ci(0.0, 1.0))).unwrap();
    assert!((form.blocks[0][(0, 0)] - ci(0.0, 1.0)).norm() < 1e-15);
    assert!((&form.blocks[1] - &Matrix::identity(3).scale(ci(0.0, 1.0))).max_abs() < 1e-15);
}

#[test]
fn non_invariant_operator_is_rejected() {
    let local = pauli_z_on_first(3);
    assert!(block_split(&basis_m(), &local).is_err());
}

fn pauli_z_on_first(n: usize) -> Matrix {
    let s: symspin::tensor::PauliString = format!("z{}", "0".repeat(n - 1)).parse().unwrap();
    symspin::tensor::pauli_string_matrix(&s)
}

#[test]
fn action_table_holds() {
    let r = verify_action_table().unwrap();
    assert_eq!(r.checks.len(), 24);
    assert!(r.passed);
    let find = |l: &str| r.checks.iter().find(|c| c.label == l).unwrap().residual;
    assert!(find("H_x|phi1>") < 1e-12);
    assert!(find("H_zz|psi0>") < 1e-12);
    assert!(find("H_y|phi3>") < 1e-12);
}

#[test]
fn transposition_relations_hold() {
    assert!(verify_transposition_relations().unwrap().passed);
}

#[test]
fn hard_coded_blocks_span_invariant_subspaces() {
    for r in verify_all_invariant_subspaces().unwrap() {
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn closure_blocks_span_full_unitary_algebras() {
    for (n, want) in [(2, 9), (3, 19)] {
        let b = basis_for(n).unwrap();
        let blocks: Vec<Matrix> = control_closure(n)
            .unwrap()
            .elements()
            .iter()
            .map(|a| {
                let f = block_split(&b, a).unwrap();
                let kept = &f.blocks[f.blocks.len().saturating_sub(2).max(1)..];
                let k: usize = kept.iter().map(Matrix::dim).sum();
                let mut m = Matrix::zeros(k);
                let mut start = 0;
                for blk in kept {
                    let idx: Vec<usize> = (start..start + blk.dim()).collect();
                    m.set_submatrix(&idx, blk);
                    start += blk.dim();
                }
                m
            })
            .collect();
        assert_eq!(closure(&blocks).unwrap().len(), want);
    }
}

#[test]
fn unsupported_sizes_are_rejected() {
    assert!(basis_for(4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_closure_combinations_split_into_equal_blocks(seed in any::<u64>()) {
        let basis = control_closure(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = basis.elements().iter().fold(Matrix::zeros(8), |acc, e| {
            &acc + &e.scale_real(rng.random_range(-1.0..1.0))
        });
        let form = block_split(&basis_m(), &a).unwrap();
        prop_assert!(form.residual <= 1e-10);
        prop_assert!(form.duplicate_residual.unwrap() <= 1e-10);
    }

    #[test]
    fn conjugation_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = symspin::tensor::random_unitary(8, &mut rng);
        let m = basis_m();
        let back = m.unconjugate(&m.conjugate(&a).unwrap()).unwrap();
        prop_assert!((&back - &a).max_abs() < 1e-13);
    }
}
