use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symspin::simulator::{ideal_unitary, state_fidelity, symmetric_block};
use symspin::spin::*;
use symspin::synthesis::algebra::*;
use symspin::synthesis::*;
use symspin::tensor::*;
use symspin::{Matrix, C64};

fn ci(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn dist(a: &Matrix, b: &Matrix) -> f64 {
    phase_aligned_distance(a, b).0
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn single_axis_targets_need_one_factor() {
    let f = su2_two_axis(&mat_exp(&z1().scale_real(0.3))).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].0, Axis::Z1);
    assert!((f[0].1 - 0.3).abs() < 1e-12);
    let f = su2_two_axis(&mat_exp(&z2().scale_real(0.5))).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].0, Axis::Z2);
    assert!((f[0].1 - 0.5).abs() < 1e-12);
}

#[test]
fn two_axis_identity_is_empty() {
    assert!(su2_two_axis(&Matrix::identity(2)).unwrap().is_empty());
}

#[test]
fn two_axis_rejects_non_special_input() {
    assert!(su2_two_axis(&Matrix::identity(2).scale(ci(0.0, 1.0))).is_err());
}

#[test]
fn two_axis_random_targets() {
    let mut r = rng(11);
    for _ in 0..200 {
        let x = random_special_unitary(2, &mut r);
        let f = su2_two_axis(&x).unwrap();
        assert!(f.len() <= 6);
        assert!((&two_axis_product(&f) - &x).max_abs() <= 1e-10);
    }
}

#[test]
fn kak_su3_identity_and_torus() {
    let c = kak_su3(&Matrix::identity(3)).unwrap();
    assert!((&c.reconstruct() - &Matrix::identity(3)).max_abs() <= 1e-12);
    let x = Matrix::from_diagonal(&[ci(0.0, 0.3).exp(), ci(0.0, -0.1).exp(), ci(0.0, -0.2).exp()]);
    let c = kak_su3(&x).unwrap();
    assert!((&c.reconstruct() - &x).max_abs() <= 1e-12);
    let off: f64 = (0..3)
        .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| c.a[(i, j)].norm())
        .fold(0.0, f64::max);
    assert!(off < 1e-12);
    for k in [&c.k1, &c.k2] {
        assert!(k.as_slice().iter().all(|z| z.im.abs() < 1e-12));
    }
}

#[test]
fn kak_su3_random_targets() {
    let mut r = rng(12);
    for _ in 0..100 {
        let x = random_special_unitary(3, &mut r);
        let c = kak_su3(&x).unwrap();
        assert!((&c.reconstruct() - &x).max_abs() <= 1e-10);
        assert!((det(&c.k1) - ci(1.0, 0.0)).norm() < 1e-10);
    }
}

#[test]
fn aiii_identity_and_torus() {
    let c = kak_aiii_su4(&Matrix::identity(4)).unwrap();
    assert!((&c.reconstruct() - &Matrix::identity(4)).max_abs() <= 1e-12);
    let x = mat_exp(&a3().scale_real(0.4));
    let c = kak_aiii_su4(&x).unwrap();
    assert!((&c.reconstruct() - &x).max_abs() <= 1e-12);
    let (s, r) = torus_coordinates(&x).unwrap();
    assert!((s - 0.4).abs() < 1e-12 && r.abs() < 1e-12);
}

#[test]
fn aiii_random_targets() {
    let mut r = rng(13);
    for _ in 0..100 {
        let x = random_special_unitary(4, &mut r);
        let c = kak_aiii_su4(&x).unwrap();
        assert!((&c.reconstruct() - &x).max_abs() <= 1e-10);
        assert!(aiii_off_block(&c.k1) <= 1e-10 && aiii_off_block(&c.k2) <= 1e-10);
        assert!(dist(&torus_element(c.torus[0], c.torus[1]), &c.a) <= 1e-10);
    }
}

#[test]
fn k_plan_for_identity_is_empty() {
    assert!(k_factor_plan(&Matrix::identity(4))
        .unwrap()
        .steps
        .is_empty());
}

#[test]
fn k_plan_for_plane_rotation() {
    let k = mat_exp(&(&a2() - &e()).scale_real(0.7));
    let plan = k_factor_plan(&k).unwrap();
    assert!(plan.reconstruction_error <= 1e-8);
    assert!(dist(&plan.replay(), &k) <= 1e-8);
}

#[test]
fn k_plan_for_random_block_unitaries() {
    let mut r = rng(14);
    for _ in 0..10 {
        let u1 = random_unitary(2, &mut r);
        let mut u2 = random_unitary(2, &mut r);
        let fix = (det(&u1) * det(&u2)).powf(-0.5);
        u2 = u2.scale(fix);
        let mut k = Matrix::zeros(4);
        for (i, &p) in [0usize, 3].iter().enumerate() {
            for (j, &q) in [0usize, 3].iter().enumerate() {
                k[(p, q)] = u1[(i, j)];
            }
        }
        for (i, &p) in [1usize, 2].iter().enumerate() {
            for (j, &q) in [1usize, 2].iter().enumerate() {
                k[(p, q)] = u2[(i, j)];
            }
        }
        let plan = k_factor_plan(&k).unwrap();
        assert!(
            plan.reconstruction_error <= 1e-8,
            "{}",
            plan.reconstruction_error
        );
    }
}

#[test]
fn torus_plans() {
    assert!(torus_factor_plan(&Matrix::identity(4))
        .unwrap()
        .steps
        .is_empty());
    let a = torus_element(0.0, 0.2);
    let plan = torus_factor_plan(&a).unwrap();
    assert!(plan.reconstruction_error <= 1e-10);
    assert!(plan.steps.iter().any(|s| s.gen == Generator::Bzz));
    let a = torus_element(0.3, 0.2);
    let b = &mat_exp(&c3().scale_real(0.2)) * &mat_exp(&a3().scale_real(0.3));
    assert!((&a - &b).max_abs() < 1e-14);
    assert!(torus_factor_plan(&a).unwrap().reconstruction_error <= 1e-10);
}

#[test]
fn synthesize_identity_is_empty() {
    for n in [2, 3] {
        let plan = synthesize(n, &Matrix::identity(n + 1)).unwrap();
        assert!(plan.steps.is_empty());
        assert!(plan.reconstruction_error <= 1e-10);
    }
}

#[test]
fn synthesize_two_spin_x_pulse() {
    let hx = symspin::spin::hamiltonian_x::<f64>(2).unwrap();
    let full = mat_exp(&hx.scale(ci(0.0, -FRAC_PI_4)));
    let target = symmetric_block(2, &full).unwrap();
    let plan = synthesize(2, &target).unwrap();
    assert!(plan.reconstruction_error <= 1e-10);
    let realized = symmetric_block(2, &ideal_unitary(&plan).unwrap()).unwrap();
    assert!(dist(&realized, &target) <= 1e-10);
}

#[test]
fn synthesize_three_spin_ghz_preparation() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let ghz = [ci(s, 0.0), ci(0.0, 0.0), ci(0.0, 0.0), ci(s, 0.0)];
    let start = [ci(1.0, 0.0), ci(0.0, 0.0), ci(0.0, 0.0), ci(0.0, 0.0)];
    let u = transfer_unitary(&start, &ghz);
    let plan = synthesize(3, &u).unwrap();
    let out = SpinState::<f64>::basis(3, 0)
        .unwrap()
        .apply(&ideal_unitary(&plan).unwrap())
        .unwrap();
    assert!(state_fidelity(&out, &ghz_state(3).unwrap()).unwrap() >= 1.0 - 1e-9);
}

#[test]
fn synthesize_rejects_bad_inputs() {
    assert!(synthesize(4, &Matrix::identity(5)).is_err());
    assert!(synthesize(3, &Matrix::identity(3)).is_err());
    assert!(synthesize(2, &Matrix::from_real(3, &[1.0; 9])).is_err());
}

#[test]
fn transfer_plans() {
    let g: SpinState = ghz_state(3).unwrap();
    assert!(state_transfer_plan(3, &g, &g).unwrap().steps.is_empty());
    for (n, src, dst) in [(2, "ket:00", "ghz"), (3, "ket:000", "w")] {
        let a: SpinState = src.parse::<StateName>().unwrap().resolve(n).unwrap();
        let b: SpinState = dst.parse::<StateName>().unwrap().resolve(n).unwrap();
        let plan = state_transfer_plan(n, &a, &b).unwrap();
        let out = a.apply(&ideal_unitary(&plan).unwrap()).unwrap();
        assert!(state_fidelity(&out, &b).unwrap() >= 1.0 - 1e-9);
    }
    let asym: SpinState = SpinState::from_bitstring("01").unwrap();
    assert!(state_transfer_plan(2, &asym, &ghz_state(2).unwrap()).is_err());
}

#[test]
fn commutation_tables() {
    let zero = Matrix::zeros(4);
    let br = |a: &Matrix, b: &Matrix| commutator(a, b).unwrap();
    for (a, b, c) in [(a1(), a2(), a3()), (a2(), a3(), a1()), (a3(), a1(), a2())] {
        assert!((&br(&a, &b) - &c).max_abs() <= 1e-12);
    }
    for (a, b, c) in [(b1(), b2(), b3()), (b2(), b3(), b1()), (b3(), b1(), b2())] {
        assert!((&br(&a, &b) - &c).max_abs() <= 1e-12);
    }
    for a in [a1(), a2(), a3()] {
        assert!((&br(&a, &e()) - &zero).max_abs() <= 1e-12);
    }
    for b in [b1(), b2(), b3()] {
        assert!((&br(&b, &f()) - &zero).max_abs() <= 1e-12);
    }
}

#[test]
fn hatted_controls_match_their_displays() {
    let u = mat_exp(&b_zz().scale_real(FRAC_PI_2));
    let conj = |g: &Matrix| &(&u * g) * &u.adjoint();
    assert!((&conj(&b_y()) - &printed_b_hat_y()).max_abs() <= 1e-12);
    assert!((&conj(&b_x()) - &printed_b_hat_x()).max_abs() <= 1e-12);
}

#[test]
fn zz_generator_is_the_shifted_display() {
    let want = (&b_zz_tilde() + &Matrix::identity(4).scale(ci(0.0, 1.0))).scale_real(-0.5);
    assert!((&b_zz() - &want).max_abs() <= 1e-15);
}

/// The conjugated `B_3` equals half the displayed `C_3`.
#[test]
fn rotated_b3_is_half_of_displayed_c3() {
    let u = mat_exp(&b_zz().scale_real(-FRAC_PI_4));
    let rotated = &(&u * &b3()) * &u.adjoint();
    assert!((&rotated - &c3().scale_real(0.5)).max_abs() <= 1e-12);
    assert!((&rotated - &c3()).max_abs() > 0.4);
}

#[test]
fn model_generators_match_the_abstract_ones() {
    let [x, y, zz] = three_spin_generators_from_model().unwrap();
    assert!((&x - &b_x()).max_abs() <= 1e-12);
    assert!((&y - &b_y()).max_abs() <= 1e-12);
    assert!((&zz - &b_zz_tilde()).max_abs() <= 1e-12);
}

#[test]
fn by_spectrum() {
    let e = hermitian_eig(&b_y().scale(ci(0.0, -1.0))).unwrap();
    for (got, want) in e.values.iter().zip([-3.0, -1.0, 1.0, 3.0]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn plan_json_round_trip_and_validation() {
    let mut r = rng(15);
    let plan = synthesize(3, &random_unitary(4, &mut r)).unwrap();
    let back = SynthesisPlan::from_json(&plan.to_json()).unwrap();
    assert_eq!(back, plan);
    let v: serde_json::Value = serde_json::from_str(&plan.to_json()).unwrap();
    let tags: Vec<&str> = v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["gen"].as_str().unwrap())
        .collect();
    assert!(tags.iter().all(|t| ["BX", "BY", "BZZ"].contains(t)));
    let bad = plan.to_json().replacen("\"BX\"", "\"AX\"", 1);
    assert!(SynthesisPlan::from_json(&bad).is_err());
}

#[test]
fn subgroup_solvers_reject_outsiders() {
    let mut r = rng(16);
    let x = random_special_unitary(4, &mut r);
    assert!(SubgroupSolver::y_group().solve(&x).is_err());
}

#[test]
fn phase_insertion_fallback_reconstructs() {
    let y = SubgroupSolver::y_group();
    let g = &y_rotation(0.4, -0.9) * &mat_exp(&e().scale_real(0.3));
    let steps = y.solve_with_phase_insertion(&g).unwrap();
    let rev: Vec<Step> = steps.iter().rev().copied().collect();
    assert!(dist(&replay_steps(4, &rev), &g) <= 1e-8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn su2_factorization_round_trips(seed in any::<u64>()) {
        let x = random_special_unitary(2, &mut rng(seed));
        let f = su2_two_axis(&x).unwrap();
        prop_assert!(f.len() <= 6);
        prop_assert!((&two_axis_product(&f) - &x).max_abs() <= 1e-10);
    }

    #[test]
    fn cartan_factors_reconstruct(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x3 = random_special_unitary(3, &mut r);
        prop_assert!((&kak_su3(&x3).unwrap().reconstruct() - &x3).max_abs() <= 1e-10);
        let x4 = random_special_unitary(4, &mut r);
        prop_assert!((&kak_aiii_su4(&x4).unwrap().reconstruct() - &x4).max_abs() <= 1e-10);
    }

    #[test]
    fn plans_reconstruct_their_targets(seed in any::<u64>(), n in 2usize..=3) {
        let target = random_unitary(n + 1, &mut rng(seed));
        let plan = synthesize(n, &target).unwrap();
        prop_assert!(plan.reconstruction_error <= 1e-8);
        let replay = plan.replay().scale(C64::from_polar(1.0, plan.phase));
        prop_assert!((&replay - &target).max_abs() <= plan.reconstruction_error + 1e-12);
    }

    #[test]
    fn simplify_is_idempotent_and_preserves_the_product(
        durations in prop::collection::vec((0usize..3, -4.0f64..4.0), 0..12)
    ) {
        let gens = [Generator::Bx, Generator::By, Generator::Bzz];
        let steps: Vec<Step> = durations.iter().map(|&(g, t)| Step::new(gens[g], t)).collect();
        let once = simplify(&steps);
        prop_assert_eq!(simplify(&once), once.clone());
        prop_assert!(dist(&replay_steps(4, &once), &replay_steps(4, &steps)) <= 1e-10);
    }
}
