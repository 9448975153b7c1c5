use proptest::prelude::*;
use symspin::spin::*;
use symspin::tensor::*;
use symspin::{Matrix, C64};

fn i() -> C64 {
    C64::new(0.0, 1.0)
}

fn p(s: &str) -> Matrix {
    pauli_string_matrix(&s.parse::<PauliString>().unwrap())
}

fn close(a: &Matrix, b: &Matrix) -> bool {
    (a - b).max_abs() <= 1e-12
}

fn amp_close(a: &SpinState, b: &SpinState) -> bool {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .all(|(x, y)| (x - y).norm() < 1e-14)
}

#[test]
fn zz_hamiltonian_for_two_spins() {
    assert_eq!(hamiltonian_zz::<f64>(2).unwrap(), p("zz"));
}

#[test]
fn x_hamiltonian_for_two_spins() {
    assert_eq!(hamiltonian_x::<f64>(2).unwrap(), &p("x0") + &p("0x"));
}

#[test]
fn hamiltonians_reject_too_few_or_too_many_spins() {
    assert!(hamiltonian_zz::<f64>(1).is_err());
    assert!(hamiltonian_x::<f64>(MAX_SPINS + 1).is_err());
}

#[test]
fn symmetric_generator_examples() {
    let g = |n, kx, ky, kz| {
        symmetric_generator::<f64>(&SymmetricGenerator::new(n, kx, ky, kz).unwrap()).unwrap()
    };
    assert!(close(
        &g(3, 0, 0, 2),
        &hamiltonian_zz::<f64>(3).unwrap().scale(i())
    ));
    assert!(close(
        &g(2, 1, 0, 0),
        &hamiltonian_x::<f64>(2).unwrap().scale(i())
    ));
    assert!(close(&g(2, 0, 0, 0), &Matrix::identity(4).scale(i())));
}

#[test]
fn symmetric_generator_rejects_overfull_counts() {
    assert!(SymmetricGenerator::new(2, 2, 1, 0).is_err());
}

#[test]
fn generator_count_matches_binomial() {
    for n in 1..=5 {
        let expected = (n + 1) * (n + 2) * (n + 3) / 6;
        assert_eq!(SymmetricGenerator::all(n).len(), expected);
    }
}

#[test]
fn two_spin_transposition_is_the_swap() {
    let swap = Matrix::from_real(
        4,
        &[
            1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0., 0., 0., 0., 0., 1.,
        ],
    );
    let t = transposition::<f64>(2, 1).unwrap();
    assert_eq!(t, swap);
    assert_eq!(&t * &t, Matrix::identity(4));
}

#[test]
fn transposition_moves_the_excitation() {
    let t = transposition::<f64>(3, 1).unwrap();
    let out = SpinState::<f64>::from_bitstring("010")
        .unwrap()
        .apply(&t)
        .unwrap();
    assert_eq!(out, SpinState::from_bitstring("100").unwrap());
}

#[test]
fn transposition_index_is_checked() {
    assert!(transposition::<f64>(3, 0).is_err());
    assert!(transposition::<f64>(3, 3).is_err());
}

#[test]
fn invariance_examples() {
    let hx = hamiltonian_x::<f64>(3).unwrap().scale(i());
    assert!(is_permutation_invariant(&hx).unwrap());
    assert!(!is_permutation_invariant(&p("z0").scale(i())).unwrap());
    assert!(is_permutation_invariant(&Matrix::identity(8).scale(i())).unwrap());
    assert!(is_permutation_invariant(&Matrix::identity(3)).is_err());
}

#[test]
fn dicke_state_for_one_excitation() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let want = SpinState::new(
        2,
        vec![
            C64::new(0.0, 0.0),
            C64::new(s, 0.0),
            C64::new(s, 0.0),
            C64::new(0.0, 0.0),
        ],
    )
    .unwrap();
    assert!(amp_close(&phi_state(2, 1).unwrap(), &want));
}

#[test]
fn ghz_and_w_in_dicke_terms() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for n in 2..=5 {
        let a = phi_state::<f64>(n, 0).unwrap();
        let b = phi_state::<f64>(n, n).unwrap();
        let amps: Vec<C64> = a
            .amplitudes()
            .iter()
            .zip(b.amplitudes())
            .map(|(x, y)| (x + y) * s)
            .collect();
        assert!(amp_close(
            &ghz_state(n).unwrap(),
            &SpinState::new(n, amps).unwrap()
        ));
        assert!(amp_close(&w_state(n).unwrap(), &phi_state(n, 1).unwrap()));
    }
}

#[test]
fn named_states_resolve() {
    let ket: SpinState = "ket:101".parse::<StateName>().unwrap().resolve(3).unwrap();
    assert_eq!(ket, SpinState::basis(3, 5).unwrap());
    assert!("ket:12".parse::<StateName>().is_err());
    assert!("ket:01"
        .parse::<StateName>()
        .unwrap()
        .resolve::<f64>(3)
        .is_err());
    assert!("phi:4"
        .parse::<StateName>()
        .unwrap()
        .resolve::<f64>(3)
        .is_err());
    assert!("bell".parse::<StateName>().is_err());
}

#[test]
fn state_validation() {
    assert!(SpinState::new(1, vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)]).is_err());
    assert!(SpinState::new(2, vec![C64::new(1.0, 0.0)]).is_err());
    let s = SpinState::normalized(1, vec![C64::new(3.0, 0.0), C64::new(0.0, 4.0)]).unwrap();
    assert!((s.norm() - 1.0).abs() < 1e-15);
    assert_eq!(SpinState::from_json(&s.to_json()).unwrap(), s);
}

#[test]
fn dicke_coordinates_round_trip() {
    let g: SpinState = ghz_state(3).unwrap();
    let c = g.dicke_coordinates();
    assert!(g.asymmetric_weight() < 1e-15);
    assert!(amp_close(
        &SpinState::from_dicke_coordinates(3, &c).unwrap(),
        &g
    ));
    let k: SpinState = SpinState::from_bitstring("01").unwrap();
    assert!((k.asymmetric_weight() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
}

#[test]
fn hamiltonians_are_hermitian_and_invariant() {
    for n in 2..=5 {
        for h in [hamiltonian_zz::<f64>(n), hamiltonian_x(n), hamiltonian_y(n)] {
            let h = h.unwrap();
            assert!(h.is_hermitian());
            assert!(is_permutation_invariant(&h).unwrap());
        }
    }
}

#[test]
fn dicke_states_are_orthonormal() {
    for n in 1..=5 {
        for a in 0..=n {
            for b in 0..=n {
                let v = phi_state::<f64>(n, a)
                    .unwrap()
                    .inner(&phi_state(n, b).unwrap())
                    .unwrap();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((v - C64::new(want, 0.0)).norm() < 1e-14);
            }
        }
    }
}

#[test]
fn symmetric_generators_are_invariant_and_orthogonal() {
    for n in 2..=4 {
        let all = SymmetricGenerator::all(n);
        let mats: Vec<Matrix> = all
            .iter()
            .map(|g| symmetric_generator(g).unwrap())
            .collect();
        for (a, ma) in all.iter().zip(&mats) {
            assert!(is_permutation_invariant(ma).unwrap(), "{a:?}");
            assert!(ma.is_skew_hermitian());
        }
        for (ia, ma) in mats.iter().enumerate() {
            for mb in &mats[ia + 1..] {
                assert!(hs_inner(ma, mb).unwrap().norm() < 1e-12);
            }
        }
    }
}

fn label() -> impl Strategy<Value = char> {
    prop::sample::select(vec!['0', 'x', 'y', 'z'])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn swap_exchanges_tensor_factors(a in label(), b in label()) {
        let t = transposition::<f64>(2, 1).unwrap();
        let ab = p(&format!("{a}{b}"));
        let ba = p(&format!("{b}{a}"));
        prop_assert_eq!(&(&t * &ab) * &t, ba);
    }

    #[test]
    fn transpositions_are_involutions(n in 2usize..=5, j in 1usize..5) {
        prop_assume!(j < n);
        let t = transposition::<f64>(n, j).unwrap();
        prop_assert_eq!(&t * &t, Matrix::identity(1 << n));
    }

    #[test]
    fn bitstring_indexing_is_msb_first(bits in "[01]{1,5}") {
        let s: SpinState = SpinState::from_bitstring(&bits).unwrap();
        let idx = usize::from_str_radix(&bits, 2).unwrap();
        prop_assert_eq!(s, SpinState::basis(bits.len(), idx).unwrap());
    }
}
