use std::f64::consts::FRAC_PI_4;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symspin::simulator::*;
use symspin::spin::*;
use symspin::synthesis::algebra::b_zz;
use symspin::synthesis::*;
use symspin::tensor::*;
use symspin::{Matrix, C64};

fn ci(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn schedule(n: usize, segs: &[(f64, f64, f64)]) -> PulseSchedule {
    let segments = segs
        .iter()
        .map(|&(x, y, t)| PulseSegment::new(x, y, t).unwrap())
        .collect();
    PulseSchedule::new(n, segments).unwrap()
}

#[test]
fn empty_schedule_is_identity() {
    let u = schedule_unitary(&schedule(3, &[])).unwrap();
    assert_eq!(u, Matrix::identity(8));
}

#[test]
fn free_segment_is_zz_evolution() {
    let u = schedule_unitary(&schedule(2, &[(0.0, 0.0, 0.7)])).unwrap();
    let want = mat_exp(&hamiltonian_zz::<f64>(2).unwrap().scale(ci(0.0, -0.7)));
    assert!((&u - &want).max_abs() < 1e-14);
}

#[test]
fn strong_x_pulse_approaches_the_ideal_rotation() {
    let ideal = mat_exp(&hamiltonian_x::<f64>(2).unwrap().scale(ci(0.0, -FRAC_PI_4)));
    let mut errors = Vec::new();
    for a in [10.0, 100.0, 1000.0] {
        let u = schedule_unitary(&schedule(2, &[(a, 0.0, FRAC_PI_4 / a)])).unwrap();
        errors.push(phase_aligned_distance(&u, &ideal).0);
    }
    assert!(errors[0] > errors[1] && errors[1] > errors[2]);
    assert!(errors[2] < 5e-3);
}

#[test]
fn empty_plan_realizes_to_empty_schedule() {
    let plan = synthesize(3, &Matrix::identity(4)).unwrap();
    assert!(realize(&plan, 100.0).unwrap().segments.is_empty());
}

#[test]
fn zz_step_realizes_as_one_free_segment() {
    let t = 0.37;
    let target = mat_exp(&b_zz().scale_real(t));
    let plan = SynthesisPlan::from_json(&format!(
        r#"{{"n":3,"steps":[{{"gen":"BZZ","t":{t}}}],"phase":0.0,"reconstruction_error":0.0,"target":{}}}"#,
        target.to_json()
    ))
    .unwrap();
    let s = realize(&plan, 1000.0).unwrap();
    assert_eq!(s.segments.len(), 1);
    assert_eq!((s.segments[0].u_x, s.segments[0].u_y), (0.0, 0.0));
    assert!((s.segments[0].duration - bzz_free_time(t)).abs() < 1e-15);
    let block = symmetric_block(3, &schedule_unitary(&s).unwrap()).unwrap();
    assert!(phase_aligned_distance(&block, &target).0 < 1e-13);
}

#[test]
fn ghz_preparation_with_square_pulses() {
    let src: SpinState = SpinState::from_bitstring("000").unwrap();
    let dst = ghz_state(3).unwrap();
    let plan = state_transfer_plan(3, &src, &dst).unwrap();
    let out = evolve_state(&realize(&plan, 1000.0).unwrap(), &src).unwrap();
    assert!(state_fidelity(&out, &dst).unwrap() >= 0.995);
}

#[test]
fn realize_rejects_bad_amplitudes() {
    let plan = synthesize(2, &Matrix::identity(3)).unwrap();
    for a in [0.0, -1.0, f64::NAN, f64::INFINITY] {
        assert!(realize(&plan, a).is_err());
    }
}

#[test]
fn gate_fidelity_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let u = random_unitary(4, &mut rng);
    assert!((gate_fidelity(&u, &u).unwrap() - 1.0).abs() < 1e-14);
    let v = u.scale(ci(0.0, 0.9).exp());
    assert!((gate_fidelity(&u, &v).unwrap() - 1.0).abs() < 1e-14);
    let x = pauli(PauliLabel::X);
    assert_eq!(gate_fidelity(&Matrix::identity(2), &x).unwrap(), 0.0);
    assert!(gate_fidelity(&Matrix::identity(2), &Matrix::zeros(2)).is_err());
}

#[test]
fn state_fidelity_examples() {
    let g: SpinState = ghz_state(2).unwrap();
    assert!((state_fidelity(&g, &g).unwrap() - 1.0).abs() < 1e-14);
    assert!(state_fidelity(&phi_state(3, 0).unwrap(), &phi_state(3, 1).unwrap()).unwrap() < 1e-15);
    let k = SpinState::from_bitstring("00").unwrap();
    assert!((state_fidelity(&g, &k).unwrap() - 0.5).abs() < 1e-14);
    assert!(state_fidelity(&g, &ghz_state(3).unwrap()).is_err());
}

#[test]
fn ideal_replay_matches_plan_on_the_symmetric_block() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for n in [2, 3] {
        let target = random_unitary(n + 1, &mut rng);
        let plan = synthesize(n, &target).unwrap();
        let block = symmetric_block(n, &ideal_unitary(&plan).unwrap()).unwrap();
        assert!(phase_aligned_distance(&block, &target).0 <= 1e-10);
    }
}

#[test]
fn schedule_json_round_trip() {
    let s = schedule(2, &[(1.0, 0.0, 0.1), (0.0, -2.0, 0.3)]);
    let json = s.to_json();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["segments"][1]["uy"], -2.0);
    assert_eq!(PulseSchedule::from_json(&json).unwrap(), s);
    assert!(PulseSchedule::from_json(r#"{"n":2,"segments":[{"ux":0,"uy":0,"dt":-1}]}"#).is_err());
    assert!(PulseSchedule::from_json(r#"{"n":9,"segments":[]}"#).is_err());
}

#[test]
fn operator_and_state_evolution_agree() {
    let s = schedule(2, &[(3.0, 1.0, 0.2), (0.0, 0.0, 0.5)]);
    let psi: SpinState = ghz_state(2).unwrap();
    let u = match evolve(&s, &Evolved::Operator(Matrix::identity(4))).unwrap() {
        Evolved::Operator(u) => u,
        Evolved::State(_) => panic!("operator input gives operator output"),
    };
    let a = evolve_state(&s, &psi).unwrap();
    let b = psi.apply(&u).unwrap();
    assert!((state_fidelity(&a, &b).unwrap() - 1.0).abs() < 1e-13);
}

#[test]
fn report_serializes_one_of_state_or_unitary() {
    let r = SimulationReport {
        final_state: Some(ghz_state(2).unwrap()),
        final_unitary: None,
        fidelity: Some(1.0),
        target_ref: Some("ghz".into()),
        reconstruction_error: None,
    };
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert!(v.get("final_state").is_some());
    assert!(v.get("final_unitary").is_none());
}

fn segments(n_max: usize) -> impl Strategy<Value = Vec<(f64, f64, f64)>> {
    prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0, 0.0f64..10.0), 0..n_max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evolution_stays_unitary(segs in segments(10)) {
        let u = schedule_unitary(&schedule(3, &segs)).unwrap();
        prop_assert!(u.unitary_residual() <= 1e-10);
        let out = evolve_state(&schedule(3, &segs), &SpinState::basis(3, 5).unwrap()).unwrap();
        prop_assert!((out.norm() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn concatenation_composes(a in segments(5), b in segments(5)) {
        let (s1, s2) = (schedule(2, &a), schedule(2, &b));
        let psi: SpinState = SpinState::basis(2, 1).unwrap();
        let joint = evolve_state(&s1.concat(&s2).unwrap(), &psi).unwrap();
        let step = evolve_state(&s2, &evolve_state(&s1, &psi).unwrap()).unwrap();
        let diff = joint.amplitudes().iter().zip(step.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        prop_assert!(diff <= 1e-10);
    }

    #[test]
    fn symmetric_states_stay_symmetric(segs in segments(8), m in 0usize..=3) {
        let out = evolve_state(&schedule(3, &segs), &phi_state(3, m).unwrap()).unwrap();
        prop_assert!(out.asymmetric_weight() <= 1e-9);
    }
}
