//! The ten end-to-end acceptance criteria, shared by the `verify-all` CLI verb and the
//! `acceptance` test target.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coords::{basis_for, block_form, three_spin_comparisons, verify_action_table};
use crate::error::Result;
use crate::lie::{control_closure, identity_catalog, predicted_dimension, GeneratorTable};
use crate::simulator::{
    evolve_state, gate_fidelity, ideal_unitary, realize, state_fidelity, symmetric_block,
};
use crate::spin::{permutation_residual, SpinState, StateName};
use crate::synthesis::algebra::{
    a1, a2, a3, b1, b2, b3, b_hat_x, b_hat_y, b_zz, c3, e, f, printed_b_hat_x, printed_b_hat_y,
};
use crate::synthesis::{state_transfer_plan, synthesize};
use crate::tensor::{commutator, mat_exp, random_special_unitary};
use crate::Matrix;

/// Criteria whose stated targets cannot be met by a correct implementation; see the README.
pub const KNOWN_UNATTAINABLE: [usize; 4] = [1, 4, 9, 10];

const STRUCT_TOL: f64 = 1e-12;
const BLOCK_TOL: f64 = 1e-10;
const INVARIANCE_TOL: f64 = 1e-10;
const CONSISTENCY_TOL: f64 = 1e-9;
const ACTION_TOL: f64 = 1e-12;
const GATE_INFIDELITY: f64 = 1e-8;
const IDEAL_STATE_INFIDELITY: f64 = 1e-6;
const PULSE_STATE_FIDELITY: f64 = 0.995;
const RANDOM_TARGETS: usize = 100;
const FACTOR_MEDIAN_LIMIT: usize = 30;
const SYNTHESIS_SECONDS: f64 = 120.0;
const CLOSURE_SECONDS: f64 = 60.0;
const SCALING_BAND: (f64, f64) = (5.0, 20.0);

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub details: Vec<String>,
    pub seconds: f64,
}

impl CriterionResult {
    /// Single status line, e.g. `PASS  5 action table: 24/24 ...`.
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {}: {} ({:.1} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.summary,
            self.seconds
        )
    }

    pub fn is_known_unattainable(&self) -> bool {
        KNOWN_UNATTAINABLE.contains(&self.id)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceReport {
    pub criteria: Vec<CriterionResult>,
    pub passed: usize,
    pub failed: usize,
}

impl AcceptanceReport {
    /// Failures outside [`KNOWN_UNATTAINABLE`].
    pub fn unexpected_failures(&self) -> Vec<&CriterionResult> {
        self.criteria
            .iter()
            .filter(|c| !c.passed && !c.is_known_unattainable())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub const CRITERION_NAMES: [&str; 10] = [
    "closure dimensions",
    "invariance certification",
    "block structure",
    "printed three-spin displays",
    "action table",
    "bracket identities",
    "synthesis round trip",
    "state preparation",
    "hard-pulse scaling",
    "structural identities",
];

/// Runs criterion `id` in `1..=10`.
pub fn run_criterion(id: usize) -> Result<CriterionResult> {
    let start = Instant::now();
    let (passed, summary, details) = match id {
        1 => closure_dimensions()?,
        2 => invariance_certification()?,
        3 => block_structure()?,
        4 => printed_displays()?,
        5 => action_table()?,
        6 => bracket_identities()?,
        7 => synthesis_round_trip()?,
        8 => state_preparation()?,
        9 => hard_pulse_scaling()?,
        10 => structural_identities()?,
        _ => return Err(crate::Error::Json(format!("no acceptance criterion {id}"))),
    };
    Ok(CriterionResult {
        id,
        name: CRITERION_NAMES[id - 1].into(),
        passed,
        summary,
        details,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn run_all() -> Result<AcceptanceReport> {
    let criteria = (1..=10).map(run_criterion).collect::<Result<Vec<_>>>()?;
    let passed = criteria.iter().filter(|c| c.passed).count();
    Ok(AcceptanceReport {
        failed: criteria.len() - passed,
        passed,
        criteria,
    })
}

type Outcome = (bool, String, Vec<String>);

fn closure_dimensions() -> Result<Outcome> {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut all = true;
    let mut dims = Vec::new();
    for n in 2..=5 {
        let got = control_closure(n)?.len();
        let want = predicted_dimension(n);
        all &= got == want;
        dims.push(format!("n={n}: {got}/{want}"));
        if got != want {
            details.push(format!("n={n}: closure dimension {got}, predicted {want}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let in_time = secs <= CLOSURE_SECONDS;
    if !in_time {
        details.push(format!(
            "closure runtime {secs:.1} s exceeds {CLOSURE_SECONDS} s"
        ));
    }
    Ok((all && in_time, dims.join(", "), details))
}

fn invariance_certification() -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut details = Vec::new();
    let mut count = 0;
    for n in 2..=5 {
        for (idx, b) in control_closure(n)?.elements().iter().enumerate() {
            let r = permutation_residual(b)?;
            worst = worst.max(r);
            count += 1;
            if r > INVARIANCE_TOL {
                details.push(format!("n={n} element {idx}: residual {r:e}"));
            }
        }
    }
    Ok((
        details.is_empty(),
        format!("{count} elements, worst residual {worst:.1e}"),
        details,
    ))
}

fn block_structure() -> Result<Outcome> {
    let mut details = Vec::new();
    let mut worst_off = 0.0f64;
    let mut worst_dup = 0.0f64;
    for n in [2, 3] {
        let b = basis_for(n)?;
        for (idx, a) in control_closure(n)?.elements().iter().enumerate() {
            let form = block_form(&b, a)?;
            worst_off = worst_off.max(form.residual);
            if form.residual > BLOCK_TOL {
                details.push(format!(
                    "n={n} element {idx}: off-block {:e}",
                    form.residual
                ));
            }
            if let Some(d) = form.duplicate_residual {
                worst_dup = worst_dup.max(d);
                if d > BLOCK_TOL {
                    details.push(format!("n={n} element {idx}: blocks differ by {d:e}"));
                }
            }
        }
    }
    Ok((
        details.is_empty(),
        format!("worst off-block {worst_off:.1e}, worst duplicate-block mismatch {worst_dup:.1e}"),
        details,
    ))
}

fn printed_displays() -> Result<Outcome> {
    let mut details = Vec::new();
    let mut parts = Vec::new();
    let mut all = true;
    for cmp in three_spin_comparisons()? {
        all &= cmp.matches;
        parts.push(format!(
            "{} {}",
            cmp.name,
            if cmp.matches { "ok" } else { "MISMATCH" }
        ));
        for d in &cmp.deviations {
            details.push(format!(
                "{} ({},{}): printed {:+} {:+}i, computed {:+} {:+}i{}",
                cmp.name,
                d.row,
                d.col,
                d.printed[0],
                d.printed[1],
                d.computed[0],
                d.computed[1],
                if cmp.sign_only { " (sign flip)" } else { "" }
            ));
        }
    }
    Ok((all, parts.join(", "), details))
}

fn action_table() -> Result<Outcome> {
    let report = verify_action_table()?;
    let worst = report.checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    let details: Vec<String> = report
        .failures()
        .map(|c| format!("{}: residual {:e}", c.label, c.residual))
        .collect();
    let holding = report
        .checks
        .iter()
        .filter(|c| c.residual <= ACTION_TOL)
        .count();
    Ok((
        report.checks.len() == 24 && holding == 24,
        format!(
            "{holding}/{} hold, worst residual {worst:.1e}",
            report.checks.len()
        ),
        details,
    ))
}

fn bracket_identities() -> Result<Outcome> {
    let mut details = Vec::new();
    let mut evaluated = 0;
    let mut deviating = 0;
    let mut worst = 0.0f64;
    let mut consistent = true;
    for n in 3..=5 {
        let table = GeneratorTable::new(n)?;
        for id in identity_catalog(n) {
            let check = table.check(&id)?;
            evaluated += 1;
            worst = worst.max(check.consistency_residual);
            if check.consistency_residual > CONSISTENCY_TOL {
                consistent = false;
                details.push(format!(
                    "n={n} {}: expansion residual {:e}",
                    id.name, check.consistency_residual
                ));
            }
            if !check.holds {
                deviating += 1;
                let devs: Vec<String> = check
                    .deviations
                    .iter()
                    .map(|d| {
                        format!(
                            "{} stated {} measured {}",
                            d.generator, d.stated, d.measured
                        )
                    })
                    .collect();
                details.push(format!("n={n} {}: {}", id.name, devs.join("; ")));
            }
        }
    }
    Ok((
        consistent && evaluated > 0,
        format!(
            "{evaluated} identities, worst expansion residual {worst:.1e}, {deviating} with logged coefficient deviations"
        ),
        details,
    ))
}

fn median(v: &mut [usize]) -> usize {
    v.sort_unstable();
    v[v.len() / 2]
}

fn synthesis_round_trip() -> Result<Outcome> {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, seed) in [(2usize, 0x51u64), (3, 0x52)] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::with_capacity(RANDOM_TARGETS);
        let mut worst = 0.0f64;
        for idx in 0..RANDOM_TARGETS {
            let target = random_special_unitary(n + 1, &mut rng);
            let plan = synthesize(n, &target)?;
            let block = symmetric_block(n, &ideal_unitary(&plan)?)?;
            let infidelity = 1.0 - gate_fidelity(&block, &target)?;
            worst = worst.max(infidelity);
            if infidelity > GATE_INFIDELITY {
                ok = false;
                details.push(format!(
                    "SU({}) target {idx}: infidelity {infidelity:e}",
                    n + 1
                ));
            }
            factors.push(plan.factor_count);
        }
        let med = median(&mut factors);
        if med > FACTOR_MEDIAN_LIMIT {
            ok = false;
            details.push(format!("SU({}) median factor count {med}", n + 1));
        }
        parts.push(format!(
            "SU({}): worst 1-F {worst:.1e}, median {med} factors",
            n + 1
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > SYNTHESIS_SECONDS {
        ok = false;
        details.push(format!("runtime {secs:.1} s exceeds {SYNTHESIS_SECONDS} s"));
    }
    Ok((ok, parts.join(", "), details))
}

const TRANSFERS: [(usize, &str, &str); 3] = [
    (2, "ket:00", "ghz"),
    (3, "ket:000", "ghz"),
    (3, "ket:000", "w"),
];

fn resolve(name: &str, n: usize) -> Result<SpinState> {
    name.parse::<StateName>()?.resolve(n)
}

/// Infidelity of a transfer plan replayed ideally and as square pulses at each amplitude.
pub fn transfer_infidelities(
    n: usize,
    from: &str,
    to: &str,
    amplitudes: &[f64],
) -> Result<(f64, Vec<f64>)> {
    let src = resolve(from, n)?;
    let dst = resolve(to, n)?;
    let plan = state_transfer_plan(n, &src, &dst)?;
    let ideal = src.apply(&ideal_unitary(&plan)?)?;
    let ideal_inf = 1.0 - state_fidelity(&ideal, &dst)?;
    let pulsed = amplitudes
        .iter()
        .map(|&a| {
            let out = evolve_state(&realize(&plan, a)?, &src)?;
            Ok(1.0 - state_fidelity(&out, &dst)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((ideal_inf, pulsed))
}

fn state_preparation() -> Result<Outcome> {
    let mut details = Vec::new();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, from, to) in TRANSFERS {
        let (ideal, pulsed) = transfer_infidelities(n, from, to, &[1000.0])?;
        let pulse_fidelity = 1.0 - pulsed[0];
        if ideal > IDEAL_STATE_INFIDELITY {
            ok = false;
            details.push(format!("{from}->{to}: ideal infidelity {ideal:e}"));
        }
        if pulse_fidelity < PULSE_STATE_FIDELITY {
            ok = false;
            details.push(format!(
                "{from}->{to}: fidelity {pulse_fidelity} at amplitude 1000"
            ));
        }
        parts.push(format!(
            "{from}->{to}: ideal 1-F {ideal:.1e}, A=1000 1-F {:.1e}",
            pulsed[0]
        ));
    }
    Ok((ok, parts.join("; "), details))
}

fn hard_pulse_scaling() -> Result<Outcome> {
    let (_, inf) = transfer_infidelities(3, "ket:000", "ghz", &[100.0, 1000.0])?;
    let ratio = inf[0] / inf[1];
    let ok = (SCALING_BAND.0..=SCALING_BAND.1).contains(&ratio);
    let mut details = Vec::new();
    if !ok {
        details.push(format!(
            "infidelity {:.3e} at A=100 and {:.3e} at A=1000; the square-pulse error is O(1/A) in \
             operator norm but enters the fidelity quadratically, so the ratio is near 100",
            inf[0], inf[1]
        ));
    }
    Ok((
        ok,
        format!(
            "ratio {ratio:.2} (band [{}, {}])",
            SCALING_BAND.0, SCALING_BAND.1
        ),
        details,
    ))
}

fn bracket_residual(a: &Matrix, b: &Matrix, c: &Matrix) -> Result<f64> {
    Ok((&commutator(a, b)? - c).max_abs())
}

fn structural_identities() -> Result<Outcome> {
    let zero = Matrix::zeros(4);
    let (a1, a2, a3, e) = (a1(), a2(), a3(), e());
    let (b1, b2, b3, f) = (b1(), b2(), b3(), f());
    let mut checks: Vec<(String, f64)> = vec![
        ("[A1,A2]=A3".into(), bracket_residual(&a1, &a2, &a3)?),
        ("[A2,A3]=A1".into(), bracket_residual(&a2, &a3, &a1)?),
        ("[A3,A1]=A2".into(), bracket_residual(&a3, &a1, &a2)?),
        ("[A1,E]=0".into(), bracket_residual(&a1, &e, &zero)?),
        ("[A2,E]=0".into(), bracket_residual(&a2, &e, &zero)?),
        ("[A3,E]=0".into(), bracket_residual(&a3, &e, &zero)?),
        ("[B1,B2]=B3".into(), bracket_residual(&b1, &b2, &b3)?),
        ("[B2,B3]=B1".into(), bracket_residual(&b2, &b3, &b1)?),
        ("[B3,B1]=B2".into(), bracket_residual(&b3, &b1, &b2)?),
        ("[B1,F]=0".into(), bracket_residual(&b1, &f, &zero)?),
        ("[B2,F]=0".into(), bracket_residual(&b2, &f, &zero)?),
        ("[B3,F]=0".into(), bracket_residual(&b3, &f, &zero)?),
    ];
    let bzz = b_zz();
    let conj = |t: f64, g: &Matrix| {
        let u = mat_exp(&bzz.scale_real(t));
        &(&u * g) * &u.adjoint()
    };
    let rotated_b3 = conj(-std::f64::consts::FRAC_PI_4, &b3);
    checks.push((
        "exp(-Bzz pi/4) B3 exp(Bzz pi/4) = C3".into(),
        (&rotated_b3 - &c3()).max_abs(),
    ));
    checks.push((
        "hat B_y matches printed".into(),
        (&b_hat_y() - &printed_b_hat_y()).max_abs(),
    ));
    checks.push((
        "hat B_x matches printed".into(),
        (&b_hat_x() - &printed_b_hat_x()).max_abs(),
    ));

    let worst = checks.iter().map(|c| c.1).fold(0.0, f64::max);
    let mut details: Vec<String> = checks
        .iter()
        .filter(|c| c.1 > STRUCT_TOL)
        .map(|(name, r)| format!("{name}: residual {r:e}"))
        .collect();
    let ok = details.is_empty();
    if !ok {
        let half = (&rotated_b3 - &c3().scale_real(0.5)).max_abs();
        details.push(format!(
            "diagnostic: exp(-Bzz pi/4) B3 exp(Bzz pi/4) = C3/2 residual {half:e}"
        ));
    }
    let holding = checks.iter().filter(|c| c.1 <= STRUCT_TOL).count();
    Ok((
        ok,
        format!(
            "{holding}/{} hold, worst residual {worst:.1e}",
            checks.len()
        ),
        details,
    ))
}
