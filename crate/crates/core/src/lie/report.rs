use serde::{Deserialize, Serialize};

use super::closure::{closure, predicted_dimension, traceless, LieBasis};
use super::identities::{identity_catalog, GeneratorTable, Term};
use crate::error::Result;
use crate::spin::{
    hamiltonian_x, hamiltonian_y, hamiltonian_zz, permutation_residual, SymmetricGenerator,
};
use crate::{Matrix, C64};

const INVARIANCE_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;

/// `{iH_zz, iH_x, iH_y}` for `n ≥ 2` spins.
pub fn control_generators(n: usize) -> Result<Vec<Matrix>> {
    let i = C64::new(0.0, 1.0);
    Ok(vec![
        hamiltonian_zz::<f64>(n)?.scale(i),
        hamiltonian_x::<f64>(n)?.scale(i),
        hamiltonian_y::<f64>(n)?.scale(i),
    ])
}

/// Closure of the control generators for `n` spins.
pub fn control_closure(n: usize) -> Result<LieBasis> {
    closure(&control_generators(n)?)
}

/// One row of the identity table in a closure report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub lhs: [SymmetricGenerator; 2],
    pub stated_rhs: Vec<Term>,
    pub measured_rhs: Vec<Term>,
    pub holds: bool,
    pub consistency_residual: f64,
}

/// Structured outcome of comparing the control closure with the traceless
/// permutation-invariant algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub n: usize,
    pub generated_dim: usize,
    pub predicted_dim: usize,
    pub dimension_ok: bool,
    pub invariance_ok: bool,
    pub max_invariance_residual: f64,
    pub traceless_ok: bool,
    pub max_trace: f64,
    pub membership_ok: bool,
    pub max_membership_residual: f64,
    pub failures: Vec<String>,
    pub passed: bool,
    pub identity_results: Vec<IdentityResult>,
}

impl ClosureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checks, for `n` spins, that the closure has the predicted dimension, consists of
/// traceless permutation-invariant elements, and contains every traceless symmetric
/// generator. Assertion failures are collected in the report.
///
/// With `with_identities` the bracket catalog for `n` is evaluated as well.
pub fn verify_symmetric_closure(n: usize, with_identities: bool) -> Result<ClosureReport> {
    let basis = control_closure(n)?;
    let predicted_dim = predicted_dimension(n);
    let mut failures = Vec::new();

    let generated_dim = basis.len();
    let dimension_ok = generated_dim == predicted_dim;
    if !dimension_ok {
        failures.push(format!(
            "closure dimension {generated_dim} differs from predicted {predicted_dim}"
        ));
    }

    let mut max_invariance_residual = 0.0f64;
    let mut max_trace = 0.0f64;
    for (idx, b) in basis.elements().iter().enumerate() {
        let r = permutation_residual(b)?;
        max_invariance_residual = max_invariance_residual.max(r);
        if r > INVARIANCE_TOL {
            failures.push(format!("element {idx} not permutation invariant ({r:e})"));
        }
        let t = b.trace().norm();
        max_trace = max_trace.max(t);
        if t > TRACE_TOL {
            failures.push(format!("element {idx} has trace {t:e}"));
        }
    }
    let invariance_ok = max_invariance_residual <= INVARIANCE_TOL;
    let traceless_ok = max_trace <= TRACE_TOL;

    let table = GeneratorTable::new(n)?;
    let mut max_membership_residual = 0.0f64;
    let mut membership_ok = true;
    for g in SymmetricGenerator::all(n) {
        let m = traceless(table.matrix(&g).expect("table holds every generator"));
        if m.hs_norm() == 0.0 {
            continue;
        }
        let r = basis.relative_residual(&m)?;
        max_membership_residual = max_membership_residual.max(r);
        if r > 1e-8 {
            membership_ok = false;
            failures.push(format!("{g} outside the closure (relative residual {r:e})"));
        }
    }

    let identity_results = if with_identities {
        identity_catalog(n)
            .iter()
            .map(|id| {
                let check = table.check(id)?;
                Ok(IdentityResult {
                    name: id.name.clone(),
                    lhs: [id.lhs.0, id.lhs.1],
                    stated_rhs: id.rhs.clone(),
                    measured_rhs: check.measured_rhs,
                    holds: check.holds,
                    consistency_residual: check.consistency_residual,
                })
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };

    Ok(ClosureReport {
        n,
        generated_dim,
        predicted_dim,
        dimension_ok,
        invariance_ok,
        max_invariance_residual,
        traceless_ok,
        max_trace,
        membership_ok,
        max_membership_residual,
        passed: failures.is_empty(),
        failures,
        identity_results,
    })
}
