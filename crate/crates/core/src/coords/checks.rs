use serde::{Deserialize, Serialize};

use super::basis::{basis_m, basis_t, BasisChange};
use crate::error::Result;
use crate::spin::{hamiltonian_x, hamiltonian_y, hamiltonian_zz, transposition};
use crate::tensor::hermitian_eig;
use crate::{Matrix, C64};

/// Names of the three-spin basis vectors, in column order of `M†`.
pub const THREE_SPIN_LABELS: [&str; 8] = [
    "psi0", "psi1", "chi0", "chi1", "phi0", "phi1", "phi2", "phi3",
];

/// Residual of one vector identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionCheck {
    pub label: String,
    pub residual: f64,
    pub holds: bool,
}

/// Collection of vector identities with an overall verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionReport {
    pub tolerance: f64,
    pub checks: Vec<ActionCheck>,
    pub passed: bool,
}

impl ActionReport {
    fn new(tolerance: f64, checks: Vec<ActionCheck>) -> Self {
        let passed = checks.iter().all(|c| c.holds);
        Self {
            tolerance,
            checks,
            passed,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ActionCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn basis_vectors(b: &BasisChange) -> Vec<Vec<C64>> {
    let md = b.matrix.adjoint();
    (0..md.dim()).map(|k| md.column(k)).collect()
}

fn combine(vectors: &[Vec<C64>], terms: &[(C64, usize)]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); vectors[0].len()];
    for &(c, k) in terms {
        for (o, v) in out.iter_mut().zip(&vectors[k]) {
            *o += c * v;
        }
    }
    out
}

fn check(label: String, op: &Matrix, input: &[C64], expected: &[C64], tol: f64) -> ActionCheck {
    let got = op.mul_vec(input).expect("matching dimension");
    let residual = got
        .iter()
        .zip(expected)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    ActionCheck {
        label,
        residual,
        holds: residual <= tol,
    }
}

const S3: f64 = 1.732_050_807_568_877_2;

type Action = (usize, &'static [(f64, f64, usize)]);

const HX_ACTIONS: [Action; 8] = [
    (0, &[(1.0, 0.0, 1)]),
    (1, &[(1.0, 0.0, 0)]),
    (2, &[(1.0, 0.0, 3)]),
    (3, &[(1.0, 0.0, 2)]),
    (4, &[(S3, 0.0, 5)]),
    (5, &[(S3, 0.0, 4), (2.0, 0.0, 6)]),
    (6, &[(S3, 0.0, 7), (2.0, 0.0, 5)]),
    (7, &[(S3, 0.0, 6)]),
];

const HY_ACTIONS: [Action; 8] = [
    (0, &[(0.0, -1.0, 1)]),
    (1, &[(0.0, 1.0, 0)]),
    (2, &[(0.0, -1.0, 3)]),
    (3, &[(0.0, 1.0, 2)]),
    (4, &[(0.0, -S3, 5)]),
    (5, &[(0.0, S3, 4), (0.0, -2.0, 6)]),
    (6, &[(0.0, -S3, 7), (0.0, 2.0, 5)]),
    (7, &[(0.0, S3, 6)]),
];

const HZZ_EIGENVALUES: [f64; 8] = [-1.0, -1.0, -1.0, -1.0, 3.0, -1.0, -1.0, 3.0];

/// The 24 stated actions of `H_x`, `H_y`, `H_zz` on the three-spin basis, within 1e-12.
pub fn verify_action_table() -> Result<ActionReport> {
    let vectors = basis_vectors(&basis_m());
    let mut checks = Vec::with_capacity(24);
    for (name, op, table) in [
        ("H_x", hamiltonian_x::<f64>(3)?, &HX_ACTIONS),
        ("H_y", hamiltonian_y::<f64>(3)?, &HY_ACTIONS),
    ] {
        for &(k, terms) in table.iter() {
            let scaled: Vec<(C64, usize)> = terms
                .iter()
                .map(|&(re, im, out)| (C64::new(re, im), out))
                .collect();
            let expected = combine(&vectors, &scaled);
            let label = format!("{name}|{}>", THREE_SPIN_LABELS[k]);
            checks.push(check(label, &op, &vectors[k], &expected, 1e-12));
        }
    }
    let hzz = hamiltonian_zz::<f64>(3)?;
    for (k, &e) in HZZ_EIGENVALUES.iter().enumerate() {
        let expected = combine(&vectors, &[(C64::new(e, 0.0), k)]);
        let label = format!("H_zz|{}>", THREE_SPIN_LABELS[k]);
        checks.push(check(label, &hzz, &vectors[k], &expected, 1e-12));
    }
    Ok(ActionReport::new(1e-12, checks))
}

/// The four actions of `Π_23` mixing `ψ_j` and `χ_j`, plus the `Π_12` parities of the same
/// vectors, within 1e-12.
pub fn verify_transposition_relations() -> Result<ActionReport> {
    let b = basis_m();
    let v = basis_vectors(&b);
    let p23 = transposition::<f64>(3, 2)?;
    let p12 = transposition::<f64>(3, 1)?;
    let h = C64::new(0.5, 0.0);
    let k = C64::new(-(3f64.sqrt()) / 2.0, 0.0);
    let mut checks = Vec::new();
    for j in 0..2 {
        let (psi, chi) = (j, 2 + j);
        checks.push(check(
            format!("Pi_23|psi{j}>"),
            &p23,
            &v[psi],
            &combine(&v, &[(h, psi), (k, chi)]),
            1e-12,
        ));
        checks.push(check(
            format!("Pi_23|chi{j}>"),
            &p23,
            &v[chi],
            &combine(&v, &[(-h, chi), (k, psi)]),
            1e-12,
        ));
        checks.push(check(
            format!("Pi_12|psi{j}>"),
            &p12,
            &v[psi],
            &combine(&v, &[(C64::new(-1.0, 0.0), psi)]),
            1e-12,
        ));
        checks.push(check(
            format!("Pi_12|chi{j}>"),
            &p12,
            &v[chi],
            &combine(&v, &[(C64::new(1.0, 0.0), chi)]),
            1e-12,
        ));
    }
    Ok(ActionReport::new(1e-12, checks))
}

fn projector(vectors: &[Vec<C64>]) -> Matrix {
    let d = vectors[0].len();
    Matrix::from_fn(d, |i, j| vectors.iter().map(|v| v[i] * v[j].conj()).sum())
}

/// Projector onto the eigenspace of a Hermitian `a` for eigenvalue `lambda`.
fn eigenspace_projector(a: &Matrix, lambda: f64) -> Result<Matrix> {
    let eig = hermitian_eig(a)?;
    let vectors: Vec<Vec<C64>> = eig
        .values
        .iter()
        .enumerate()
        .filter(|(_, &l)| (l - lambda).abs() < 1e-8)
        .map(|(k, _)| eig.vectors.column(k))
        .collect();
    Ok(projector(&vectors))
}

/// Checks that each block of the hard-coded basis spans a subspace invariant under
/// `H_zz`, `H_x`, `H_y` (projector commutators within 1e-12), and that the spans agree
/// with eigenspaces of the transposition operators computed numerically.
pub fn verify_invariant_subspaces(b: &BasisChange) -> Result<ActionReport> {
    let vectors = basis_vectors(b);
    let ops = [
        ("H_zz", hamiltonian_zz::<f64>(b.n)?),
        ("H_x", hamiltonian_x::<f64>(b.n)?),
        ("H_y", hamiltonian_y::<f64>(b.n)?),
    ];
    let names: Vec<&str> = match b.n {
        2 => vec!["S_psi", "S_phi"],
        _ => vec!["S_psi", "S_chi", "S_phi"],
    };
    let mut checks = Vec::new();
    let mut projectors = Vec::new();
    for (range, name) in b.block_ranges().into_iter().zip(&names) {
        let p = projector(&vectors[range]);
        for (op_name, op) in &ops {
            let residual = (&(op * &p) - &(&p * op)).max_abs();
            checks.push(ActionCheck {
                label: format!("[{op_name}, P({name})]"),
                residual,
                holds: residual <= 1e-12,
            });
        }
        projectors.push(p);
    }
    // Numeric derivation: the symmetric subspace is the +1 eigenspace of the average of
    // all adjacent transpositions, the ψ block is the −1 eigenspace of Π_12.
    let n = b.n;
    let mut avg = Matrix::zeros(1 << n);
    for j in 1..n {
        avg += &transposition::<f64>(n, j)?;
    }
    let avg = avg.scale_real(1.0 / (n - 1) as f64);
    let derived_phi = eigenspace_projector(&avg, 1.0)?;
    let derived_psi = eigenspace_projector(&transposition::<f64>(n, 1)?, -1.0)?;
    let mut derived = vec![
        ("S_psi", derived_psi.clone()),
        ("S_phi", derived_phi.clone()),
    ];
    if n == 3 {
        let rest = &(&Matrix::identity(8) - &derived_phi) - &derived_psi;
        derived.insert(1, ("S_chi", rest));
    }
    for ((name, d), p) in derived.iter().zip(&projectors) {
        let residual = (d - p).max_abs();
        checks.push(ActionCheck {
            label: format!("derived span {name}"),
            residual,
            holds: residual <= 1e-10,
        });
    }
    Ok(ActionReport::new(1e-12, checks))
}

/// Invariant-subspace checks for both hard-coded bases.
pub fn verify_all_invariant_subspaces() -> Result<Vec<ActionReport>> {
    Ok(vec![
        verify_invariant_subspaces(&basis_t())?,
        verify_invariant_subspaces(&basis_m())?,
    ])
}
