//! Three spins: expansion of the AIII factors into exponentials of `B_x`, `B_y`, `B_zz` and hats.

use std::f64::consts::FRAC_PI_4;

use super::algebra::{a2, a3, b2, b_zz, e, f, r_z};
use super::group::SubgroupSolver;
use super::kak::{aiii_off_block, kak_aiii_su4, torus_element};
use super::plan::{Generator, Step, SynthesisPlan};
use super::su2::{euler_xyx, euler_yxy};
use crate::error::{Error, Result};
use crate::tensor::{det, mat_exp, phase_aligned_distance};
use crate::{Matrix, C64};

/// Off-block tolerance for `K`-subgroup inputs.
pub const K_BLOCK_TOL: f64 = 1e-10;

/// `exp((A_2+E)·a14 + (A_2−E)·a23)`: Y rotations on rows/columns `{1,4}` and `{2,3}`.
pub fn y_rotation(a14: f64, a23: f64) -> Matrix {
    let p = &a2() + &e();
    let m = &a2() - &e();
    mat_exp(&(&p.scale_real(a14) + &m.scale_real(a23)))
}

/// `exp((B_2+F)·b14 + (B_2−F)·b23)`: X rotations on rows/columns `{1,4}` and `{2,3}`.
pub fn x_rotation(b14: f64, b23: f64) -> Matrix {
    let p = &b2() + &f();
    let m = &b2() - &f();
    mat_exp(&(&p.scale_real(b14) + &m.scale_real(b23)))
}

pub(crate) fn bzz(t: f64) -> Matrix {
    mat_exp(&b_zz().scale_real(t))
}

/// Euler order of a `K` factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum KForm {
    /// `e^{B_zz φ} · Y · X · Y`.
    Yxy,
    /// `X · Y · X · e^{B_zz φ}`.
    Xyx,
}

/// Subgroup targets of a `K` element.
#[derive(Clone, Debug)]
pub(crate) struct KParts {
    pub phi: f64,
    pub outer_first: Matrix,
    pub middle: Matrix,
    pub outer_last: Matrix,
}

pub(crate) fn k_parts(k: &Matrix, form: KForm) -> Result<KParts> {
    let residual = aiii_off_block(k);
    if k.dim() != 4 || residual > K_BLOCK_TOL {
        return Err(Error::NotBlockDiagonal { residual });
    }
    let u1 = k.submatrix(&[0, 3]);
    let u2 = k.submatrix(&[1, 2]);
    let norm = (det(&u1) * det(&u2)).powf(-0.25);
    let (u1, u2) = (u1.scale(norm), u2.scale(norm));
    let phi = det(&u1).arg() / 2.0;
    let rot = C64::new(0.0, -phi).exp();
    let v1 = u1.scale(rot);
    let v2 = u2.scale(rot.inv());
    Ok(match form {
        KForm::Yxy => {
            let (a1, b1, c1) = euler_yxy(&v1);
            let (a2, b2, c2) = euler_yxy(&v2);
            KParts {
                phi,
                outer_first: y_rotation(a1, a2),
                middle: x_rotation(b1, b2),
                outer_last: y_rotation(c1, c2),
            }
        }
        KForm::Xyx => {
            let (a1, b1, c1) = euler_xyx(&v1);
            let (a2, b2, c2) = euler_xyx(&v2);
            KParts {
                phi,
                outer_first: x_rotation(a1, a2),
                middle: y_rotation(b1, b2),
                outer_last: x_rotation(c1, c2),
            }
        }
    })
}

struct Solvers {
    y: SubgroupSolver,
    x: SubgroupSolver,
}

impl Solvers {
    fn new() -> Self {
        Self {
            y: SubgroupSolver::y_group(),
            x: SubgroupSolver::x_group(),
        }
    }
}

fn k_product(solvers: &Solvers, k: &Matrix) -> Result<Vec<Step>> {
    let parts = k_parts(k, KForm::Yxy)?;
    let mut out = vec![Step::new(Generator::Bzz, parts.phi)];
    out.extend(solvers.y.solve(&parts.outer_first)?);
    out.extend(solvers.x.solve(&parts.middle)?);
    out.extend(solvers.y.solve(&parts.outer_last)?);
    Ok(out)
}

/// Plan for an element of the AIII `K` subgroup (unitary on `{1,4}` and `{2,3}`).
pub fn k_factor_plan(k: &Matrix) -> Result<SynthesisPlan> {
    let solvers = Solvers::new();
    let product = k_product(&solvers, k)?;
    Ok(SynthesisPlan::from_product(3, k, &product))
}

/// `(s, r)` with `a = exp(s·A_3)·exp(r·C_3)` up to global phase.
pub fn torus_coordinates(a: &Matrix) -> Result<(f64, f64)> {
    if a.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: 4,
        });
    }
    let lead = a
        .as_slice()
        .iter()
        .copied()
        .max_by(|x, y| x.norm().total_cmp(&y.norm()))
        .expect("nonempty");
    let a0 = a.scale(lead.conj() / lead.norm());
    let t0 = a0[(0, 2)].re.atan2(a0[(0, 0)].re);
    let t1 = a0[(3, 1)].re.atan2(a0[(3, 3)].re);
    let (s, r) = (t0 + t1, (t0 - t1) / 2.0);
    let (residual, _) = phase_aligned_distance(&torus_element(s, r), a);
    if residual > 1e-10 {
        return Err(Error::OutsideSubgroup { residual });
    }
    Ok((s, r))
}

/// `e^{B_x π/4} e^{B_y θ/2} e^{−B_x π/4}`, proportional to `R_z(θ)`.
fn r_z_steps(theta: f64) -> [Step; 3] {
    [
        Step::new(Generator::Bx, FRAC_PI_4),
        Step::new(Generator::By, theta / 2.0),
        Step::new(Generator::Bx, -FRAC_PI_4),
    ]
}

/// Plan for `exp(s·A_3)·exp(r·C_3)`, using `e^{r C_3} = k e^{2r A_3} k†` with
/// `k = e^{−B_zz π/4} R_z(−π/4)`.
pub fn torus_factor_plan(a: &Matrix) -> Result<SynthesisPlan> {
    let (s, r) = torus_coordinates(a)?;
    let solvers = Solvers::new();
    let mut product = solvers.y.solve(&mat_exp(&a3().scale_real(s)))?;
    if r.abs() > 1e-15 {
        product.push(Step::new(Generator::Bzz, -FRAC_PI_4));
        product.extend(r_z_steps(-FRAC_PI_4));
        product.extend(solvers.y.solve(&mat_exp(&a3().scale_real(2.0 * r)))?);
        product.extend(r_z_steps(FRAC_PI_4));
        product.push(Step::new(Generator::Bzz, FRAC_PI_4));
    }
    Ok(SynthesisPlan::from_product(3, a, &product))
}

/// Full three-spin synthesis of a 4×4 unitary on Dicke coordinates.
pub(crate) fn synthesize3(target: &Matrix) -> Result<SynthesisPlan> {
    let x0 = target.scale(det(target).powf(-0.25));
    let cartan = kak_aiii_su4(&x0)?;
    let (s, r) = (cartan.torus[0], cartan.torus[1]);
    let solvers = Solvers::new();
    let left = k_parts(&cartan.k1, KForm::Yxy)?;
    let sa3 = mat_exp(&a3().scale_real(s));
    let mut product = vec![Step::new(Generator::Bzz, left.phi)];
    product.extend(solvers.y.solve(&left.outer_first)?);
    product.extend(solvers.x.solve(&left.middle)?);
    if r.abs() > 1e-15 {
        product.extend(solvers.y.solve(&(&left.outer_last * &sa3))?);
        product.push(Step::new(Generator::Bzz, -FRAC_PI_4));
        let rz = r_z_steps(-FRAC_PI_4);
        product.extend(&rz[..2]);
        // Remaining `R_z(π/4) e^{B_zz π/4}` lies in K and is absorbed into the right factor.
        let k2 = &(&r_z(FRAC_PI_4) * &bzz(FRAC_PI_4)) * &cartan.k2;
        let right = k_parts(&k2, KForm::Xyx)?;
        let head = &(&mat_exp(&Generator::Bx.matrix().scale_real(-FRAC_PI_4))
            * &mat_exp(&a3().scale_real(2.0 * r)))
            * &right.outer_first;
        product.extend(solvers.x.solve(&head)?);
        product.extend(solvers.y.solve(&right.middle)?);
        product.extend(solvers.x.solve(&right.outer_last)?);
        product.push(Step::new(Generator::Bzz, right.phi));
    } else {
        let right = k_parts(&cartan.k2, KForm::Yxy)?;
        let joint = &(&left.outer_last * &sa3) * &right.outer_first;
        product.extend(solvers.y.solve(&joint)?);
        product.extend(solvers.x.solve(&right.middle)?);
        product.extend(solvers.y.solve(&right.outer_last)?);
        product.push(Step::new(Generator::Bzz, right.phi));
    }
    Ok(SynthesisPlan::from_product(3, target, &product))
}
