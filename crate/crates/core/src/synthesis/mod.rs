//! Pulse-sequence synthesis on the permutation-invariant block for two and three spins.

pub mod algebra;
mod group;
mod kak;
mod lm;
mod n2;
mod n3;
mod plan;
mod su2;

pub use group::{SubgroupSolver, MEMBERSHIP_TOL, SUBGROUP_TOL};
pub use kak::{aiii_off_block, kak_aiii_su4, kak_su3, torus_element, CartanFactors, AIII_ORDER};
pub use n3::{
    k_factor_plan, torus_coordinates, torus_factor_plan, x_rotation, y_rotation, K_BLOCK_TOL,
};
pub use plan::{
    expand_hats, replay_steps, simplify, Generator, Step, SynthesisPlan, ZERO_DURATION,
};
pub use su2::{euler_xyx, euler_yxy, su2_two_axis, two_axis_product, Axis, TWO_AXIS_TOL};

use crate::error::{Error, Result};
use crate::spin::SpinState;
use crate::{Matrix, C64};

/// Tolerance on the weight of a state outside the symmetric subspace.
pub const SYMMETRIC_WEIGHT_TOL: f64 = 1e-10;

/// Plan whose ideal replay equals `target` (a unitary on `φ_0 … φ_n`) up to global phase.
pub fn synthesize(n: usize, target: &Matrix) -> Result<SynthesisPlan> {
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedSpinCount(n));
    }
    if target.dim() != n + 1 {
        return Err(Error::DimensionMismatch {
            left: target.dim(),
            right: n + 1,
        });
    }
    if !target.is_finite() {
        return Err(Error::NotUnitary {
            residual: f64::INFINITY,
        });
    }
    let residual = target.unitary_residual();
    if residual > 1e-10 {
        return Err(Error::NotUnitary { residual });
    }
    if crate::tensor::phase_aligned_distance(&Matrix::identity(n + 1), target).0 <= 1e-14 {
        return Ok(SynthesisPlan::from_steps(n, target, Vec::new(), 0));
    }
    if n == 2 {
        n2::synthesize2(target)
    } else {
        n3::synthesize3(target)
    }
}

/// Special unitary rotating `source` onto `dest` within the plane they span (up to phase).
pub fn transfer_unitary(source: &[C64], dest: &[C64]) -> Matrix {
    let dim = source.len();
    let overlap: C64 = source.iter().zip(dest).map(|(a, b)| a.conj() * b).sum();
    let d: Vec<C64> = if overlap.norm() > 0.0 {
        let ph = overlap.conj() / overlap.norm();
        dest.iter().map(|&z| z * ph).collect()
    } else {
        dest.to_vec()
    };
    let c = overlap.norm().min(1.0);
    let mut w: Vec<C64> = d.iter().zip(source).map(|(&y, &x)| y - x * c).collect();
    let sin = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if sin < 1e-15 {
        return Matrix::identity(dim);
    }
    for z in w.iter_mut() {
        *z /= sin;
    }
    let mut u = Matrix::identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            let plane = source[i] * source[j].conj() + w[i] * w[j].conj();
            let turn = w[i] * source[j].conj() - source[i] * w[j].conj();
            u[(i, j)] += plane * (c - 1.0) + turn * sin;
        }
    }
    u
}

/// Plan preparing `dest` from `source`; both must lie in the symmetric subspace.
pub fn state_transfer_plan(
    n: usize,
    source: &SpinState,
    dest: &SpinState,
) -> Result<SynthesisPlan> {
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedSpinCount(n));
    }
    for s in [source, dest] {
        if s.n() != n {
            return Err(Error::DimensionMismatch {
                left: 1 << s.n(),
                right: 1 << n,
            });
        }
        let weight = s.asymmetric_weight();
        if weight > SYMMETRIC_WEIGHT_TOL {
            return Err(Error::NotPermutationInvariant { weight });
        }
    }
    let u = transfer_unitary(&source.dicke_coordinates(), &dest.dicke_coordinates());
    synthesize(n, &u)
}
