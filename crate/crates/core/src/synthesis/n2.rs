//! Two spins: SO(3) Euler angles and a diagonal torus built from `Â_zz` and `Â_y`.

use std::f64::consts::FRAC_PI_4;

use super::algebra::t_hat_block;
use super::kak::kak_su3;
use super::plan::{Generator, Step, SynthesisPlan};
use crate::error::Result;
use crate::tensor::det;
use crate::Matrix;

/// Angles with `k = e^{Â_y a} e^{Â_x b} e^{Â_y c}` for `k ∈ SO(3)` in `T̂` coordinates, where
/// `e^{Â_y t}` rotates the (1,2) plane and `e^{Â_x t}` the (0,1) plane by `2t`.
fn euler_so3(k: &Matrix) -> (f64, f64, f64) {
    let r = |i: usize, j: usize| k[(i, j)].re;
    let beta = r(0, 0).clamp(-1.0, 1.0).acos();
    let alpha = if beta.sin() > 1e-12 {
        r(2, 0).atan2(r(1, 0))
    } else {
        0.0
    };
    // Remainder R_01(−β) R_12(−α) k is a rotation of the (1,2) plane.
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let (cb, sb) = (beta.cos(), beta.sin());
    let m1 = |j: usize| ca * r(1, j) + sa * r(2, j);
    let m2 = |j: usize| -sa * r(1, j) + ca * r(2, j);
    let rem11 = -sb * r(0, 1) + cb * m1(1);
    let rem21 = m2(1);
    let gamma = rem21.atan2(rem11);
    (alpha / 2.0, beta / 2.0, gamma / 2.0)
}

fn k_steps(k: &Matrix) -> [Step; 3] {
    let (a, b, c) = euler_so3(k);
    [
        Step::new(Generator::Ay, a),
        Step::new(Generator::Ax, b),
        Step::new(Generator::Ay, c),
    ]
}

/// Full two-spin synthesis of a 3×3 unitary on Dicke coordinates.
pub(crate) fn synthesize2(target: &Matrix) -> Result<SynthesisPlan> {
    let th = t_hat_block();
    let x = &(&th * target) * &th.adjoint();
    let x0 = x.scale(det(&x).powf(-1.0 / 3.0));
    let cartan = kak_su3(&x0)?;
    let theta = &cartan.torus;
    let t1 = (theta[1] - theta[0]) / 2.0;
    let t2 = (theta[2] - theta[0]) / 2.0;
    let mut product = Vec::with_capacity(10);
    product.extend(k_steps(&cartan.k1));
    product.extend([
        Step::new(Generator::Azz, t1),
        Step::new(Generator::Ay, FRAC_PI_4),
        Step::new(Generator::Azz, t2),
        Step::new(Generator::Ay, -FRAC_PI_4),
    ]);
    product.extend(k_steps(&cartan.k2));
    Ok(SynthesisPlan::from_product(2, target, &product))
}
