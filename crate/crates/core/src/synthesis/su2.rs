//! Factorizations on SU(2): two-axis sequences of `e^{Z_1 t}`, `e^{Z_2 t}` and Pauli Euler angles.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::algebra::{z1, z2};
use super::lm;
use crate::error::{Error, Result};
use crate::tensor::{det, mat_exp, phase_aligned_distance, SkewSpectrum};
use crate::{Matrix, C64};

/// Accuracy required of every returned two-axis sequence.
pub const TWO_AXIS_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    Z1,
    Z2,
}

impl Axis {
    pub fn matrix(self) -> Matrix {
        match self {
            Axis::Z1 => z1(),
            Axis::Z2 => z2(),
        }
    }
}

/// `∏ e^{Z_k t_k}` with the first listed factor leftmost.
pub fn two_axis_product(factors: &[(Axis, f64)]) -> Matrix {
    factors.iter().fold(Matrix::identity(2), |acc, &(axis, t)| {
        &acc * &mat_exp(&axis.matrix().scale_real(t))
    })
}

pub(crate) fn check_special_unitary(x: &Matrix, dim: usize) -> Result<()> {
    if x.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: dim,
        });
    }
    let residual = x.unitary_residual();
    if residual > 1e-10 {
        return Err(Error::NotUnitary { residual });
    }
    let deviation = (det(x) - C64::new(1.0, 0.0)).norm();
    if deviation > 1e-10 {
        return Err(Error::NotSpecialUnitary { deviation });
    }
    Ok(())
}

fn normalize(factors: Vec<(Axis, f64)>) -> Vec<(Axis, f64)> {
    let mut out: Vec<(Axis, f64)> = Vec::new();
    for (axis, t) in factors {
        let mut t = t.rem_euclid(PI);
        if let Some(&(last, lt)) = out.last() {
            if last == axis {
                out.pop();
                t = (t + lt).rem_euclid(PI);
            }
        }
        if t > 1e-14 && PI - t > 1e-14 {
            out.push((axis, t));
        }
    }
    out
}

/// `x = e^{Z_1 a} e^{Z_2 b} e^{Z_1 c}` when `|x_00| ≥ 1/2`.
fn closed_form(x: &Matrix) -> Option<Vec<(Axis, f64)>> {
    let (x00, x01) = (x[(0, 0)], x[(0, 1)]);
    let n00 = x00.norm();
    if n00 < 0.5 - 1e-13 {
        return None;
    }
    let sin_b = (2.0 * x01.norm() / 3f64.sqrt()).min(1.0);
    let beta0 = sin_b.asin();
    let q = if x01.norm() > 0.0 { x01.arg() } else { 0.0 };
    let mut best: Option<(Vec<(Axis, f64)>, f64)> = None;
    for beta in [beta0, PI - beta0] {
        let m00 = C64::new(beta.cos(), -0.5 * beta.sin());
        let p = x00.arg() - m00.arg();
        let (alpha, gamma) = ((p + q) / 2.0, (p - q) / 2.0);
        let factors = normalize(vec![
            (Axis::Z1, alpha / 2.0),
            (Axis::Z2, beta / 2.0),
            (Axis::Z1, gamma / 2.0),
        ]);
        let err = (&two_axis_product(&factors) - x).max_abs();
        if err > TWO_AXIS_TOL {
            continue;
        }
        let score = factors.len() as f64 * 10.0 + factors.iter().map(|f| f.1).sum::<f64>();
        if best.as_ref().is_none_or(|(_, s)| score < *s) {
            best = Some((factors, score));
        }
    }
    best.map(|(f, _)| f)
}

/// A `Z_2` prefix bringing the remainder into the closed-form region.
fn prefixed(x: &Matrix) -> Option<Vec<(Axis, f64)>> {
    let z2_spectrum = SkewSpectrum::new(&z2()).expect("skew");
    let remainder = |p: f64| &z2_spectrum.exp(-p) * x;
    let samples = 720;
    let best = (0..samples)
        .map(|i| PI * i as f64 / samples as f64)
        .max_by(|&a, &b| {
            remainder(a)[(0, 0)]
                .norm()
                .total_cmp(&remainder(b)[(0, 0)].norm())
        })?;
    let (mut lo, mut hi) = (best - PI / samples as f64, best + PI / samples as f64);
    let gr = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..60 {
        let m1 = hi - gr * (hi - lo);
        let m2 = lo + gr * (hi - lo);
        if remainder(m1)[(0, 0)].norm() < remainder(m2)[(0, 0)].norm() {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let p = 0.5 * (lo + hi);
    let tail = closed_form(&remainder(p))?;
    let mut factors = vec![(Axis::Z2, p)];
    factors.extend(tail);
    let factors = normalize(factors);
    ((&two_axis_product(&factors) - x).max_abs() <= TWO_AXIS_TOL).then_some(factors)
}

/// Damped Gauss–Newton over 5 and 6 alternating factors.
fn newton(x: &Matrix) -> Option<Vec<(Axis, f64)>> {
    let gens = [z1(), z2()];
    let spectra = [
        SkewSpectrum::new(&gens[0]).expect("skew"),
        SkewSpectrum::new(&gens[1]).expect("skew"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2a11);
    for k in [5, 6] {
        let Some(found) = lm::search(&spectra, &gens, x, k, 40, 1e-13, &mut rng) else {
            continue;
        };
        let mut factors: Vec<(Axis, f64)> = found
            .gens
            .iter()
            .zip(&found.times)
            .map(|(&g, &t)| (if g == 0 { Axis::Z1 } else { Axis::Z2 }, t))
            .collect();
        // The solve is up to sign; e^{Z_1 π/2} = −I fixes it.
        if (&two_axis_product(&factors) - x).max_abs() > TWO_AXIS_TOL {
            factors.insert(0, (Axis::Z1, PI / 2.0));
        }
        let factors = normalize(factors);
        if (&two_axis_product(&factors) - x).max_abs() <= TWO_AXIS_TOL {
            return Some(factors);
        }
    }
    None
}

/// Factorizes `x ∈ SU(2)` into at most six alternating exponentials of `Z_1` and `Z_2`
/// with durations in `[0, π)`. The first listed factor is leftmost in the product.
pub fn su2_two_axis(x: &Matrix) -> Result<Vec<(Axis, f64)>> {
    check_special_unitary(x, 2)?;
    if (x - &Matrix::identity(2)).max_abs() <= 1e-14 {
        return Ok(Vec::new());
    }
    closed_form(x)
        .or_else(|| prefixed(x))
        .or_else(|| newton(x))
        .ok_or_else(|| {
            let (err, _) = phase_aligned_distance(&Matrix::identity(2), x);
            Error::NoConvergence(format!(
                "two-axis factorization (distance from identity {err:e})"
            ))
        })
}

/// Angles with `v' = e^{iσ_z a} e^{iσ_y b} e^{iσ_z c}`, σ_y = `[[0,−i],[i,0]]`.
fn zyz(v: &Matrix) -> (f64, f64, f64) {
    let (v00, v01) = (v[(0, 0)], v[(0, 1)]);
    let b = v01.norm().atan2(v00.norm());
    // On the degenerate lines only a + c (or a − c) is fixed; all of it goes into `a`.
    if v01.norm() < 1e-15 {
        return (v00.arg(), b, 0.0);
    }
    if v00.norm() < 1e-15 {
        return (v01.arg(), b, 0.0);
    }
    let (p, q) = (v00.arg(), v01.arg());
    ((p + q) / 2.0, b, (p - q) / 2.0)
}

fn frame(entries: [(f64, f64); 4]) -> Matrix {
    Matrix::from_pairs(2, &entries).scale_real(FRAC_1_SQRT_2)
}

/// Angles with `v = e^{iσ_y a} e^{iσ_x b} e^{iσ_y c}` for `v ∈ SU(2)`.
pub fn euler_yxy(v: &Matrix) -> (f64, f64, f64) {
    let u = frame([(1.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]);
    zyz(&(&(&u.adjoint() * v) * &u))
}

/// Angles with `v = e^{iσ_x a} e^{iσ_y b} e^{iσ_x c}` for `v ∈ SU(2)`.
pub fn euler_xyx(v: &Matrix) -> (f64, f64, f64) {
    let u = frame([(1.0, 0.0), (-1.0, 0.0), (1.0, 0.0), (1.0, 0.0)]);
    zyz(&(&(&u.adjoint() * v) * &u))
}
