//! Cartan decompositions `x = k1 · a · k2` of SU(3) (K = SO(3)) and SU(4) (type AIII).

use std::f64::consts::FRAC_1_SQRT_2;

use serde::Serialize;

use super::algebra::{a3, c3};
use super::lm::unit;
use super::su2::check_special_unitary;
use crate::error::{Error, Result};
use crate::tensor::{det, hermitian_eig, mat_exp};
use crate::{Matrix, C64};

/// Index order that turns the `{1,4}`/`{2,3}` blocks into contiguous 2×2 blocks.
pub const AIII_ORDER: [usize; 4] = [0, 3, 1, 2];

/// `x = k1 · a · k2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CartanFactors {
    pub k1: Matrix,
    pub a: Matrix,
    pub k2: Matrix,
    /// SU(3): the torus phases `θ` with `a = diag(e^{iθ})`. SU(4): `[s, r]` with
    /// `a = exp(s·A_3)·exp(r·C_3)`.
    pub torus: Vec<f64>,
}

impl CartanFactors {
    pub fn reconstruct(&self) -> Matrix {
        &(&self.k1 * &self.a) * &self.k2
    }
}

/// Diagonalizes `Re S + c·Im S` for the symmetric unitary `S = x xᵀ`.
fn real_orthogonal_diagonalizer(s: &Matrix) -> Option<Matrix> {
    let n = s.dim();
    for c in [0.577_215_664_901_532_9, 1.41, -2.7, 0.31] {
        let m = Matrix::from_fn(n, |i, j| C64::new(s[(i, j)].re + c * s[(i, j)].im, 0.0));
        let eig = hermitian_eig(&m).ok()?;
        let q = eig.vectors.map(|z| C64::new(z.re, 0.0));
        let d = &(&q.transpose() * s) * &q;
        let off = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| d[(i, j)].norm())
            .fold(0.0, f64::max);
        if off < 1e-11 {
            return Some(q);
        }
    }
    None
}

/// KAK decomposition of `x ∈ SU(3)` with `k1, k2 ∈ SO(3)` and `a = exp(i·diag(θ))`, `Σθ = 0`.
pub fn kak_su3(x: &Matrix) -> Result<CartanFactors> {
    check_special_unitary(x, 3)?;
    let s = x * &x.transpose();
    let mut q = real_orthogonal_diagonalizer(&s)
        .ok_or_else(|| Error::NoConvergence("real diagonalization of x·xᵀ".into()))?;
    if det(&q).re < 0.0 {
        for i in 0..3 {
            q[(i, 0)] = -q[(i, 0)];
        }
    }
    let d = &(&q.transpose() * &s) * &q;
    let mut theta: Vec<f64> = (0..3).map(|i| d[(i, i)].arg() / 2.0).collect();
    // Σθ ≡ 0 (mod π); shifting one θ by π flips the sign of that torus entry.
    let total: f64 = theta.iter().sum();
    let shift = (total / std::f64::consts::PI).round();
    theta[0] -= shift * std::f64::consts::PI;
    let a = Matrix::from_diagonal(
        &theta
            .iter()
            .map(|&t| C64::new(0.0, t).exp())
            .collect::<Vec<_>>(),
    );
    let a_inv = a.adjoint();
    let k2 = (&(&a_inv * &q.transpose()) * x).map(|z| C64::new(z.re, 0.0));
    Ok(CartanFactors {
        k1: q,
        a,
        k2,
        torus: theta,
    })
}

fn col(m: &Matrix, j: usize) -> [C64; 2] {
    [m[(0, j)], m[(1, j)]]
}

fn apply(m: &Matrix, v: [C64; 2]) -> [C64; 2] {
    [
        m[(0, 0)] * v[0] + m[(0, 1)] * v[1],
        m[(1, 0)] * v[0] + m[(1, 1)] * v[1],
    ]
}

fn norm(v: [C64; 2]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

fn scale(v: [C64; 2], s: C64) -> [C64; 2] {
    [v[0] * s, v[1] * s]
}

fn inner(u: [C64; 2], v: [C64; 2]) -> C64 {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

/// Unit vector orthogonal to `u`, phased so that its overlap with `target` is real and ≥ 0.
fn complement(u: [C64; 2], target: [C64; 2]) -> [C64; 2] {
    let w = [-u[1].conj(), u[0].conj()];
    let ov = inner(w, target);
    scale(w, unit(ov))
}

fn from_cols(a: [C64; 2], b: [C64; 2]) -> Matrix {
    Matrix::from_fn(2, |i, j| if j == 0 { a[i] } else { b[i] })
}

/// Cosine–sine decomposition `x = (u1 ⊕ u2) · [[C, S], [−S, C]] · (v1 ⊕ v2)` of a 4×4 unitary
/// given in 2+2 block form, assuming `max cos ≥ 1/√2`.
fn csd_core(x: &Matrix) -> (Matrix, Matrix, [f64; 2], Matrix, Matrix) {
    let x11 = x.submatrix(&[0, 1]);
    let x12 = Matrix::from_fn(2, |i, j| x[(i, j + 2)]);
    let x21 = Matrix::from_fn(2, |i, j| x[(i + 2, j)]);
    let x22 = Matrix::from_fn(2, |i, j| x[(i + 2, j + 2)]);
    let eig = hermitian_eig(&(&x11.adjoint() * &x11)).expect("Hermitian");
    // Descending cosines.
    let w = [col(&eig.vectors, 1), col(&eig.vectors, 0)];
    let a = [apply(&x11, w[0]), apply(&x11, w[1])];
    let b = [
        scale(apply(&x21, w[0]), C64::new(-1.0, 0.0)),
        scale(apply(&x21, w[1]), C64::new(-1.0, 0.0)),
    ];
    let u1_0 = scale(a[0], C64::new(1.0 / norm(a[0]), 0.0));
    let u1_1 = complement(u1_0, a[1]);
    let k = if norm(b[1]) >= norm(b[0]) { 1 } else { 0 };
    let (u2_0, u2_1) = if norm(b[k]) < 1e-300 {
        (
            [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
        )
    } else {
        let main = scale(b[k], C64::new(1.0 / norm(b[k]), 0.0));
        let other = complement(main, b[1 - k]);
        if k == 1 {
            (other, main)
        } else {
            (main, other)
        }
    };
    let u1 = from_cols(u1_0, u1_1);
    let u2 = from_cols(u2_0, u2_1);
    let cs = [inner(u1_0, a[0]).re, inner(u1_1, a[1]).re];
    let sn = [inner(u2_0, b[0]).re, inner(u2_1, b[1]).re];
    let v1 = Matrix::from_fn(2, |i, j| w[i][j].conj());
    // Rows of v2 from whichever of x22 = u2 C v2, x12 = u1 S v2 is better conditioned.
    let mut v2 = Matrix::zeros(2);
    for i in 0..2 {
        let row: Vec<C64> = if cs[i] >= sn[i] {
            let u = if i == 0 { u2_0 } else { u2_1 };
            (0..2)
                .map(|j| (u[0].conj() * x22[(0, j)] + u[1].conj() * x22[(1, j)]) / cs[i])
                .collect()
        } else {
            let u = if i == 0 { u1_0 } else { u1_1 };
            (0..2)
                .map(|j| (u[0].conj() * x12[(0, j)] + u[1].conj() * x12[(1, j)]) / sn[i])
                .collect()
        };
        v2[(i, 0)] = row[0];
        v2[(i, 1)] = row[1];
    }
    let theta = [sn[0].atan2(cs[0]), sn[1].atan2(cs[1])];
    (u1, u2, theta, v1, v2)
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(4);
    m.set_submatrix(&[0, 1], a);
    m.set_submatrix(&[2, 3], b);
    m
}

/// Maps a matrix in `AIII_ORDER` coordinates back to the original index order.
fn unpermute(m: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(4);
    for i in 0..4 {
        for j in 0..4 {
            out[(AIII_ORDER[i], AIII_ORDER[j])] = m[(i, j)];
        }
    }
    out
}

/// `exp(s·A_3)·exp(r·C_3)`.
pub fn torus_element(s: f64, r: f64) -> Matrix {
    &mat_exp(&a3().scale_real(s)) * &mat_exp(&c3().scale_real(r))
}

/// Off-block residual of a matrix relative to the `{1,4}`/`{2,3}` block structure.
pub fn aiii_off_block(k: &Matrix) -> f64 {
    let (p, q) = ([0, 3], [1, 2]);
    p.iter()
        .flat_map(|&i| q.iter().map(move |&j| (i, j)))
        .map(|(i, j)| k[(i, j)].norm().max(k[(j, i)].norm()))
        .fold(0.0, f64::max)
}

/// Type AIII decomposition of `x ∈ SU(4)`: `k1`, `k2` unitary on rows/columns `{1,4}` and `{2,3}`
/// with unit determinant, `a = exp(s·A_3)·exp(r·C_3)`, angles `(s ± 2r)/2 ∈ [0, π/2]`.
pub fn kak_aiii_su4(x: &Matrix) -> Result<CartanFactors> {
    check_special_unitary(x, 4)?;
    let xp = x.permute(&AIII_ORDER);
    let c_max = {
        let x11 = xp.submatrix(&[0, 1]);
        let eig = hermitian_eig(&(&x11.adjoint() * &x11)).expect("Hermitian");
        eig.values[1].max(0.0).sqrt()
    };
    let (u1, u2, theta, v1, v2) = if c_max >= FRAC_1_SQRT_2 {
        csd_core(&xp)
    } else {
        // y = (I ⊕ −I) x [[0, I], [I, 0]] has the roles of cosines and sines exchanged.
        let y = Matrix::from_fn(4, |i, j| {
            let v = xp[(i, (j + 2) % 4)];
            if i >= 2 {
                -v
            } else {
                v
            }
        });
        let (u1, u2, th, w1, w2) = csd_core(&y);
        let swapped = [
            std::f64::consts::FRAC_PI_2 - th[0],
            std::f64::consts::FRAC_PI_2 - th[1],
        ];
        (u1, u2, swapped, w2, w1)
    };
    // cs(θ) = (I ⊕ J) · torus · (I ⊕ J) with J the 2×2 swap.
    let j = Matrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]);
    let mut k1p = block_diag(&u1, &(&u2 * &j));
    let mut k2p = block_diag(&v1, &(&j * &v2));
    let fix = unit(det(&k1p)).powf(-0.25);
    k1p = k1p.scale(fix);
    k2p = k2p.scale(fix.inv());
    let s = theta[0] + theta[1];
    let r = (theta[0] - theta[1]) / 2.0;
    let a = torus_element(s, r);
    Ok(CartanFactors {
        k1: unpermute(&k1p),
        a,
        k2: unpermute(&k2p),
        torus: vec![s, r],
    })
}
