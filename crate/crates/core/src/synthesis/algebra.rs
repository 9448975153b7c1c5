//! Fixed generator matrices on the permutation-invariant block.

use crate::coords::{basis_m, basis_t, basis_t_hat, conjugate, conjugated_generators};
use crate::error::Result;
use crate::tensor::mat_exp;
use crate::{Matrix, C64};

const S3: f64 = 1.732_050_807_568_877_2;

fn imag(dim: usize, entries: &[f64]) -> Matrix {
    Matrix::from_real(dim, entries).scale(C64::new(0.0, 1.0))
}

fn half(m: Matrix) -> Matrix {
    m.scale_real(0.5)
}

/// `B_x`: the symmetric block of `M(iH_x)M†`.
pub fn b_x() -> Matrix {
    #[rustfmt::skip]
    let m = imag(4, &[
        0.0, S3,  0.0, 0.0,
        S3,  0.0, 2.0, 0.0,
        0.0, 2.0, 0.0, S3,
        0.0, 0.0, S3,  0.0,
    ]);
    m
}

/// `B_y`: the symmetric block of `M(−iH_y)M†`.
pub fn b_y() -> Matrix {
    #[rustfmt::skip]
    let m = Matrix::from_real(4, &[
        0.0, S3,   0.0, 0.0,
        -S3, 0.0,  2.0, 0.0,
        0.0, -2.0, 0.0, S3,
        0.0, 0.0,  -S3, 0.0,
    ]);
    m
}

/// The symmetric block of `M(−iH_zz)M†`, before rescaling.
pub fn b_zz_tilde() -> Matrix {
    Matrix::from_diagonal(&[-3.0, 1.0, 1.0, -3.0].map(|x| C64::new(0.0, x)))
}

/// `B_zz = diag(i, −i, −i, i)`.
pub fn b_zz() -> Matrix {
    Matrix::from_diagonal(&[1.0, -1.0, -1.0, 1.0].map(|x| C64::new(0.0, x)))
}

/// `e^{B_zz π/2} g e^{−B_zz π/2}`.
pub fn hat(g: &Matrix) -> Matrix {
    let w = mat_exp(&b_zz().scale_real(std::f64::consts::FRAC_PI_2));
    conjugate(&w, g).expect("4x4")
}

pub fn b_hat_x() -> Matrix {
    hat(&b_x())
}

pub fn b_hat_y() -> Matrix {
    hat(&b_y())
}

/// Printed value of `B̂_y`.
pub fn printed_b_hat_y() -> Matrix {
    #[rustfmt::skip]
    let m = Matrix::from_real(4, &[
        0.0, -S3,  0.0, 0.0,
        S3,  0.0,  2.0, 0.0,
        0.0, -2.0, 0.0, -S3,
        0.0, 0.0,  S3,  0.0,
    ]);
    m
}

/// Printed value of `B̂_x`.
pub fn printed_b_hat_x() -> Matrix {
    #[rustfmt::skip]
    let m = imag(4, &[
        0.0, -S3, 0.0, 0.0,
        -S3, 0.0, 2.0, 0.0,
        0.0, 2.0, 0.0, -S3,
        0.0, 0.0, -S3, 0.0,
    ]);
    m
}

pub fn a1() -> Matrix {
    half(Matrix::from_real(
        4,
        &[
            0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0,
        ],
    ))
}

pub fn a2() -> Matrix {
    half(Matrix::from_real(
        4,
        &[
            0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0,
        ],
    ))
}

pub fn a3() -> Matrix {
    half(Matrix::from_real(
        4,
        &[
            0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
        ],
    ))
}

pub fn e() -> Matrix {
    half(Matrix::from_real(
        4,
        &[
            0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0,
        ],
    ))
}

pub fn b1() -> Matrix {
    a1()
}

pub fn b2() -> Matrix {
    half(imag(
        4,
        &[
            0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0,
        ],
    ))
}

pub fn b3() -> Matrix {
    half(imag(
        4,
        &[
            0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0,
        ],
    ))
}

pub fn f() -> Matrix {
    half(imag(
        4,
        &[
            0.0, 0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0,
        ],
    ))
}

/// The torus generator `C_3` as printed (no 1/2 prefactor).
pub fn c3() -> Matrix {
    Matrix::from_real(
        4,
        &[
            0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0,
        ],
    )
}

/// `Z_1 = diag(2i, −2i)`.
pub fn z1() -> Matrix {
    Matrix::from_diagonal(&[C64::new(0.0, 2.0), C64::new(0.0, -2.0)])
}

/// `Z_2 = [[−i, √3], [−√3, i]]`.
pub fn z2() -> Matrix {
    Matrix::from_pairs(2, &[(0.0, -1.0), (S3, 0.0), (-S3, 0.0), (0.0, 1.0)])
}

/// Collective rotation about z on the four Dicke states, `diag(e^{−i m θ})`, `m = 3/2 … −3/2`.
pub fn r_z(theta: f64) -> Matrix {
    Matrix::from_diagonal(&[1.5, 0.5, -0.5, -1.5].map(|m| C64::new(0.0, -m * theta).exp()))
}

/// Symmetric 3×3 blocks of `T(−iH_x)T†`, `T(−iH_y)T†`, `T(−iH_zz)T†`.
pub fn two_spin_generators() -> [Matrix; 3] {
    let [x, y, zz] = conjugated_generators(&basis_t()).expect("two spins");
    let idx = [1, 2, 3];
    [x.submatrix(&idx), y.submatrix(&idx), zz.submatrix(&idx)]
}

/// Lower 3×3 block of `T̂`.
pub fn t_hat_block() -> Matrix {
    basis_t_hat().submatrix(&[1, 2, 3])
}

/// `B_x`, `B_y`, `B̃_zz` recomputed from the Hamiltonians: the symmetric blocks of
/// `M(iH_x)M†`, `M(−iH_y)M†`, `M(−iH_zz)M†`.
pub fn three_spin_generators_from_model() -> Result<[Matrix; 3]> {
    let [x, y, zz] = conjugated_generators(&basis_m())?;
    let idx = [4, 5, 6, 7];
    Ok([
        x.submatrix(&idx).scale_real(-1.0),
        y.submatrix(&idx),
        zz.submatrix(&idx),
    ])
}
