//! Reference matrices as they are displayed in the source derivation, and a comparator
//! that reports every entry where the computed value departs from them.

use serde::{Deserialize, Serialize};

use super::basis::{basis_m, basis_t, basis_t_hat, conjugate, conjugated_generators};
use crate::error::Result;
use crate::spin::transposition;
use crate::{Matrix, C64};

fn imag(dim: usize, entries: &[f64]) -> Matrix {
    Matrix::from_real(dim, entries).scale(C64::new(0.0, 1.0))
}

/// Printed `T(−iH_x)T†`.
pub fn printed_a_x() -> Matrix {
    let r = std::f64::consts::SQRT_2;
    #[rustfmt::skip]
    let m = imag(4, &[
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, -r,  0.0,
        0.0, -r,  0.0, -r,
        0.0, 0.0, -r,  0.0,
    ]);
    m
}

/// Printed `T(−iH_y)T†`.
pub fn printed_a_y() -> Matrix {
    let r = std::f64::consts::SQRT_2;
    #[rustfmt::skip]
    let m = Matrix::from_real(4, &[
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, r,   0.0,
        0.0, -r,  0.0, r,
        0.0, 0.0, -r,  0.0,
    ]);
    m
}

/// Printed `T(−iH_zz)T†`, also the printed hatted version.
pub fn printed_a_zz() -> Matrix {
    imag(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0,
        ],
    )
}

/// Printed `T̂ A_x T̂†`.
pub fn printed_hat_a_x() -> Matrix {
    #[rustfmt::skip]
    let m = Matrix::from_real(4, &[
        0.0, 0.0,  0.0, 0.0,
        0.0, 0.0, -2.0, 0.0,
        0.0, 2.0,  0.0, 0.0,
        0.0, 0.0,  0.0, 0.0,
    ]);
    m
}

/// Printed `T̂ A_y T̂†`.
pub fn printed_hat_a_y() -> Matrix {
    #[rustfmt::skip]
    let m = Matrix::from_real(4, &[
        0.0, 0.0, 0.0,  0.0,
        0.0, 0.0, 0.0,  0.0,
        0.0, 0.0, 0.0, -2.0,
        0.0, 0.0, 2.0,  0.0,
    ]);
    m
}

fn three_spin_pattern(upper: [f64; 2], lower: [[f64; 4]; 4]) -> Vec<f64> {
    let mut m = vec![0.0; 64];
    for blk in 0..2 {
        let o = 2 * blk;
        m[o * 8 + o + 1] = upper[0];
        m[(o + 1) * 8 + o] = upper[1];
    }
    for i in 0..4 {
        for j in 0..4 {
            m[(i + 4) * 8 + j + 4] = lower[i][j];
        }
    }
    m
}

/// Printed `M(−iH_x)M†`.
pub fn printed_m_hx() -> Matrix {
    let s = 3f64.sqrt();
    let lower = [
        [0.0, s, 0.0, 0.0],
        [s, 0.0, 2.0, 0.0],
        [0.0, 2.0, 0.0, s],
        [0.0, 0.0, s, 0.0],
    ];
    Matrix::from_real(8, &three_spin_pattern([1.0, 1.0], lower)).scale(C64::new(0.0, -1.0))
}

/// Printed `M(−iH_y)M†`.
pub fn printed_m_hy() -> Matrix {
    let s = 3f64.sqrt();
    let lower = [
        [0.0, s, 0.0, 0.0],
        [-s, 0.0, 2.0, 0.0],
        [0.0, -2.0, 0.0, s],
        [0.0, 0.0, -s, 0.0],
    ];
    Matrix::from_real(8, &three_spin_pattern([1.0, -1.0], lower))
}

/// Printed `M(−iH_zz)M†`.
pub fn printed_m_hzz() -> Matrix {
    let d = [-1.0, -1.0, -1.0, -1.0, 3.0, -1.0, -1.0, 3.0];
    Matrix::from_diagonal(&d.map(|x| C64::new(0.0, -x)))
}

/// Printed `M Π_23 M†`.
pub fn printed_m_pi23() -> Matrix {
    let h = 0.5;
    let k = -(3f64.sqrt()) / 2.0;
    #[rustfmt::skip]
    let m = Matrix::from_real(8, &[
        h,   0.0, k,   0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, h,   0.0, k,   0.0, 0.0, 0.0, 0.0,
        k,   0.0, h,   0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, k,   0.0, h,   0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0,
    ]);
    m
}

/// One entry where computed and printed values differ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDeviation {
    pub row: usize,
    pub col: usize,
    pub printed: [f64; 2],
    pub computed: [f64; 2],
}

/// Entrywise comparison of a computed matrix with its printed counterpart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixComparison {
    pub name: String,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub matches: bool,
    /// `true` when every deviating entry is a pure sign flip.
    pub sign_only: bool,
    pub deviations: Vec<EntryDeviation>,
    pub computed: Matrix,
}

/// Compares `computed` against `printed`, listing every entry off by more than `tol`.
pub fn compare_printed(
    name: &str,
    printed: &Matrix,
    computed: &Matrix,
    tol: f64,
) -> MatrixComparison {
    let mut deviations = Vec::new();
    let mut max_deviation = 0.0f64;
    let mut sign_only = true;
    for i in 0..printed.dim() {
        for j in 0..printed.dim() {
            let (p, c) = (printed[(i, j)], computed[(i, j)]);
            let d = (p - c).norm();
            max_deviation = max_deviation.max(d);
            if d > tol {
                sign_only &= (p + c).norm() <= tol;
                deviations.push(EntryDeviation {
                    row: i,
                    col: j,
                    printed: [p.re, p.im],
                    computed: [c.re, c.im],
                });
            }
        }
    }
    MatrixComparison {
        name: name.to_string(),
        tolerance: tol,
        max_deviation,
        matches: deviations.is_empty(),
        sign_only: sign_only && !deviations.is_empty(),
        deviations,
        computed: computed.clone(),
    }
}

/// Tolerance used for all printed-matrix comparisons.
pub const PRINTED_TOL: f64 = 1e-12;

/// Comparisons for the two-spin coordinate displays.
pub fn two_spin_comparisons() -> Result<Vec<MatrixComparison>> {
    let [ax, ay, azz] = conjugated_generators(&basis_t())?;
    let th = basis_t_hat();
    Ok(vec![
        compare_printed("A_x", &printed_a_x(), &ax, PRINTED_TOL),
        compare_printed("A_y", &printed_a_y(), &ay, PRINTED_TOL),
        compare_printed("A_zz", &printed_a_zz(), &azz, PRINTED_TOL),
        compare_printed(
            "hat A_x",
            &printed_hat_a_x(),
            &conjugate(&th, &ax)?,
            PRINTED_TOL,
        ),
        compare_printed(
            "hat A_y",
            &printed_hat_a_y(),
            &conjugate(&th, &ay)?,
            PRINTED_TOL,
        ),
        compare_printed(
            "hat A_zz",
            &printed_a_zz(),
            &conjugate(&th, &azz)?,
            PRINTED_TOL,
        ),
    ])
}

/// Comparisons for the three-spin coordinate displays.
pub fn three_spin_comparisons() -> Result<Vec<MatrixComparison>> {
    let m = basis_m();
    let [hx, hy, hzz] = conjugated_generators(&m)?;
    let pi23 = m.conjugate(&transposition::<f64>(3, 2)?)?;
    Ok(vec![
        compare_printed("M(-iH_x)M^dagger", &printed_m_hx(), &hx, PRINTED_TOL),
        compare_printed("M(-iH_y)M^dagger", &printed_m_hy(), &hy, PRINTED_TOL),
        compare_printed("M(-iH_zz)M^dagger", &printed_m_hzz(), &hzz, PRINTED_TOL),
        compare_printed("M Pi_23 M^dagger", &printed_m_pi23(), &pi23, PRINTED_TOL),
    ])
}
