use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::{det, orthonormalize_columns};
use super::matrix::DenseMatrix;

/// Haar-random unitary from Gram–Schmidt on a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DenseMatrix {
    let g = DenseMatrix::from_fn(dim, |_, _| {
        Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    orthonormalize_columns(&g)
}

/// Haar-random unitary rescaled to unit determinant.
pub fn random_special_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DenseMatrix {
    let u = random_unitary(dim, rng);
    let phase = det(&u).arg() / dim as f64;
    u.scale(Complex::from_polar(1.0, -phase))
}

/// Random skew-Hermitian matrix with Gaussian entries scaled to the given HS norm.
pub fn random_skew_hermitian<R: Rng + ?Sized>(dim: usize, norm: f64, rng: &mut R) -> DenseMatrix {
    let g = DenseMatrix::from_fn(dim, |_, _| {
        Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let s = &g - &g.adjoint();
    let scale = norm / s.hs_norm();
    s.scale_real(scale)
}
