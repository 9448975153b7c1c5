//! Dense complex linear algebra and Pauli-string construction.

mod linalg;
mod matrix;
mod pauli;
mod random;
mod scalar;

pub(crate) use linalg::real_inner;
pub use linalg::{
    commutator, det, hermitian_eig, hs_inner, kron, mat_exp, orthonormalize_columns,
    phase_aligned_distance, Eigen, SkewSpectrum,
};
pub use matrix::DenseMatrix;
pub(crate) use pauli::pauli_string_sparse;
pub use pauli::{pauli, pauli_string_matrix, PauliLabel, PauliString};
pub use random::{random_skew_hermitian, random_special_unitary, random_unitary};
pub use scalar::Real;
pub(crate) use scalar::{cone, czero};
