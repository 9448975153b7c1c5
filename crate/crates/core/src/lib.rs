//! Dynamical Lie algebras, symmetry-adapted coordinates, and pulse synthesis for
//! collectively controlled Ising spin networks with all-to-all `σz σz` coupling.
//!
//! The Hamiltonian is `H_zz + u_x H_x + u_y H_y`. The permutation-invariant subspace is
//! spanned by the Dicke states, and every unitary on it can be steered with the two
//! collective controls; this crate computes the closure, exhibits the block structure,
//! factors targets into generator exponentials, and simulates square-pulse schedules.

pub mod acceptance;
pub mod coords;
pub mod error;
pub mod lie;
pub mod simulator;
pub mod spin;
pub mod synthesis;
pub mod tensor;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use tensor::{DenseMatrix, Real};

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;
/// Double-precision matrix, the working type of the upper layers.
pub type Matrix = DenseMatrix<f64>;
/// Single-precision matrix.
pub type Matrix32 = DenseMatrix<f32>;
