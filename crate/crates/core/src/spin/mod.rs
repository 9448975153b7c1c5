//! Hamiltonians, symmetric generators, spin permutations, and named states.

mod generator;
mod hamiltonian;
mod permutation;
mod state;

pub use generator::{symmetric_generator, SymmetricGenerator};
pub use hamiltonian::{hamiltonian_x, hamiltonian_y, hamiltonian_zz, MAX_SPINS};
pub use permutation::{is_permutation_invariant, permutation_residual, transposition};
pub use state::{ghz_state, phi_state, w_state, SpinState, StateName};
