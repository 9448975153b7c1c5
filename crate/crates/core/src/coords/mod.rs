//! Symmetry-adapted coordinates for two and three spins, block extraction, and checks of
//! the stated coordinate displays and basis actions.

mod basis;
mod checks;
mod printed;

pub use basis::{
    basis_for, basis_m, basis_t, basis_t_hat, block_form, block_split, conjugate,
    conjugated_generators, BasisChange, BlockForm,
};
pub use checks::{
    verify_action_table, verify_all_invariant_subspaces, verify_invariant_subspaces,
    verify_transposition_relations, ActionCheck, ActionReport, THREE_SPIN_LABELS,
};
pub use printed::{
    compare_printed, printed_a_x, printed_a_y, printed_a_zz, printed_hat_a_x, printed_hat_a_y,
    printed_m_hx, printed_m_hy, printed_m_hzz, printed_m_pi23, three_spin_comparisons,
    two_spin_comparisons, EntryDeviation, MatrixComparison, PRINTED_TOL,
};
