//! Lie closure of skew-Hermitian generators, the symmetric-generator bracket catalog,
//! and the closure report for the collective Ising controls.

mod closure;
mod identities;
mod report;

pub use closure::{closure, predicted_dimension, LieBasis, CLOSURE_TOL};
pub use identities::{
    check_bracket_identity, identity_catalog, BracketIdentity, CoefficientDeviation,
    GeneratorTable, IdentityCheck, Term,
};
pub use report::{
    control_closure, control_generators, verify_symmetric_closure, ClosureReport, IdentityResult,
};
