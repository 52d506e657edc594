//! Transition matrices, K-theory via Smith normal form, and graph-level
//! structure checks.

pub mod kgroups;
pub mod snf;
pub mod structure;

pub use kgroups::{
    build_quad_matrices, k_groups_of, k_theory, k_theory_of, minus_identity, KGroups, KTheory, QuadMatrices,
};
pub use snf::{determinant, smith_normal_form, SnfResult};
pub use structure::{structure_checks, StructureReport};
