//! Truncated Fock representation: graded word basis, exact integer
//! operators, and the identity checks run on them.

pub mod basis;
pub mod ops;
pub mod sparse;
pub mod verify;

pub use basis::{fock_basis, fock_basis_with_cap, FockWord, Sep, TruncatedFock, DEFAULT_BASIS_CAP};
pub use ops::{Creation, Graded, Projection, Side};
pub use sparse::SparseOp;
pub use verify::{
    ck_generators, ck_generators_with, verify_fock_identities, verify_fock_identities_with, verify_relations_hk,
    verify_relations_hk_with, CkRealization, Mode, Report, ReportEntry, Status, Witness,
};
