//! Permutation groups small enough to enumerate: named constructions,
//! conjugacy classes, coset actions, coverings and subgroup classes.

mod action;
pub mod affine;
mod covering;
mod group;
mod io;
mod lattice;
mod named;
mod perm;
mod subgroup;

pub use action::{combined_action, CosetAction, MAX_COSET_INDEX};
pub use affine::AffineMap;
pub use covering::{
    check_k_covering, common_core_is_trivial, metacyclic_subgroups_covered, verify_covering, ClassAssignment, CoveringCertificate,
    CoveringOutcome, MetacyclicReport,
};
pub use group::{Classes, ElemId, PermGroup, ENUMERATION_CAP};
pub use io::{perm_from_cycles, perm_to_cycles, GroupFile, SubgroupFile};
pub use lattice::{
    cycle_type_pairs, cycle_type_tuples, describe, enumerate_subgroups, is_conjugate, label, orbit_partitions_of_subgroup, Action,
    LatticeMode, SubgroupInfo, LATTICE_CAP,
};
pub use named::{affine_group, agl_order, construct_named_group, GroupSpec, NamedGroup};
pub use perm::Perm;
pub use subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group exceeds the enumeration limit of {limit}")]
    TooLarge { limit: usize },
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("a covering subgroup equals the whole group")]
    NotProper,
}
