//! Multipartition, diagram, node, and tableau combinatorics: the indexing
//! layer for the algebraic modules.
//!
//! Multipartitions are stored trimmed (no trailing zeros); the bound vector
//! `m = (m_1, ..., m_r)` is carried separately and applied on demand, since
//! the same shape is viewed inside different weight sets at ranks `n` and
//! `n+1`.

mod node;
mod partition;
mod perm;
mod tableau;
mod weight;

pub use node::{
    add_node, addable_nodes, addable_nodes_unbounded, diagram, node_precedes, remove_node, Node,
};
pub use partition::{
    enumerate_multipartitions, enumerate_weights, partitions_of, MultiComposition, MultiPartition,
    ParseShapeError,
};
pub use perm::Perm;
pub use tableau::{
    canonical_sst, enumerate_ssts, enumerate_ssts_bounded, enumerate_std_tableaux, special_sst,
    std_count, superstandard, tableau_perm, weight_reading, weyl_dim, SemiStdTableau, StdTableau,
};
pub use weight::{
    add_alpha, dominance_ge, gamma, gamma_inv, is_in_gamma_image, omega, sub_alpha, GammaIndex,
    WeightVector,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombiError {
    #[error("size mismatch: |lhs| = {0}, |rhs| = {1}")]
    SizeMismatch(usize, usize),
    #[error("shape does not fit bounds m = {0:?}")]
    BoundsViolation(Vec<usize>),
    #[error("node {0} is not removable")]
    NotRemovable(Node),
    #[error("node {0} is not addable")]
    NotAddable(Node),
    #[error("weight is not in the image of gamma (final entry of component r must be 1)")]
    NotInGammaImage,
    #[error("component count mismatch: {0} vs {1}")]
    ComponentMismatch(usize, usize),
}
