//! Exact machinery for cyclotomic q-Schur algebras.
//!
//! The crate is organized around six layers:
//!
//! - [`exactalg`] — arithmetic over the generic ground ring
//!   `Z[q, q^-1, Q_1, ..., Q_r]` and its fraction field, plus quantum
//!   integers and factorials.
//! - [`combi`] — multipartitions, diagrams, nodes, standard and
//!   semistandard tableaux: the indexing layer for everything else.
//! - [`akengine`] — the Ariki-Koike algebra `H_{n,r}` in its normal-form
//!   basis `{L_1^{a_1} ... L_n^{a_n} T_w}`, with generator rewriting,
//!   the `*` anti-involution, and the elements `m_mu`.
//! - [`schurgen`] — the cyclotomic q-Schur algebra generators `E`, `F`,
//!   `1_la` as weight-graded left multipliers, and symbolic verifiers for
//!   the defining relations, the theta identities, the rank embedding,
//!   and the Schur-Hecke dictionary.
//! - [`branching`] — restriction/induction filtration combinatorics for
//!   standard modules and the dimension identities certifying them.
//! - [`fockcat`] — residues, blocks, and the level-r Fock space with its
//!   Chevalley operators, cross-checked against the branching layer.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod akengine;
pub mod branching;
pub mod combi;
pub mod exactalg;
pub mod fockcat;
pub mod schurgen;
