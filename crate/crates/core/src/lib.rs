//! Abelian partitions of finite groups.
//!
//! A commuting set in a group `G` is a subset whose elements pairwise
//! commute. An abelian partition splits all of `G` into disjoint commuting
//! sets of size at least 2; the minimal number of parts is the AP-degree
//! `theta_a(G)`, with 0 reserved for groups admitting no such partition
//! (NAP-groups).
//!
//! The crate provides:
//! - explicit finite groups ([`group::GroupTable`]) built from permutation
//!   generators, presentations, and product constructions;
//! - finite field arithmetic ([`field`]) backing the `L_2(q)` and `Sz(q)`
//!   constructions;
//! - the commuting / noncommuting graph with an exact maximum-clique solver
//!   for `n(G)` ([`graph`]);
//! - exact computation, bounds, and machine-checkable minimality
//!   certificates for `theta_a` ([`partition`]);
//! - closed-form family values with constructed certified partitions
//!   ([`families`]);
//! - NAP certification by involution counting and embeddings ([`nap`]).

pub mod error;
pub mod families;
pub mod field;
pub mod graph;
pub mod group;
pub mod io;
pub mod nap;
pub mod partition;

pub use error::Error;
pub use field::{FieldElem, FieldSpec};

pub use graph::CommGraph;
pub use group::{GroupTable, PermSpec, Spectrum, SubgroupRef};
pub use partition::{AbelianPartition, BoundsReport, Certificate, ThetaResult};

