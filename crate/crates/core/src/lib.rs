//! Exact graph-minor toolkit.
//!
//! Membership and obstruction tests for the minor-closed classes defined by
//! bounding minimum degree, connectivity, treewidth or pathwidth over all
//! minors, together with the exact parameter solvers, contraction-minor
//! search, graph generators and isomorph-free enumeration they rely on.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! anything touching the filesystem live in the `mforge` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod blocks;
pub mod budget;
pub mod canon;
pub mod characterizations;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod minor;
pub mod params;
pub mod search;

pub use blocks::{block_tree, BlockNode, BlockTree};
pub use budget::Budget;
pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::Graph;
pub use minor::{BranchPartition, MembershipReport};
pub use params::ParamKind;
