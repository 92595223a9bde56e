//! Finite permutation groups, their subgroup structure, and exhaustive
//! checks of element-order criteria for nilpotency of a group and of its
//! derived subgroup.
//!
//! Every group is fully enumerated, so all queries are exact. The
//! [`criteria`] module holds the order-product criteria together with
//! witness extraction, and [`corpus`] supplies the groups they are run on.

pub mod bitset;
pub mod cli;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod group;
pub mod perm;
pub mod primes;
pub mod structure;

pub use error::{GroupError, Result};
pub use group::{commutator, Elem, FiniteGroup, Subgroup};
pub use perm::{compose, Permutation, PermError};
