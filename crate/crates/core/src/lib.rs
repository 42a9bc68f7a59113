//! Signed-permutation group engine for the finite imprimitive irreducible
//! subgroups of O(7).
//!
//! Every group here is an explicit set of 7×7 monomial ±1 matrices. The
//! [`atlas`] module builds the named groups, [`clifford`] counts their
//! conjugacy classes through the normal diagonal subgroup, and [`groupkit`]
//! supplies the generic closure, class, quotient and subgroup machinery.

pub mod atlas;
pub mod clifford;
pub mod error;
pub mod groupkit;
pub mod signedperm;

pub use clifford::CliffordCount;
pub use error::{Error, Result};
pub use groupkit::{ClassPartition, Group, GroupFingerprint, QuotientGroup};
pub use signedperm::{Gf2Code, Gf2Vec, SignedPerm};
