//! Finite commutative multiplicative hyperrings, the absorbing-type
//! hyperideal predicates defined over them, and a harness that checks
//! structural statements about those predicates on every instance of a
//! finite family.
//!
//! Start with [`hyperring::build_zmt`] or a ring file ([`format`]), enumerate
//! hyperideals with [`ideal::enumerate_hyperideals`] and decide predicates
//! with the functions in [`absorbing`]. Questions about the integer model
//! `ℤ_T` and a principal ideal `⟨n⟩` go through [`zt::ZtContext`].

pub mod absorbing;
pub mod cli;
pub mod constructions;
pub mod element_set;
pub mod error;
pub mod format;
pub mod harness;
pub mod hyperring;
pub mod ideal;
pub mod multiset;
pub mod zt;

pub use element_set::ElementSet;
pub use error::{Error, Result};
pub use hyperring::{build_zmt, HyperStructure, Hyperring, HyperringError};
