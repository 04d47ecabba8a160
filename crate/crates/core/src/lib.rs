//! Finite permutation groups and the structure theory needed to decide the
//! partial Π-property of subgroups: chief series, Sylow and Hall subgroups,
//! hypercenters, F_p-module sections, and executable verifiers that check
//! structural theorems about groups whose prime-power-order subgroups satisfy
//! the property.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats, the
//! parallel corpus runner and the command-line front end live in the
//! `pitheory` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod chief;
pub mod construct;
pub mod embed;
pub mod error;
pub mod fp;
pub mod group;
pub mod iso;
pub mod lab;
pub mod lattice;
pub mod modrep;
pub mod perm;
pub mod quotient;
pub mod structure;

pub use chief::{ChiefFactor, ChiefSeries};
pub use error::{Error, Result};
pub use group::{Caps, Group, Subgroup};
pub use lattice::{NormalLattice, SubgroupLattice};
pub use modrep::FpModule;
pub use perm::Permutation;
pub use quotient::QuotientMap;
pub use structure::Structure;
