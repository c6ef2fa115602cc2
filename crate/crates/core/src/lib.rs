//! Weyl-group combinatorics of spherical strata and sheets of conjugacy classes, and the
//! partition calculus of nilpotent orbits in classical Lie algebras.

#![allow(clippy::needless_range_loop)]

pub mod config;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod poset;
pub mod root_system;
pub mod sheets;
pub mod strata;
pub mod verify;
pub mod weyl;

pub use config::Config;
pub use error::{Error, Result};
pub use orbits::{Algebra, ClassicalLevi, LeviOrbit, OrbitLabel, Partition, VeryEvenMark};
pub use poset::Poset;
pub use root_system::{CartanType, Family, RootSystem, RootVector, SubsystemBasis};
pub use sheets::{IsolatedExtension, PseudoLeviClass, PseudoLevis, SheetPair};
pub use strata::{StrataAnalysis, StratumDescriptor, TSubset};
pub use weyl::{ConjClass, WeylElement, WeylGroup};
