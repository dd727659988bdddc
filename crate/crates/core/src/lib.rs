//! Noncrossing partition lattices of planar point configurations.
//!
//! A partition of a finite point set is noncrossing when the convex hulls of
//! its blocks are pairwise disjoint. This crate enumerates such partitions
//! with exact rational geometry, builds the refinement lattice, tests
//! gradedness, rank symmetry and self-duality, constructs symmetric chain
//! decompositions for several point families, and computes the counting
//! tables and generating functions for those families.

pub mod error;
pub mod geometry;
pub mod partition;
pub mod poset;
pub mod scd;
pub mod enumeration;
pub mod acceptance;

pub use error::{Error, Result};
pub use geometry::{standard_config, Configuration, Family, Point};
pub use partition::{count_noncrossing, enumerate_noncrossing, SetPartition};
pub use poset::{NcLattice, Poset};
