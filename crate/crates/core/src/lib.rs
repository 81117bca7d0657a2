//! Exact computations on toric varieties described by fans.
//!
//! Layers, bottom up: integer lattices and Smith normal form ([`lattice`]),
//! rational polyhedral cones ([`cone`]), affine semigroups and their monomial
//! algebras ([`semigroup`]), fans ([`fan`]), homogeneous locally nilpotent
//! derivations and `G_a`-actions ([`derivations`]), and the command-line
//! front end ([`cli`]). All arithmetic is over arbitrary-precision integers
//! and rationals.

pub mod cli;
pub mod cone;
pub mod derivations;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod semigroup;

pub use error::{Error, Result};
