//! Curve classes on `M̄_{0,n}`: F-curve expansions, fixed loci of cyclic and
//! dihedral actions, Keel-relation search for effective expressions, and
//! toric degenerations through Losev-Manin spaces.

pub mod classes;
pub mod error;
pub mod invariant;
pub mod losev_manin;
pub mod search;

pub use error::{Error, Result};
