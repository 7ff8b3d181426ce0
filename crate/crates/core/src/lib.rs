//! Exact computations on punctual Hilbert schemes of points: admissible
//! Hilbert functions, monomial and strongly stable ideals, graded tangent
//! spaces, Macaulay inverse systems, locus dimension formulas and
//! k-regular maps.

pub mod apolarity;
pub mod error;
pub mod exact;
pub mod hilbert;
pub mod ideal;
pub mod loci;
pub mod regular;
pub mod tangent;

pub use error::{Error, Result};

/// Version string used to key cached results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
