//! Combinatorics of Young tableaux and symmetric functions: partitions,
//! tableaux, the Robinson-Schensted correspondence, the plactic monoid,
//! Littlewood-Richardson coefficients and symmetric group characters.
//!
//! Every fast routine has a brute-force counterpart in this crate (or in its
//! tests) that it is checked against at small sizes.

pub mod character;
pub mod error;
pub mod partition;
pub mod plactic;
pub mod rs;
pub mod schur;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use rs::RSPair;
pub use schur::{MonomialExpansion, SchurExpansion};
pub use tableau::{SkewTableau, Tableau};
pub use word::{Letter, Word};
