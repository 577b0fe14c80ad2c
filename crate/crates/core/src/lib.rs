//! Domino insertion for colored permutations and biwords, domino tableau
//! statistics, sign-imbalance identities and domino generating series.

pub mod error;
pub mod identities;
pub mod insertion;
pub mod partition;
pub mod poly;
pub mod render;
pub mod series;
pub mod tableau;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
