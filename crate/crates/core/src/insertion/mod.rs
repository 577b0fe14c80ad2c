//! Domino insertion: bumping, growth diagrams, and the semistandard and dual correspondences.

pub mod bumping;
pub mod dual;
pub mod growth;
pub mod semistandard;

pub use bumping::{insert_one, insert_word, insertion_frames};
pub use dual::{dual_alpha, dual_beta};
pub use growth::{growth_insert, growth_reverse, GrowthDiagram, SignedPermutationMatrix};
pub use semistandard::{insert_colored_word, semistandard_insert, semistandard_reverse};
