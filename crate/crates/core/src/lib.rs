//! Decide when a skew Schur function equals a single Schur function.
//!
//! The crate answers the question in two settings: over infinitely many
//! variables (where the answer is governed by diagram rotation) and over `n`
//! variables (where it is governed by the longest-column parameter together
//! with the shearing/fattening closure). Everything is backed by explicit
//! Littlewood-Richardson enumeration, constructive witness fillings, and a
//! brute-force monomial oracle for exhaustive small-scale verification.

pub mod equality;
mod error;
pub mod littlewood_richardson;
pub mod oracle;
pub mod shapes;
pub mod tableaux;

pub use error::Error;
pub use shapes::{CellSet, Orientation, Partition, SkewShape};
