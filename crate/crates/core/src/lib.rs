//! Exact computations in Thompson's group F.
//!
//! Elements are piecewise-linear maps with dyadic breakpoints ([`PLMap`]),
//! compared exactly to decide the word problem. Rational points of the Cantor
//! set ([`RationalPoint`]) carry the prefix-rewriting action of F, which drives
//! the Schreier-graph exploration in [`schreier`] and the construction of
//! five-element generating sets for point stabilizers in [`stabgen`].
//!
//! All products follow the right-action convention: `fg` means "apply `f`,
//! then `g`", so a word acts on a point letter by letter from left to right.

pub mod cantor;
pub mod cli;
pub mod dyadic;
pub mod error;
pub mod plmap;
pub mod relators;
pub mod report;
pub mod schreier;
pub mod stabgen;
pub mod word;

pub use cantor::{BitString, RationalPoint};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use plmap::{Generator, PLMap};
pub use report::{Check, Report};
pub use schreier::{GreyLabel, SchreierBall};
pub use stabgen::StabilizerGens;
pub use word::{GenWord, Letter};
