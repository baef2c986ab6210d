//! Basis webs for invariant spaces of minuscule SL(n) representations.

pub mod cli;
pub mod coherence;
pub mod error;
pub mod evaluation;
pub mod littelmann;
pub mod triangles;
pub mod webs;
pub mod weights;

pub use error::{Error, Result};
