//! Commuting matrix pairs, their textile specifications, the associated quad
//! module and Fock representation, and the K-theory of the resulting
//! Cuntz–Krieger algebra.

// loop indices are edge positions
#![allow(clippy::needless_range_loop)]

pub mod app;
pub mod diagonal;
pub mod error;
pub mod fock;
pub mod input;
pub mod invariants;
pub mod matrix;
pub mod quad;
pub mod subshift;
pub mod textile;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use textile::{Edge, EdgeKey, Kappa, KappaStrategy, Layer, LayeredGraph, TextileSystem, Tile};
