//! Exact-arithmetic constructions of skew-Hadamard and quaternary unit
//! Hadamard (QUH) matrices, the block-substitution morphism producing real
//! Hadamard matrices of order q^n + q^(n-1), and Legendre-symbol
//! nonexistence criteria for QUH matrices.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod morphism;
pub mod numtheory;
pub mod search;

pub use error::{Error, Result};
