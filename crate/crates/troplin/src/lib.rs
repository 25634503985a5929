//! Exact tropical linear algebra over the rationals.
//!
//! Everything here computes in the min-plus semiring over Q extended with a
//! single `inf`: tropical orthogonal complements of finitely many coefficient
//! rows, hulls and exact membership, tropical rank, Puiseux polynomial
//! arithmetic with valuations, Pluecker tropicalization of linear subspaces,
//! and a decision procedure that either certifies a min-plus prevariety as
//! the tropicalization of a linear subspace (by exhibiting exact liftings) or
//! refutes it through a dimension obstruction.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod cli;
pub mod corpus;
pub mod prevariety;
pub mod puiseux;
pub mod rank;
pub mod rat;
pub mod trop;
pub mod variety;

pub use rat::ExtRat;
pub use trop::{GeneratorSet, TropMatrix, TropVector};

/// Errors shared across the crate. `Parse` marks malformed input text;
/// everything else is a contract violation on shapes, dimensions, or domains.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rank error: {0}")]
    Rank(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
