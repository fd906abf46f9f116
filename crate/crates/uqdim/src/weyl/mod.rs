//! Classical root systems, quantum dimensions via the Weyl-line character
//! formula, and symbolic-rank interpolation.

pub mod interpolate;
pub mod qdim;
pub mod rep;
pub mod roots;

pub use interpolate::rank_interpolate;
pub use qdim::{dimension, qdim_at_rank};
pub use rep::{ClassicalSeries, RepSpec};
pub use roots::{RootSystem, Series};

use std::fmt;

use crate::symbolic::SymbolicError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylError {
    /// The representation does not exist (or is not stable) at this rank.
    RankTooSmall {
        series: ClassicalSeries,
        rank: u32,
    },
    /// Rank interpolation could not produce a verified affine fit.
    FitUnstable(String),
    Symbolic(SymbolicError),
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::RankTooSmall { series, rank } => {
                write!(f, "rank {rank} too small for the {series} representation")
            }
            WeylError::FitUnstable(msg) => write!(f, "rank interpolation unstable: {msg}"),
            WeylError::Symbolic(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for WeylError {}

impl From<SymbolicError> for WeylError {
    fn from(e: SymbolicError) -> Self {
        WeylError::Symbolic(e)
    }
}
