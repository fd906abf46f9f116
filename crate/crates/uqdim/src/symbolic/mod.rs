//! Exact linear forms, canonical sinh-factor products, and factored
//! rational functions.

pub mod factored;
pub mod linear;
pub mod product;
pub mod rational;

pub use factored::RationalFactorForm;
pub use linear::{Assignment, LinearForm, VarSet};
pub use product::{sinh_argument_latex, sinh_argument_text, Side, SinhProduct};
pub use rational::{format_rat, int, parse_rat, rat, rat_to_f64, Rat};

use std::fmt;

/// Errors from canonicalization and evaluation of symbolic products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicError {
    /// A product with prefactor zero has no canonical form.
    ZeroPrefactor,
    /// Forms over different variable lists were mixed in one product.
    VariableMismatch,
    /// More vanishing denominator than numerator factors: a pole.
    Divergent,
    /// Vanishing factors could not be paired within a proportionality class,
    /// so the limit along the degeneration is not determined.
    UnpairedVanishing,
    /// A denominator factor of a rational form vanishes at the point.
    PoleAtPoint,
}

impl fmt::Display for SymbolicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicError::ZeroPrefactor => write!(f, "product prefactor is zero"),
            SymbolicError::VariableMismatch => {
                write!(f, "mixed variable lists in one expression")
            }
            SymbolicError::Divergent => write!(f, "divergent: vanishing denominator excess"),
            SymbolicError::UnpairedVanishing => {
                write!(f, "vanishing factors cannot be paired by proportionality")
            }
            SymbolicError::PoleAtPoint => write!(f, "denominator factor vanishes at the point"),
        }
    }
}

impl std::error::Error for SymbolicError {}
