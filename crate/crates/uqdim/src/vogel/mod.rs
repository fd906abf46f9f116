//! Parameter-plane points and lines, the built-in universal formula
//! library, series specialization, and the verification harness.

pub mod formulas;
pub mod point;
pub mod specialize;
pub mod verify;

pub use formulas::{builtin_formulas, formula, FormulaBody, FormulaEntry};
pub use point::{
    base_row, vogel_point, Family, Permutation, VogelError, VogelPoint, EXCEPTIONAL_POINTS,
};
pub use specialize::{series_substitution, specialize_to_series};
pub use verify::{
    associated_spec, square_dimension_identity, square_identities, verify_formula, SquareFailure,
    SquareReport, VerifyFailure, VerifyReport,
};
