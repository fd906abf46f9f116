//! Exact quantum dimensions for the classical Lie algebra series, and
//! reconstruction of the rank-independent factors of the universal
//! (parameter-plane) quantum dimension formulas.
//!
//! Everything exact is exact: coefficients are arbitrary-precision
//! rationals, products of hyperbolic sines are kept in a canonical factored
//! form, and floating point appears only where a caller asks for a numeric
//! value on the Weyl line.
//!
//! The crate is organized around the pipeline:
//!
//! - [`young`]: diagrams, transpose, and the vertical/horizontal
//!   componentwise sums relating the sl, so, and sp members of a multiplet.
//! - [`symbolic`]: linear forms, canonical sinh-factor products with the
//!   vanishing-pair limit rule, and factored rational functions.
//! - [`weyl`]: classical root systems, Weyl-line quantum dimensions at
//!   numeric rank, exact dimensions, and interpolation to symbolic rank.
//! - [`vogel`]: the parameter table, the built-in universal formulas with
//!   their decomposition data, series specialization, and verification.
//! - [`reconstruct`]: the exhaustive search recovering the gamma-free
//!   denominator factor of a universal formula from its three classical
//!   members.

pub mod reconstruct;
pub mod symbolic;
pub mod vogel;
pub mod weyl;
pub mod young;
