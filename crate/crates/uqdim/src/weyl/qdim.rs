//! Quantum dimensions on the Weyl line and their classical limits.
//!
//! The quantum dimension of a highest-weight representation is the character
//! value on the Weyl line: `prod_{alpha>0} sinh((alpha, mu+rho)x/2) /
//! sinh((alpha, rho)x/2)`. Inner products are taken under the series
//! normalization of [`super::roots`], so the arguments land directly in the
//! crate's x/2 units. Canonicalization cancels the bulk of the factors and
//! leaves the familiar hook-style products.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::symbolic::{int, Assignment, LinearForm, SinhProduct, VarSet};

use super::rep::RepSpec;
use super::WeylError;

/// Canonical sinh-factor product of the representation at a numeric rank.
/// All arguments are numeric constants; before cancellation the factor count
/// on each side equals the number of positive roots.
pub fn qdim_at_rank(spec: &RepSpec, rank: u32) -> Result<SinhProduct, WeylError> {
    let rs = spec.root_system(rank)?;
    let mu = spec.highest_weight(rank)?;
    let rho = rs.weyl_vector();
    let mu_plus_rho: Vec<_> = mu.iter().zip(rho.iter()).map(|(a, b)| a + b).collect();
    let mut num = Vec::with_capacity(rs.positive_roots().len());
    let mut den = Vec::with_capacity(rs.positive_roots().len());
    for root in rs.positive_roots() {
        num.push(LinearForm::constant(
            VarSet::RankN,
            rs.inner(root, &mu_plus_rho),
        ));
        den.push(LinearForm::constant(VarSet::RankN, rs.inner(root, &rho)));
    }
    Ok(SinhProduct::new(VarSet::RankN, int(1), num, den)?)
}

/// Ordinary dimension, recovered as the exact x -> 0 limit of the quantum
/// dimension. Always a positive integer for an admissible spec.
pub fn dimension(spec: &RepSpec, rank: u32) -> Result<BigInt, WeylError> {
    let q = qdim_at_rank(spec, rank)?;
    let value = q.classical_limit(&Assignment::rank(int(i64::from(rank))))?;
    debug_assert!(
        value.is_integer() && value.is_positive(),
        "dimension {value}"
    );
    Ok(value.to_integer())
}
