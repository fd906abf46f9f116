//! Representation specifications and highest-weight construction.
//!
//! An `sl` entry is a composite of two diagrams: the first supplies Dynkin
//! labels from the left end of the diagram as consecutive row differences,
//! the second the same differences reversed at the right end. `so`/`sp`
//! entries are single tensor diagrams.

use std::fmt;

use num_traits::Zero;

use crate::symbolic::{int, Rat};
use crate::young::YoungDiagram;

use super::roots::{RootSystem, Series};
use super::WeylError;

/// Classical algebra family in the defining-dimension labelling
/// `sl(N)`, `so(N)`, `sp(N)` with `N` even for `sp`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicalSeries {
    Sl,
    So,
    Sp,
}

impl ClassicalSeries {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalSeries::Sl => "sl",
            ClassicalSeries::So => "so",
            ClassicalSeries::Sp => "sp",
        }
    }
}

impl fmt::Display for ClassicalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A representation of a classical algebra, given by Young-diagram data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepSpec {
    /// Composite of `sl(N)` with labels from `lambda` at the left end and
    /// reversed `tau` at the right end.
    Sl {
        lambda: YoungDiagram,
        tau: YoungDiagram,
    },
    /// Tensor representation of `so(N)`.
    So { diagram: YoungDiagram },
    /// Tensor representation of `sp(N)`, `N` even.
    Sp { diagram: YoungDiagram },
}

impl RepSpec {
    pub fn series(&self) -> ClassicalSeries {
        match self {
            RepSpec::Sl { .. } => ClassicalSeries::Sl,
            RepSpec::So { .. } => ClassicalSeries::So,
            RepSpec::Sp { .. } => ClassicalSeries::Sp,
        }
    }

    /// Whether the representation exists as a stable tensor representation
    /// at defining dimension `rank`.
    ///
    /// For `sl(N)` we require at least one zero label between the two
    /// blocks, i.e. `N >= height(lambda) + height(tau) + 1`. For `so(N)` the
    /// diagram height must stay below `N/2` (strictly, for even `N`, so the
    /// weight avoids the chirality wall); for `sp(2n)` it must not exceed
    /// `n`.
    pub fn admissible_at(&self, rank: u32) -> bool {
        let rank = rank as usize;
        match self {
            RepSpec::Sl { lambda, tau } => rank > lambda.height() + tau.height(),
            RepSpec::So { diagram } => {
                let h = diagram.height();
                if rank.is_multiple_of(2) {
                    rank >= 6 && h < rank / 2
                } else {
                    rank >= 3 && h <= (rank - 1) / 2
                }
            }
            RepSpec::Sp { diagram } => {
                rank.is_multiple_of(2) && rank >= 2 && diagram.height() <= rank / 2
            }
        }
    }

    /// Root system hosting the representation at the given defining
    /// dimension.
    pub fn root_system(&self, rank: u32) -> Result<RootSystem, WeylError> {
        if !self.admissible_at(rank) {
            return Err(WeylError::RankTooSmall {
                series: self.series(),
                rank,
            });
        }
        let rank = rank as usize;
        Ok(match self {
            RepSpec::Sl { .. } => RootSystem::new(Series::A, rank - 1),
            RepSpec::So { .. } => {
                if rank.is_multiple_of(2) {
                    RootSystem::new(Series::D, rank / 2)
                } else {
                    RootSystem::new(Series::B, (rank - 1) / 2)
                }
            }
            RepSpec::Sp { .. } => RootSystem::new(Series::C, rank / 2),
        })
    }

    /// Highest weight in orthogonal coordinates.
    ///
    /// For `sl` this is the weight `(lambda_1, ..., lambda_k, 0, ..., 0,
    /// -tau_m, ..., -tau_1)`, whose consecutive differences are the Dynkin
    /// labels; for `so`/`sp` it is `sum rows[i] * e_i`.
    pub fn highest_weight(&self, rank: u32) -> Result<Vec<Rat>, WeylError> {
        if !self.admissible_at(rank) {
            return Err(WeylError::RankTooSmall {
                series: self.series(),
                rank,
            });
        }
        let rank = rank as usize;
        Ok(match self {
            RepSpec::Sl { lambda, tau } => {
                let mut mu = vec![Rat::zero(); rank];
                for (i, &r) in lambda.rows().iter().enumerate() {
                    mu[i] = int(i64::from(r));
                }
                for (i, &r) in tau.rows().iter().enumerate() {
                    mu[rank - 1 - i] = int(-i64::from(r));
                }
                mu
            }
            RepSpec::So { diagram } | RepSpec::Sp { diagram } => {
                let n = rank / 2;
                let mut mu = vec![Rat::zero(); n];
                for (i, &r) in diagram.rows().iter().enumerate() {
                    mu[i] = int(i64::from(r));
                }
                mu
            }
        })
    }

    /// Dynkin labels of the `sl` highest weight (consecutive coordinate
    /// differences), mostly useful for display and tests.
    pub fn dynkin_labels_sl(&self, rank: u32) -> Result<Vec<Rat>, WeylError> {
        match self {
            RepSpec::Sl { .. } => {
                let mu = self.highest_weight(rank)?;
                Ok(mu.windows(2).map(|w| &w[0] - &w[1]).collect())
            }
            _ => Err(WeylError::RankTooSmall {
                series: self.series(),
                rank,
            }),
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::Sl { lambda, tau } => write!(f, "sl D({lambda};{tau})"),
            RepSpec::So { diagram } => write!(f, "so [{diagram}]"),
            RepSpec::Sp { diagram } => write!(f, "sp [{diagram}]"),
        }
    }
}
