//! Points of the projective (alpha, beta, gamma) plane attached to the
//! simple Lie algebra families, with their defining lines.
//!
//! Base rows: `sl(N) = (-2, 2, N)`, `so(N) = (-2, 4, N-4)`,
//! `sp(N) = (-2, 1, N/2+2)` for even `N`, `Exc(n) = (-2, n+4, 2n+4)`.
//! The `sp` row is the `so(-N)` line rescaled and permuted so that the
//! series weights `(w_x, w_y) = (3/2, -1/2)` and `t = n+1` hold. A point
//! records which of the six orderings of the base row it carries.

use std::fmt;

use num_traits::Zero;

use crate::symbolic::{format_rat, int, rat, Assignment, Rat};
use crate::weyl::ClassicalSeries;

/// Algebra family owning a base row of the parameter table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Sl,
    So,
    Sp,
    Exc,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sl => "sl",
            Family::So => "so",
            Family::Sp => "sp",
            Family::Exc => "exc",
            Family::Custom => "custom",
        }
    }

    pub fn classical(series: ClassicalSeries) -> Family {
        match series {
            ClassicalSeries::Sl => Family::Sl,
            ClassicalSeries::So => Family::So,
            ClassicalSeries::Sp => Family::Sp,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the six orderings of `(alpha, beta, gamma)`. `apply` sends the
/// base-row entry `i` to output slot `perm[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Permutation(pub [usize; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2]);

    pub const ALL: [Permutation; 6] = [
        Permutation([0, 1, 2]),
        Permutation([0, 2, 1]),
        Permutation([1, 0, 2]),
        Permutation([1, 2, 0]),
        Permutation([2, 0, 1]),
        Permutation([2, 1, 0]),
    ];

    pub fn apply<T: Clone>(&self, triple: [T; 3]) -> [T; 3] {
        let mut out = triple.clone();
        for (i, item) in triple.iter().enumerate() {
            out[self.0[i]] = item.clone();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VogelError {
    InvalidParameter { family: Family, reason: String },
}

impl fmt::Display for VogelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VogelError::InvalidParameter { family, reason } => {
                write!(f, "invalid {family} parameter: {reason}")
            }
        }
    }
}

impl std::error::Error for VogelError {}

/// An (alpha, beta, gamma) triple with family metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VogelPoint {
    alpha: Rat,
    beta: Rat,
    gamma: Rat,
    family: Family,
    parameter: Rat,
    permutation: Permutation,
}

impl VogelPoint {
    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }

    pub fn gamma(&self) -> &Rat {
        &self.gamma
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> &Rat {
        &self.parameter
    }

    pub fn permutation(&self) -> Permutation {
        self.permutation
    }

    pub fn t(&self) -> Rat {
        &self.alpha + &self.beta + &self.gamma
    }

    pub fn assignment(&self) -> Assignment {
        Assignment::vogel(self.alpha.clone(), self.beta.clone(), self.gamma.clone())
    }

    /// A free point with no family attached.
    pub fn custom(alpha: Rat, beta: Rat, gamma: Rat) -> VogelPoint {
        VogelPoint {
            alpha,
            beta,
            gamma,
            family: Family::Custom,
            parameter: Rat::zero(),
            permutation: Permutation::IDENTITY,
        }
    }
}

impl fmt::Display for VogelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) at ({}, {}, {})",
            self.family,
            format_rat(&self.parameter),
            format_rat(&self.alpha),
            format_rat(&self.beta),
            format_rat(&self.gamma)
        )
    }
}

/// Unpermuted base-row values for a family at the given parameter.
pub fn base_row(family: Family, parameter: &Rat) -> Result<[Rat; 3], VogelError> {
    let invalid = |reason: &str| VogelError::InvalidParameter {
        family,
        reason: reason.to_string(),
    };
    let need_integer_at_least = |min: i64| -> Result<(), VogelError> {
        if !parameter.is_integer() || parameter < &int(min) {
            Err(invalid(&format!("need an integer >= {min}")))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Sl => {
            need_integer_at_least(2)?;
            Ok([int(-2), int(2), parameter.clone()])
        }
        Family::So => {
            need_integer_at_least(3)?;
            Ok([int(-2), int(4), parameter - int(4)])
        }
        Family::Sp => {
            need_integer_at_least(2)?;
            if (parameter / int(2)).is_integer() {
                Ok([int(-2), int(1), parameter / int(2) + int(2)])
            } else {
                Err(invalid("need an even defining dimension"))
            }
        }
        Family::Exc => {
            // The exceptional line; the named algebras sit at
            // n = -1, -2/3, 0, 1, 2, 4, 8.
            if parameter == &int(-2) {
                return Err(invalid("beta and gamma vanish at n = -2"));
            }
            Ok([int(-2), parameter + int(4), rat(2, 1) * parameter + int(4)])
        }
        Family::Custom => Err(invalid("custom points carry explicit coordinates")),
    }
}

/// The table row for `family` at `parameter`, with the chosen ordering
/// applied to the base row.
pub fn vogel_point(
    family: Family,
    parameter: &Rat,
    permutation: Permutation,
) -> Result<VogelPoint, VogelError> {
    let base = base_row(family, parameter)?;
    let [alpha, beta, gamma] = permutation.apply(base);
    Ok(VogelPoint {
        alpha,
        beta,
        gamma,
        family,
        parameter: parameter.clone(),
        permutation,
    })
}

/// Exceptional algebras of the table: `(name, n, adjoint dimension)`.
pub const EXCEPTIONAL_POINTS: [(&str, (i64, i64), u32); 5] = [
    ("G2", (-2, 3), 14),
    ("F4", (1, 1), 52),
    ("E6", (2, 1), 78),
    ("E7", (4, 1), 133),
    ("E8", (8, 1), 248),
];
