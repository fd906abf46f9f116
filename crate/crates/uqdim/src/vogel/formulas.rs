//! Built-in universal formula library with decomposition metadata.
//!
//! Bodies are stored in x/2 units over `(alpha, beta, gamma)` with
//! `t = alpha + beta + gamma` expanded. The three symmetric-square members
//! are one body and its two coordinate swaps; the swapped bodies are
//! generated, not transcribed.
//!
//! Each entry carries the classical decomposition data of the square of the
//! adjoint: the `sl` composite pair, the associated `so` and `sp` diagrams,
//! the quadratic Casimir as a linear form, and whether the `sl` member is
//! moved by the Dynkin-diagram Z2 (in which case the universal value at sl
//! points counts the representation together with its image, a factor 2).

use crate::symbolic::{int, rat, LinearForm, RationalFactorForm, SinhProduct, VarSet};
use crate::young::{diagram, YoungDiagram};

/// A universal formula body: a sinh-factor product for quantum dimensions,
/// or a plain factored rational function for an x-independent dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaBody {
    Sinh(SinhProduct),
    Rational(RationalFactorForm),
}

/// A named universal formula plus its per-series representation data.
#[derive(Clone, Debug)]
pub struct FormulaEntry {
    pub name: &'static str,
    pub body: FormulaBody,
    /// Quadratic Casimir eigenvalue as a linear form in the parameters,
    /// where known.
    pub casimir: Option<LinearForm>,
    pub sl_pair: (YoungDiagram, YoungDiagram),
    pub so_diagram: YoungDiagram,
    pub sp_diagram: YoungDiagram,
    /// True when the sl member is not Dynkin-Z2 invariant (`lambda != tau`).
    pub z2: bool,
}

impl FormulaEntry {
    pub fn sinh_body(&self) -> Option<&SinhProduct> {
        match &self.body {
            FormulaBody::Sinh(p) => Some(p),
            FormulaBody::Rational(_) => None,
        }
    }

    pub fn rational_body(&self) -> Option<&RationalFactorForm> {
        match &self.body {
            FormulaBody::Rational(r) => Some(r),
            FormulaBody::Sinh(_) => None,
        }
    }
}

/// Integer-coefficient homogeneous form `a*alpha + b*beta + g*gamma`.
fn v(a: i64, b: i64, g: i64) -> LinearForm {
    LinearForm::vogel(int(a), int(b), int(g))
}

/// Same with all coefficients halved, for ingesting x/4-unit factors.
fn vh(a: i64, b: i64, g: i64) -> LinearForm {
    LinearForm::vogel(rat(a, 2), rat(b, 2), rat(g, 2))
}

fn sinh_product(prefactor: i64, num: Vec<LinearForm>, den: Vec<LinearForm>) -> SinhProduct {
    SinhProduct::new(VarSet::Vogel, int(prefactor), num, den)
        .expect("built-in formula bodies are well formed")
}

/// Quantum dimension of the adjoint representation.
pub fn adjoint_body() -> SinhProduct {
    sinh_product(
        -1,
        vec![vh(2, 2, 1), vh(2, 1, 2), vh(1, 2, 2)],
        vec![vh(1, 0, 0), vh(0, 1, 0), vh(0, 0, 1)],
    )
}

/// Quantum dimension of the top piece of the antisymmetric square.
pub fn x2_body() -> SinhProduct {
    sinh_product(
        1,
        vec![
            // (2t - alpha)/2 and swaps
            vh(1, 2, 2),
            vh(2, 1, 2),
            vh(2, 2, 1),
            // (t + alpha)/2 and swaps
            vh(2, 1, 1),
            vh(1, 2, 1),
            vh(1, 1, 2),
            // (t - alpha) and swaps, full x/2 unit
            v(0, 1, 1),
            v(1, 0, 1),
            v(1, 1, 0),
        ],
        vec![
            vh(1, 0, 0),
            vh(0, 1, 0),
            vh(0, 0, 1),
            // (t - alpha)/2 and swaps
            vh(0, 1, 1),
            vh(1, 0, 1),
            vh(1, 1, 0),
            v(1, 0, 0),
            v(0, 1, 0),
            v(0, 0, 1),
        ],
    )
}

/// Quantum dimension of the alpha-labelled symmetric-square member; the
/// beta and gamma members are coordinate swaps of this body.
pub fn y2_alpha_body() -> SinhProduct {
    sinh_product(
        -1,
        vec![
            v(1, 1, 1),     // t
            vh(-2, -1, -2), // (beta - 2t)/2
            vh(-2, -2, -1), // (gamma - 2t)/2
            vh(1, 2, 1),    // (beta + t)/2
            vh(1, 1, 2),    // (gamma + t)/2
            vh(1, -2, -2),  // (3 alpha - 2t)/2
        ],
        vec![
            vh(1, 0, 0),
            v(1, 0, 0),
            vh(0, 1, 0),
            vh(0, 0, 1),
            vh(1, -1, 0), // (alpha - beta)/2
            vh(1, 0, -1), // (alpha - gamma)/2
        ],
    )
}

/// X-independent dimension of the universal multiplet containing the
/// composite of (3,1) and (2,1,1).
pub fn dim_e_body() -> RationalFactorForm {
    RationalFactorForm::new(
        int(-64),
        vec![
            v(1, 0, 1),
            v(2, 0, 1),
            v(1, 0, 2),
            v(0, 1, 1),
            v(0, 2, 1),
            v(0, 1, 2),
            v(1, 1, 1),
            v(2, 1, 1),
            v(1, 2, 1),
            v(2, 2, 1),
            v(2, 1, 2),
            v(1, 2, 2),
        ],
        vec![
            v(1, 0, 0),
            v(1, 0, 0),
            v(0, 1, 0),
            v(0, 1, 0),
            v(0, 0, 1),
            v(1, -3, 0),
            v(1, -1, 0),
            v(1, -1, 0),
            v(3, -1, 0),
            v(1, 0, -1),
            v(0, 1, -1),
            v(1, 1, -2),
        ],
    )
    .expect("built-in formula bodies are well formed")
}

const SWAP_AB: [usize; 3] = [1, 0, 2];
const SWAP_AG: [usize; 3] = [2, 1, 0];

/// All built-in formulas with their decomposition metadata.
pub fn builtin_formulas() -> Vec<FormulaEntry> {
    let square = |d: &YoungDiagram| (d.clone(), d.clone());
    let y2 = y2_alpha_body();
    vec![
        FormulaEntry {
            name: "adjoint",
            body: FormulaBody::Sinh(adjoint_body()),
            casimir: Some(v(2, 2, 2)),
            sl_pair: square(&diagram(&[1])),
            so_diagram: diagram(&[1, 1]),
            sp_diagram: diagram(&[2]),
            z2: false,
        },
        FormulaEntry {
            name: "Y2_alpha",
            body: FormulaBody::Sinh(y2.clone()),
            casimir: Some(v(2, 4, 4)),
            sl_pair: square(&diagram(&[2])),
            so_diagram: diagram(&[2, 2]),
            sp_diagram: diagram(&[4]),
            z2: false,
        },
        FormulaEntry {
            name: "Y2_beta",
            body: FormulaBody::Sinh(y2.permute_vogel(SWAP_AB).expect("swap")),
            casimir: Some(v(4, 2, 4)),
            sl_pair: square(&diagram(&[1, 1])),
            so_diagram: diagram(&[1, 1, 1, 1]),
            sp_diagram: diagram(&[2, 2]),
            z2: false,
        },
        FormulaEntry {
            name: "Y2_gamma",
            body: FormulaBody::Sinh(y2.permute_vogel(SWAP_AG).expect("swap")),
            casimir: Some(v(4, 4, 2)),
            sl_pair: square(&diagram(&[1])),
            so_diagram: diagram(&[2]),
            sp_diagram: diagram(&[1, 1]),
            z2: false,
        },
        FormulaEntry {
            name: "X2",
            body: FormulaBody::Sinh(x2_body()),
            casimir: Some(v(4, 4, 4)),
            sl_pair: (diagram(&[2]), diagram(&[1, 1])),
            so_diagram: diagram(&[2, 1, 1]),
            sp_diagram: diagram(&[3, 1]),
            z2: true,
        },
        FormulaEntry {
            name: "dimE",
            body: FormulaBody::Rational(dim_e_body()),
            casimir: None,
            sl_pair: (diagram(&[3, 1]), diagram(&[2, 1, 1])),
            so_diagram: diagram(&[3, 2, 1, 1, 1]),
            sp_diagram: diagram(&[5, 2, 1]),
            z2: true,
        },
    ]
}

pub fn formula(name: &str) -> Option<FormulaEntry> {
    builtin_formulas().into_iter().find(|e| e.name == name)
}
