//! Factored rational functions with degree-one factors, used for the
//! x-independent universal dimension formula.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::linear::{Assignment, LinearForm, VarSet};
use super::rational::{format_rat, Rat};
use super::SymbolicError;

/// `prefactor * prod f_i / prod g_j` with linear factors over
/// `(alpha, beta, gamma)`, canonicalized like [`super::SinhProduct`]
/// (degree-one factors are odd, so sign flips move into the prefactor).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFactorForm {
    prefactor: Rat,
    numerator: Vec<LinearForm>,
    denominator: Vec<LinearForm>,
}

impl RationalFactorForm {
    pub fn new(
        prefactor: Rat,
        numerator: Vec<LinearForm>,
        denominator: Vec<LinearForm>,
    ) -> Result<Self, SymbolicError> {
        if prefactor.is_zero() {
            return Err(SymbolicError::ZeroPrefactor);
        }
        let mut flips = 0usize;
        let mut normalize = |forms: Vec<LinearForm>| -> Result<Vec<LinearForm>, SymbolicError> {
            let mut out = Vec::with_capacity(forms.len());
            for f in forms {
                if f.vars() != VarSet::Vogel {
                    return Err(SymbolicError::VariableMismatch);
                }
                let (g, flipped) = f.canonical_sign();
                if flipped {
                    flips += 1;
                }
                out.push(g);
            }
            out.sort();
            Ok(out)
        };
        let mut num = normalize(numerator)?;
        let mut den = normalize(denominator)?;
        // multiset cancellation on the sorted lists
        let mut out_num = Vec::with_capacity(num.len());
        let mut out_den = Vec::with_capacity(den.len());
        let (mut i, mut j) = (0, 0);
        while i < num.len() && j < den.len() {
            if num[i] == den[j] && !num[i].is_zero() {
                i += 1;
                j += 1;
            } else if num[i] <= den[j] {
                out_num.push(num[i].clone());
                i += 1;
            } else {
                out_den.push(den[j].clone());
                j += 1;
            }
        }
        out_num.extend_from_slice(&num[i..]);
        out_den.extend_from_slice(&den[j..]);
        num = out_num;
        den = out_den;
        let prefactor = if flips % 2 == 1 {
            -prefactor
        } else {
            prefactor
        };
        Ok(RationalFactorForm {
            prefactor,
            numerator: num,
            denominator: den,
        })
    }

    pub fn constant(value: Rat) -> Result<Self, SymbolicError> {
        RationalFactorForm::new(value, vec![], vec![])
    }

    pub fn prefactor(&self) -> &Rat {
        &self.prefactor
    }

    pub fn numerator(&self) -> &[LinearForm] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[LinearForm] {
        &self.denominator
    }

    /// Exact value at a point; a vanishing denominator factor is a pole even
    /// when a numerator factor vanishes too (no limit is taken here).
    pub fn evaluate_rational(&self, asg: &Assignment) -> Result<Rat, SymbolicError> {
        let mut value = self.prefactor.clone();
        for g in &self.denominator {
            let v = g.eval(asg);
            if v.is_zero() {
                return Err(SymbolicError::PoleAtPoint);
            }
            value /= v;
        }
        for f in &self.numerator {
            value *= f.eval(asg);
        }
        Ok(value)
    }

    /// Applies a permutation of `(alpha, beta, gamma)` to every factor.
    pub fn permute(&self, perm: [usize; 3]) -> Result<Self, SymbolicError> {
        RationalFactorForm::new(
            self.prefactor.clone(),
            self.numerator
                .iter()
                .map(|f| f.permute_vogel(perm))
                .collect(),
            self.denominator
                .iter()
                .map(|f| f.permute_vogel(perm))
                .collect(),
        )
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        if self.prefactor.is_negative() {
            out.push('-');
        }
        let mag = self.prefactor.abs();
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&format!("{} \\, ", mag.numer()));
            } else {
                out.push_str(&format!(
                    "\\frac{{{}}}{{{}}} \\, ",
                    mag.numer(),
                    mag.denom()
                ));
            }
        }
        let num = latex_factors(&self.numerator);
        let den = latex_factors(&self.denominator);
        match (num.is_empty(), den.is_empty()) {
            (true, true) => {
                if mag.is_one() {
                    out.push('1');
                }
            }
            (false, true) => out.push_str(&num),
            (true, false) => out.push_str(&format!("\\frac{{1}}{{{den}}}")),
            (false, false) => out.push_str(&format!("\\frac{{{num}}}{{{den}}}")),
        }
        out
    }
}

fn latex_factors(forms: &[LinearForm]) -> String {
    let mut groups: Vec<(String, usize)> = Vec::new();
    for f in forms {
        let body = factor_latex(f);
        match groups.last_mut() {
            Some((g, k)) if *g == body => *k += 1,
            _ => groups.push((body, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(g, k)| if k > 1 { format!("{g}^{{{k}}}") } else { g })
        .collect::<Vec<_>>()
        .join(" ")
}

fn factor_latex(f: &LinearForm) -> String {
    let rendered = f
        .to_string()
        .replace("alpha", "\\alpha")
        .replace("beta", "\\beta")
        .replace("gamma", "\\gamma")
        .replace('*', "");
    if rendered.contains('+') || rendered.contains('-') {
        format!("({rendered})")
    } else {
        rendered
    }
}

impl fmt::Display for RationalFactorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |forms: &[LinearForm]| -> String {
            forms
                .iter()
                .map(|g| format!("({g})"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = format_rat(&self.prefactor);
        if !self.numerator.is_empty() {
            s.push_str(" * ");
            s.push_str(&render(&self.numerator));
        }
        if !self.denominator.is_empty() {
            s.push_str(" / ");
            s.push_str(&render(&self.denominator));
        }
        write!(f, "{s}")
    }
}
