//! Canonical products of hyperbolic sines.
//!
//! A [`SinhProduct`] is `prefactor * prod sinh(u_i x/2) / prod sinh(v_j x/2)`
//! where every stored argument `u` is a [`LinearForm`] and denotes the factor
//! `sinh(u * x/2)`. Everything ingested is converted to these x/2 units.
//!
//! Canonical form: arguments are sign-normalized (flips absorbed into the
//! prefactor by oddness of sinh), sorted, and any nonzero argument occurring
//! on both sides is cancelled. Identically-zero arguments are legal content:
//! they encode factors that vanish at every evaluation point and are kept
//! until an evaluation rule consumes them.
//!
//! Vanishing-argument rule: when a substitution sends both a numerator
//! argument and a denominator argument to zero, the pair contributes the
//! ratio of the two forms along the degeneration. Each vanishing form is a
//! rational multiple of a common line form, so the limit
//! `sinh(c1*e*x) / sinh(c2*e*x) -> c1/c2` is exact. Zero-valued arguments
//! are grouped by proportionality class of their pre-substitution forms and
//! each class contributes the ratio of products of its scalars.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::linear::{Assignment, LinearForm, VarSet};
use super::rational::{format_rat, rat_to_f64, Rat};
use super::SymbolicError;

/// Which side of a product a query refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Numerator,
    Denominator,
}

/// A signed rational prefactor with numerator/denominator argument multisets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SinhProduct {
    vars: VarSet,
    prefactor: Rat,
    numerator: Vec<LinearForm>,
    denominator: Vec<LinearForm>,
}

impl SinhProduct {
    /// Builds the canonical product with the given parts.
    pub fn new(
        vars: VarSet,
        prefactor: Rat,
        numerator: Vec<LinearForm>,
        denominator: Vec<LinearForm>,
    ) -> Result<Self, SymbolicError> {
        if prefactor.is_zero() {
            return Err(SymbolicError::ZeroPrefactor);
        }
        let mut sign_flips = 0usize;
        let mut normalize = |forms: Vec<LinearForm>| -> Result<Vec<LinearForm>, SymbolicError> {
            let mut out = Vec::with_capacity(forms.len());
            for f in forms {
                if f.vars() != vars {
                    return Err(SymbolicError::VariableMismatch);
                }
                let (g, flipped) = f.canonical_sign();
                if flipped {
                    sign_flips += 1;
                }
                out.push(g);
            }
            out.sort();
            Ok(out)
        };
        let num = normalize(numerator)?;
        let den = normalize(denominator)?;
        let (num, den) = cancel_common(num, den);
        let prefactor = if sign_flips % 2 == 1 {
            -prefactor
        } else {
            prefactor
        };
        Ok(SinhProduct {
            vars,
            prefactor,
            numerator: num,
            denominator: den,
        })
    }

    /// The empty product, value 1 at every point.
    pub fn one(vars: VarSet) -> Self {
        SinhProduct {
            vars,
            prefactor: Rat::one(),
            numerator: Vec::new(),
            denominator: Vec::new(),
        }
    }

    /// Re-runs canonicalization; a fixed point for already-canonical input.
    pub fn canonicalize(&self) -> Result<Self, SymbolicError> {
        SinhProduct::new(
            self.vars,
            self.prefactor.clone(),
            self.numerator.clone(),
            self.denominator.clone(),
        )
    }

    pub fn vars(&self) -> VarSet {
        self.vars
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

    pub fn side(&self, side: Side) -> &[LinearForm] {
        match side {
            Side::Numerator => &self.numerator,
            Side::Denominator => &self.denominator,
        }
    }

    /// Constant terms of the arguments on `side` whose variable coefficients
    /// all vanish, as a sorted multiset.
    pub fn constant_args(&self, side: Side) -> Vec<Rat> {
        let mut out: Vec<Rat> = self
            .side(side)
            .iter()
            .filter_map(|f| f.as_constant().cloned())
            .collect();
        out.sort();
        out
    }

    pub fn multiply(&self, other: &SinhProduct) -> Result<SinhProduct, SymbolicError> {
        if self.vars != other.vars {
            return Err(SymbolicError::VariableMismatch);
        }
        let mut num = self.numerator.clone();
        num.extend(other.numerator.iter().cloned());
        let mut den = self.denominator.clone();
        den.extend(other.denominator.iter().cloned());
        SinhProduct::new(self.vars, &self.prefactor * &other.prefactor, num, den)
    }

    pub fn reciprocal(&self) -> SinhProduct {
        SinhProduct {
            vars: self.vars,
            prefactor: Rat::one() / &self.prefactor,
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> SinhProduct {
        let mut num = Vec::with_capacity(self.numerator.len() * k as usize);
        let mut den = Vec::with_capacity(self.denominator.len() * k as usize);
        let mut prefactor = Rat::one();
        for _ in 0..k {
            num.extend(self.numerator.iter().cloned());
            den.extend(self.denominator.iter().cloned());
            prefactor *= &self.prefactor;
        }
        num.sort();
        den.sort();
        SinhProduct {
            vars: self.vars,
            prefactor,
            numerator: num,
            denominator: den,
        }
    }

    /// Numeric value at `assignment` and Weyl-line parameter `x != 0`.
    ///
    /// Zero-valued arguments follow the pairing rule of the module docs:
    /// an excess of zero-valued numerator arguments gives exactly `0.0`, an
    /// excess on the denominator side is a pole.
    pub fn evaluate(&self, asg: &Assignment, x: f64) -> Result<f64, SymbolicError> {
        assert!(x != 0.0 && x.is_finite(), "x must be finite and nonzero");
        assert_eq!(self.vars, asg.vars(), "assignment variable list mismatch");
        let (zero_num, vals_num) = split_zero(&self.numerator, asg);
        let (zero_den, vals_den) = split_zero(&self.denominator, asg);
        if zero_num.len() > zero_den.len() {
            return Ok(0.0);
        }
        if zero_num.len() < zero_den.len() {
            return Err(SymbolicError::Divergent);
        }
        let mut value = rat_to_f64(&self.prefactor);
        if !zero_num.is_empty() {
            value *= rat_to_f64(&zero_pair_ratio(&zero_num, &zero_den)?);
        }
        for v in &vals_num {
            value *= (rat_to_f64(v) * x / 2.0).sinh();
        }
        for v in &vals_den {
            value /= (rat_to_f64(v) * x / 2.0).sinh();
        }
        Ok(value)
    }

    /// Exact `x -> 0` limit at `assignment`.
    ///
    /// Each surviving factor contributes its argument value; the x powers
    /// must balance, so an excess of nonzero numerator arguments gives 0 and
    /// an excess of nonzero denominator arguments is a pole. Zero-valued
    /// arguments are paired exactly as in [`Self::evaluate`].
    pub fn classical_limit(&self, asg: &Assignment) -> Result<Rat, SymbolicError> {
        assert_eq!(self.vars, asg.vars(), "assignment variable list mismatch");
        let (zero_num, vals_num) = split_zero(&self.numerator, asg);
        let (zero_den, vals_den) = split_zero(&self.denominator, asg);
        if zero_num.len() > zero_den.len() {
            return Ok(Rat::zero());
        }
        if zero_num.len() < zero_den.len() {
            return Err(SymbolicError::Divergent);
        }
        let mut value = self.prefactor.clone();
        if !zero_num.is_empty() {
            value *= zero_pair_ratio(&zero_num, &zero_den)?;
        }
        if vals_num.len() > vals_den.len() {
            return Ok(Rat::zero());
        }
        if vals_num.len() < vals_den.len() {
            return Err(SymbolicError::Divergent);
        }
        for v in &vals_num {
            value *= v;
        }
        for v in &vals_den {
            value /= v;
        }
        Ok(value)
    }

    /// Applies a permutation of `(alpha, beta, gamma)` to every argument.
    pub fn permute_vogel(&self, perm: [usize; 3]) -> Result<SinhProduct, SymbolicError> {
        assert_eq!(self.vars, VarSet::Vogel, "permute_vogel needs Vogel forms");
        SinhProduct::new(
            VarSet::Vogel,
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

    /// Substitutes a numeric rank into a product over `N`; arguments become
    /// constants and equal constants cancel.
    pub fn substitute_rank(&self, n: &Rat) -> Result<SinhProduct, SymbolicError> {
        assert_eq!(self.vars, VarSet::RankN, "substitute_rank needs N-forms");
        let subst = |forms: &[LinearForm]| -> Vec<LinearForm> {
            forms
                .iter()
                .map(|f| LinearForm::constant(VarSet::RankN, f.eval_rank(n)))
                .collect()
        };
        SinhProduct::new(
            VarSet::RankN,
            self.prefactor.clone(),
            subst(&self.numerator),
            subst(&self.denominator),
        )
    }

    /// JSON per the crate's wire schema: exact fields as `"p/q"` strings,
    /// one object per argument keyed by symbol name plus `"const"`.
    pub fn to_json(&self) -> Value {
        let arg_list =
            |forms: &[LinearForm]| -> Value { Value::Array(forms.iter().map(form_json).collect()) };
        let mut obj = Map::new();
        obj.insert("unit".into(), Value::String("x/2".into()));
        obj.insert(
            "prefactor".into(),
            Value::String(format_rat(&self.prefactor)),
        );
        obj.insert("numerator".into(), arg_list(&self.numerator));
        obj.insert("denominator".into(), arg_list(&self.denominator));
        Value::Object(obj)
    }

    /// LaTeX in the conventional display style, e.g.
    /// `\sinh\left[\frac{\alpha x}{4}\right]` for the stored argument
    /// `alpha/2`.
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
        let num = latex_factor_string(&self.numerator);
        let den = latex_factor_string(&self.denominator);
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

impl fmt::Display for SinhProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |forms: &[LinearForm]| -> String {
            grouped(forms)
                .into_iter()
                .map(|(form, k)| {
                    let body = format!("sinh({})", sinh_argument_text(&form));
                    if k > 1 {
                        format!("{body}^{k}")
                    } else {
                        body
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = String::new();
        if self.prefactor != Rat::one() {
            s.push_str(&format_rat(&self.prefactor));
        }
        if !self.numerator.is_empty() {
            if !s.is_empty() {
                s.push_str(" * ");
            }
            s.push_str(&render(&self.numerator));
        }
        if s.is_empty() {
            s.push('1');
        }
        if !self.denominator.is_empty() {
            s.push_str(" / ");
            s.push_str(&render(&self.denominator));
        }
        write!(f, "{s}")
    }
}

/// `u * x / 2` as a reduced integer-form multiple of x over a positive
/// integer: returns the integer coefficients, constant, and denominator.
fn sinh_argument_parts(
    u: &LinearForm,
) -> (
    Vec<num_bigint::BigInt>,
    num_bigint::BigInt,
    num_bigint::BigInt,
) {
    use num_integer::Integer;
    let (ints, konst, lcm) = u.integerized();
    let mut g: num_bigint::BigInt = lcm.clone() * 2;
    g = g.gcd(&konst);
    for i in &ints {
        g = g.gcd(i);
    }
    if g.is_zero() {
        return (ints, konst, lcm * 2);
    }
    (
        ints.iter().map(|i| i / &g).collect(),
        &konst / &g,
        lcm * 2 / g,
    )
}

/// Renders `u * x / 2` with cleared denominators, e.g. `(N-1)x/2`,
/// `alpha x/4`, `x/2`, `2x`.
pub fn sinh_argument_text(u: &LinearForm) -> String {
    let (ints, konst, den) = sinh_argument_parts(u);
    let f = integer_form_text(u.vars(), &ints, &konst, false);
    let body = if f == "1" {
        "x".to_string()
    } else if f.contains('+') || f.contains('-') {
        format!("({f})x")
    } else if f.chars().all(|c| c.is_ascii_digit()) {
        format!("{f}x")
    } else {
        format!("{f} x")
    };
    if den == 1.into() {
        body
    } else {
        format!("{body}/{den}")
    }
}

/// Same rendering in LaTeX: `\frac{(\beta-3\alpha) x}{4}`.
pub fn sinh_argument_latex(u: &LinearForm) -> String {
    let (ints, konst, den) = sinh_argument_parts(u);
    let f = integer_form_text(u.vars(), &ints, &konst, true);
    let body = if f == "1" {
        "x".to_string()
    } else if f.contains('+') || f.contains('-') {
        format!("({f}) x")
    } else if f.chars().all(|c| c.is_ascii_digit()) {
        format!("{f}x")
    } else {
        format!("{f} x")
    };
    if den == 1.into() {
        body
    } else {
        format!("\\frac{{{body}}}{{{den}}}")
    }
}

fn latex_factor_string(forms: &[LinearForm]) -> String {
    grouped(forms)
        .into_iter()
        .map(|(form, k)| {
            let body = format!("\\sinh\\left[{}\\right]", sinh_argument_latex(&form));
            if k > 1 {
                format!("{body}^{{{k}}}")
            } else {
                body
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn grouped(forms: &[LinearForm]) -> Vec<(LinearForm, usize)> {
    let mut out: Vec<(LinearForm, usize)> = Vec::new();
    for f in forms {
        match out.last_mut() {
            Some((g, k)) if g == f => *k += 1,
            _ => out.push((f.clone(), 1)),
        }
    }
    out
}

/// Integer-coefficient form rendered in priority order (`gamma, beta,
/// alpha` resp. `N`), constants last.
fn integer_form_text(
    vars: VarSet,
    ints: &[num_bigint::BigInt],
    konst: &num_bigint::BigInt,
    latex: bool,
) -> String {
    use num_traits::Signed as _;
    let symbol = |i: usize| -> String {
        let name = vars.symbols()[i];
        if latex {
            match name {
                "alpha" => "\\alpha".into(),
                "beta" => "\\beta".into(),
                "gamma" => "\\gamma".into(),
                other => other.into(),
            }
        } else {
            name.into()
        }
    };
    let order: &[usize] = match vars {
        VarSet::RankN => &[0],
        VarSet::Vogel => &[2, 1, 0],
    };
    let mut out = String::new();
    for &i in order {
        let c = &ints[i];
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() && !c.is_negative() {
            out.push('+');
        }
        let a = c.abs();
        if c.is_negative() {
            out.push('-');
        }
        if a != 1.into() {
            out.push_str(&a.to_string());
        }
        out.push_str(&symbol(i));
    }
    if out.is_empty() {
        return konst.to_string();
    }
    if !konst.is_zero() {
        if !konst.is_negative() {
            out.push('+');
        }
        out.push_str(&konst.to_string());
    }
    out
}

fn form_json(f: &LinearForm) -> Value {
    let mut obj = Map::new();
    for (sym, c) in f.vars().symbols().iter().zip(f.coeffs()) {
        obj.insert((*sym).into(), Value::String(format_rat(c)));
    }
    obj.insert("const".into(), Value::String(format_rat(f.constant_term())));
    Value::Object(obj)
}

fn cancel_common(num: Vec<LinearForm>, den: Vec<LinearForm>) -> (Vec<LinearForm>, Vec<LinearForm>) {
    // Both sides sorted; walk once, dropping equal nonzero arguments.
    let mut out_num = Vec::with_capacity(num.len());
    let mut out_den = Vec::with_capacity(den.len());
    let mut i = 0;
    let mut j = 0;
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
    (out_num, out_den)
}

fn split_zero<'a>(forms: &'a [LinearForm], asg: &Assignment) -> (Vec<&'a LinearForm>, Vec<Rat>) {
    let mut zeros = Vec::new();
    let mut values = Vec::new();
    for f in forms {
        let v = f.eval(asg);
        if v.is_zero() {
            zeros.push(f);
        } else {
            values.push(v);
        }
    }
    (zeros, values)
}

/// Ratio contributed by equal counts of vanishing numerator and denominator
/// arguments, grouped by proportionality class of their forms.
pub(crate) fn zero_pair_ratio(
    zero_num: &[&LinearForm],
    zero_den: &[&LinearForm],
) -> Result<Rat, SymbolicError> {
    struct Class<'a> {
        rep: &'a LinearForm,
        num_product: Rat,
        num_count: usize,
        den_product: Rat,
        den_count: usize,
    }
    let mut classes: Vec<Class> = Vec::new();
    for (forms, is_num) in [(zero_num, true), (zero_den, false)] {
        for &form in forms {
            if form.is_zero() {
                // A literal zero form has no degeneration rate to pair with.
                return Err(SymbolicError::UnpairedVanishing);
            }
            let found = classes
                .iter()
                .position(|c| form.proportional_ratio(c.rep).is_some());
            let k = match found {
                Some(k) => k,
                None => {
                    classes.push(Class {
                        rep: form,
                        num_product: Rat::one(),
                        num_count: 0,
                        den_product: Rat::one(),
                        den_count: 0,
                    });
                    classes.len() - 1
                }
            };
            let q = form.proportional_ratio(classes[k].rep).expect("same class");
            let c = &mut classes[k];
            if is_num {
                c.num_product *= q;
                c.num_count += 1;
            } else {
                c.den_product *= q;
                c.den_count += 1;
            }
        }
    }
    let mut ratio = Rat::one();
    for c in &classes {
        if c.num_count != c.den_count {
            return Err(SymbolicError::UnpairedVanishing);
        }
        ratio *= &c.num_product / &c.den_product;
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::{int, rat};

    fn consts(vals: &[(i64, i64)]) -> Vec<LinearForm> {
        vals.iter()
            .map(|&(p, q)| LinearForm::constant(VarSet::RankN, rat(p, q)))
            .collect()
    }

    #[test]
    fn canonicalize_flips_sign_by_oddness() {
        // num {-alpha/2} -> num {alpha/2}, prefactor -1
        let p = SinhProduct::new(
            VarSet::Vogel,
            int(1),
            vec![LinearForm::vogel(rat(-1, 2), int(0), int(0))],
            vec![],
        )
        .unwrap();
        assert_eq!(p.prefactor(), &int(-1));
        assert_eq!(
            p.numerator(),
            &[LinearForm::vogel(rat(1, 2), int(0), int(0))]
        );
    }

    #[test]
    fn canonicalize_cancels_exactly() {
        // num {1, N-1}, den {1} -> num {N-1}, den {}
        let p = SinhProduct::new(
            VarSet::RankN,
            int(1),
            vec![
                LinearForm::constant(VarSet::RankN, int(1)),
                LinearForm::rank(int(1), int(-1)),
            ],
            vec![LinearForm::constant(VarSet::RankN, int(1))],
        )
        .unwrap();
        assert_eq!(p.numerator(), &[LinearForm::rank(int(1), int(-1))]);
        assert!(p.denominator().is_empty());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let p = SinhProduct::new(
            VarSet::Vogel,
            rat(-3, 2),
            vec![
                LinearForm::vogel(int(1), int(-1), int(0)),
                LinearForm::vogel(int(0), int(0), int(1)),
            ],
            vec![LinearForm::vogel(int(2), int(0), int(-1))],
        )
        .unwrap();
        assert_eq!(p.canonicalize().unwrap(), p);
    }

    #[test]
    fn zero_prefactor_rejected() {
        assert!(matches!(
            SinhProduct::new(VarSet::RankN, int(0), vec![], vec![]),
            Err(SymbolicError::ZeroPrefactor)
        ));
    }

    #[test]
    fn multiply_with_reciprocal_is_one() {
        let p = SinhProduct::new(
            VarSet::RankN,
            int(-2),
            vec![LinearForm::rank(int(1), int(1))],
            vec![LinearForm::constant(VarSet::RankN, int(2))],
        )
        .unwrap();
        let q = p.multiply(&p.reciprocal()).unwrap();
        assert_eq!(q, SinhProduct::one(VarSet::RankN));
        // identity element
        assert_eq!(SinhProduct::one(VarSet::RankN).multiply(&p).unwrap(), p);
    }

    #[test]
    fn correction_factor_replaces_denominator_argument() {
        // sinh((alpha+beta)c x/2)/sinh((alpha+beta)c x/4) times a product
        // with denominator argument (alpha+beta)c cancels that argument and
        // leaves the halved one.
        let line = LinearForm::vogel(int(1), int(1), int(0));
        let corr = SinhProduct::new(
            VarSet::Vogel,
            int(1),
            vec![line.clone()],
            vec![line.scale(&rat(1, 2))],
        )
        .unwrap();
        let base = SinhProduct::new(VarSet::Vogel, int(1), vec![], vec![line.clone()]).unwrap();
        let out = corr.multiply(&base).unwrap();
        assert!(out.numerator().is_empty());
        assert_eq!(out.denominator(), &[line.scale(&rat(1, 2))]);
    }

    #[test]
    fn multiply_rejects_mixed_variables() {
        let p = SinhProduct::one(VarSet::RankN);
        let q = SinhProduct::one(VarSet::Vogel);
        assert!(matches!(
            p.multiply(&q),
            Err(SymbolicError::VariableMismatch)
        ));
    }

    #[test]
    fn evaluate_scalar_ratio() {
        // num {2}, den {1} at x = 1 -> sinh(1)/sinh(0.5)
        let p =
            SinhProduct::new(VarSet::RankN, int(1), consts(&[(2, 1)]), consts(&[(1, 1)])).unwrap();
        let v = p.evaluate(&Assignment::rank(int(0)), 1.0).unwrap();
        let expected = 1.0f64.sinh() / 0.5f64.sinh();
        assert!((v - expected).abs() < 1e-12);
        assert!((v - 2.25525).abs() < 1e-4);
    }

    #[test]
    fn evaluate_empty_product_is_prefactor() {
        let p = SinhProduct::one(VarSet::Vogel);
        let asg = Assignment::vogel(int(1), int(2), int(3));
        assert_eq!(p.evaluate(&asg, 0.7).unwrap(), 1.0);
        assert_eq!(p.classical_limit(&asg).unwrap(), int(1));
    }

    #[test]
    fn vanishing_pair_gives_coefficient_ratio() {
        // sinh((t-gamma)x/2) / sinh((t-gamma)x/4) at alpha+beta = 0 -> 2
        let t_minus_gamma = LinearForm::vogel(int(1), int(1), int(0));
        let p = SinhProduct::new(
            VarSet::Vogel,
            int(1),
            vec![t_minus_gamma.clone()],
            vec![t_minus_gamma.scale(&rat(1, 2))],
        )
        .unwrap();
        let sl = Assignment::vogel(int(-2), int(2), int(7));
        assert_eq!(p.evaluate(&sl, 0.3).unwrap(), 2.0);
        assert_eq!(p.classical_limit(&sl).unwrap(), int(2));
        // away from the line it is an honest ratio of sines
        let generic = Assignment::vogel(int(-2), int(4), int(3));
        let v = p.evaluate(&generic, 0.5).unwrap();
        let e = (2.0f64 * 0.5 / 2.0).sinh() / (1.0f64 * 0.5 / 2.0).sinh();
        assert!((v - e).abs() < 1e-12);
    }

    #[test]
    fn excess_zero_numerator_is_zero_excess_denominator_diverges() {
        let line = LinearForm::vogel(int(1), int(1), int(0));
        let sl = Assignment::vogel(int(-2), int(2), int(5));
        let p = SinhProduct::new(VarSet::Vogel, int(1), vec![line.clone()], vec![]).unwrap();
        assert_eq!(p.evaluate(&sl, 1.0).unwrap(), 0.0);
        assert_eq!(p.classical_limit(&sl).unwrap(), int(0));
        let q = SinhProduct::new(VarSet::Vogel, int(1), vec![], vec![line]).unwrap();
        assert!(matches!(
            q.evaluate(&sl, 1.0),
            Err(SymbolicError::Divergent)
        ));
        assert!(matches!(
            q.classical_limit(&sl),
            Err(SymbolicError::Divergent)
        ));
    }

    #[test]
    fn classical_limit_counts_x_powers() {
        // sinh((N-1)x/2) alone -> 0 as x -> 0; its reciprocal diverges.
        let f = LinearForm::rank(int(1), int(-1));
        let p = SinhProduct::new(VarSet::RankN, int(1), vec![f.clone()], vec![]).unwrap();
        let asg = Assignment::rank(int(5));
        assert_eq!(p.classical_limit(&asg).unwrap(), int(0));
        let q = SinhProduct::new(VarSet::RankN, int(1), vec![], vec![f]).unwrap();
        assert!(matches!(
            q.classical_limit(&asg),
            Err(SymbolicError::Divergent)
        ));
    }

    #[test]
    fn substitute_rank_cancels_constants() {
        // num {2(N/2-5)}, den {2} at N = 12 cancels completely.
        let p = SinhProduct::new(
            VarSet::RankN,
            int(1),
            vec![LinearForm::rank(int(1), int(-10))],
            vec![LinearForm::constant(VarSet::RankN, int(2))],
        )
        .unwrap();
        let s = p.substitute_rank(&int(12)).unwrap();
        assert_eq!(s, SinhProduct::one(VarSet::RankN));
    }

    #[test]
    fn display_and_latex_render_units() {
        let p = SinhProduct::new(
            VarSet::Vogel,
            int(1),
            vec![LinearForm::vogel(rat(1, 2), int(0), int(0))],
            vec![LinearForm::vogel(rat(-3, 2), rat(1, 2), int(0))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "sinh(alpha x/4) / sinh((beta-3alpha)x/4)");
        assert_eq!(
            p.to_latex(),
            "\\frac{\\sinh\\left[\\frac{\\alpha x}{4}\\right]}{\\sinh\\left[\\frac{(\\beta-3\\alpha) x}{4}\\right]}"
        );
        let neg = SinhProduct::new(
            VarSet::Vogel,
            int(-1),
            vec![],
            vec![LinearForm::vogel(rat(1, 2), int(0), int(0))],
        )
        .unwrap();
        assert_eq!(neg.to_string(), "-1 / sinh(alpha x/4)");
        assert_eq!(
            neg.to_latex(),
            "-\\frac{1}{\\sinh\\left[\\frac{\\alpha x}{4}\\right]}"
        );
    }

    #[test]
    fn json_schema_shape() {
        let p = SinhProduct::new(
            VarSet::RankN,
            int(1),
            vec![LinearForm::rank(int(1), int(-1))],
            vec![LinearForm::constant(VarSet::RankN, int(1))],
        )
        .unwrap();
        let j = p.to_json();
        assert_eq!(j["unit"], "x/2");
        assert_eq!(j["prefactor"], "1");
        assert_eq!(j["numerator"][0]["N"], "1");
        assert_eq!(j["numerator"][0]["const"], "-1");
        assert_eq!(j["denominator"][0]["const"], "1");
    }
}
