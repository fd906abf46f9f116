//! Rational-coefficient linear forms over a fixed variable list.
//!
//! A form is either over the rank variable `N` or over the universal
//! parameters `alpha, beta, gamma`. Forms over different variable lists
//! never mix inside one product; every operation checks this.
//!
//! The canonical sign of a form is fixed by the first nonzero entry in
//! priority order `gamma, beta, alpha` (resp. `N`), then the constant:
//! that entry must be positive. Flipping a form's sign is recorded by the
//! caller (sinh and degree-one factors are odd).

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::rational::{format_rat, Rat};

/// The two variable lists used in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarSet {
    /// Single rank variable `N`.
    RankN,
    /// Universal parameters `alpha, beta, gamma`.
    Vogel,
}

impl VarSet {
    pub fn symbols(self) -> &'static [&'static str] {
        match self {
            VarSet::RankN => &["N"],
            VarSet::Vogel => &["alpha", "beta", "gamma"],
        }
    }

    /// Number of symbols; a list is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.symbols().len()
    }

    /// Coefficient indices in canonical priority order (`gamma, beta, alpha`
    /// resp. `N`).
    fn priority(self) -> &'static [usize] {
        match self {
            VarSet::RankN => &[0],
            VarSet::Vogel => &[2, 1, 0],
        }
    }
}

/// A point to substitute into forms, one value per symbol of the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    vars: VarSet,
    values: Vec<Rat>,
}

impl Assignment {
    pub fn rank(n: Rat) -> Self {
        Assignment {
            vars: VarSet::RankN,
            values: vec![n],
        }
    }

    pub fn vogel(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        Assignment {
            vars: VarSet::Vogel,
            values: vec![alpha, beta, gamma],
        }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// `sum(coeffs[i] * var[i]) + constant` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    vars: VarSet,
    coeffs: Vec<Rat>,
    constant: Rat,
}

impl LinearForm {
    pub fn new(vars: VarSet, coeffs: Vec<Rat>, constant: Rat) -> Self {
        assert_eq!(coeffs.len(), vars.len(), "coefficient count mismatch");
        LinearForm {
            vars,
            coeffs,
            constant,
        }
    }

    pub fn constant(vars: VarSet, value: Rat) -> Self {
        LinearForm {
            vars,
            coeffs: vec![Rat::zero(); vars.len()],
            constant: value,
        }
    }

    /// The form `coeff * N + constant`.
    pub fn rank(coeff: Rat, constant: Rat) -> Self {
        LinearForm::new(VarSet::RankN, vec![coeff], constant)
    }

    /// The homogeneous form `a*alpha + b*beta + g*gamma`.
    pub fn vogel(a: Rat, b: Rat, g: Rat) -> Self {
        LinearForm::new(VarSet::Vogel, vec![a, b, g], Rat::zero())
    }

    pub fn zero(vars: VarSet) -> Self {
        LinearForm::constant(vars, Rat::zero())
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rat {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Rat::is_zero)
    }

    /// `Some(constant)` when every variable coefficient vanishes.
    pub fn as_constant(&self) -> Option<&Rat> {
        if self.coeffs.iter().all(Rat::is_zero) {
            Some(&self.constant)
        } else {
            None
        }
    }

    pub fn eval(&self, asg: &Assignment) -> Rat {
        assert_eq!(self.vars, asg.vars, "assignment variable list mismatch");
        let mut acc = self.constant.clone();
        for (c, v) in self.coeffs.iter().zip(asg.values.iter()) {
            if !c.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    pub fn eval_rank(&self, n: &Rat) -> Rat {
        self.eval(&Assignment::rank(n.clone()))
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        assert_eq!(self.vars, other.vars, "variable list mismatch");
        LinearForm {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
            constant: &self.constant + &other.constant,
        }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            constant: -self.constant.clone(),
        }
    }

    pub fn scale(&self, k: &Rat) -> LinearForm {
        LinearForm {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            constant: &self.constant * k,
        }
    }

    /// Leading entry in canonical priority order; zero for the zero form.
    fn leading(&self) -> &Rat {
        for &i in self.vars.priority() {
            if !self.coeffs[i].is_zero() {
                return &self.coeffs[i];
            }
        }
        &self.constant
    }

    /// Sign-normalized copy plus whether a flip happened.
    pub fn canonical_sign(&self) -> (LinearForm, bool) {
        if self.leading().is_negative() {
            (self.neg(), true)
        } else {
            (self.clone(), false)
        }
    }

    /// When `self == q * other` for a nonzero rational `q`, returns `q`.
    /// Zero forms are never proportional to anything.
    pub fn proportional_ratio(&self, other: &LinearForm) -> Option<Rat> {
        if self.vars != other.vars || self.is_zero() || other.is_zero() {
            return None;
        }
        let mut q: Option<Rat> = None;
        let pairs = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .zip(other.coeffs.iter().chain(std::iter::once(&other.constant)));
        for (a, b) in pairs {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = a / b;
                    match &q {
                        None => q = Some(r),
                        Some(prev) if *prev == r => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        q
    }

    /// Applies a permutation of `(alpha, beta, gamma)`: coefficient of the
    /// original symbol `i` moves to position `perm[i]`.
    pub fn permute_vogel(&self, perm: [usize; 3]) -> LinearForm {
        assert_eq!(self.vars, VarSet::Vogel);
        let mut coeffs = vec![Rat::zero(); 3];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[perm[i]] = c.clone();
        }
        LinearForm {
            vars: VarSet::Vogel,
            coeffs,
            constant: self.constant.clone(),
        }
    }

    /// Clears denominators: returns `(coeffs, constant, d)` with
    /// `self = (coeffs, constant) / d`, all integers, `d >= 1`.
    pub fn integerized(
        &self,
    ) -> (
        Vec<num_bigint::BigInt>,
        num_bigint::BigInt,
        num_bigint::BigInt,
    ) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut lcm = BigInt::from(1);
        for c in self.coeffs.iter().chain(std::iter::once(&self.constant)) {
            lcm = lcm.lcm(c.denom());
        }
        let scale = Rat::from_integer(lcm.clone());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * &scale).to_integer())
            .collect();
        let konst = (&self.constant * &scale).to_integer();
        (ints, konst, lcm)
    }

    /// The same direction with coprime integer coefficients: `self` times a
    /// positive rational. The zero form maps to itself.
    pub fn primitive(&self) -> LinearForm {
        use num_integer::Integer;
        let (ints, konst, _) = self.integerized();
        let mut content = konst.clone().abs();
        for i in &ints {
            content = content.gcd(i);
        }
        if content.is_zero() {
            return self.clone();
        }
        LinearForm {
            vars: self.vars,
            coeffs: ints
                .iter()
                .map(|i| Rat::from_integer(i / &content))
                .collect(),
            constant: Rat::from_integer(konst / content),
        }
    }
}

// Total order used for canonical multiset layout: priority coefficients
// first, then the constant. Constants therefore sort by value and come
// before forms with positive variable coefficients.
impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.vars, other.vars, "cannot order mixed variable lists");
        for &i in self.vars.priority() {
            match self.coeffs[i].cmp(&other.coeffs[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.constant.cmp(&other.constant)
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for &i in self.vars.priority() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let sym = self.vars.symbols()[i];
            if wrote {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != Rat::from_integer(1.into()) {
                write!(f, "{}*", format_rat(&a))?;
            }
            write!(f, "{sym}")?;
            wrote = true;
        }
        if !wrote {
            return write!(f, "{}", format_rat(&self.constant));
        }
        if !self.constant.is_zero() {
            write!(
                f,
                "{}{}",
                if self.constant.is_negative() {
                    "-"
                } else {
                    "+"
                },
                format_rat(&self.constant.abs())
            )?;
        }
        Ok(())
    }
}
