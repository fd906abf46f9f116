//! Reconstruction of the gamma-independent denominator factor of a
//! universal quantum dimension from the three classical members.
//!
//! Given an sl composite pair (lambda, tau) of equal areas, the associated
//! so and sp members are the vertical and horizontal diagram sums. The
//! rank-independent sine arguments of the three quantum dimension
//! denominators are extracted from the symbolic-rank products; the sl
//! multiset fixes the `x` coefficients and the so multiset the `y`
//! coefficients of the parameterization `x_i w_x + y_i w_y` with
//! `w_x = -(2 alpha + beta)/2`, `w_y = (alpha + beta)/2`. The sp multiset
//! pins the pairing between the two, via an exhaustive search over multiset
//! bijections. When the sl member is moved by the Dynkin-diagram Z2
//! (lambda != tau), a correction factor `sinh((alpha+beta)c x/2) /
//! sinh((alpha+beta)c x/4)` is active: it cancels one so argument
//! (`2c = y_k`, observed as `y_k/2`) and replaces one sp argument `y_k/2`
//! by `y_k/4`. The solver inverts exactly that bookkeeping.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::symbolic::{
    format_rat, int, rat, LinearForm, Rat, RationalFactorForm, Side, SinhProduct, SymbolicError,
    VarSet,
};
use crate::weyl::{rank_interpolate, ClassicalSeries, RepSpec, WeylError};
use crate::young::YoungDiagram;

/// Series weights of the denominator parameterization.
pub struct WVector;

impl WVector {
    /// `w_x = -(2 alpha + beta)/2` as a universal form.
    pub fn w_x() -> LinearForm {
        LinearForm::vogel(int(-1), rat(-1, 2), int(0))
    }

    /// `w_y = (alpha + beta)/2` as a universal form.
    pub fn w_y() -> LinearForm {
        LinearForm::vogel(rat(1, 2), rat(1, 2), int(0))
    }

    /// Numeric `(w_x, w_y)` per classical series: sl (1, 0), so (0, 1),
    /// sp (3/2, -1/2).
    pub fn at_series(series: ClassicalSeries) -> (Rat, Rat) {
        use ClassicalSeries::*;
        match series {
            Sl => (int(1), int(0)),
            So => (int(0), int(1)),
            Sp => (rat(3, 2), rat(-1, 2)),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ReconstructError {
    /// The two sl diagrams must have equal areas.
    AreaMismatch {
        lambda: u64,
        tau: u64,
    },
    /// The three gamma-free multisets do not have a common size; the raw
    /// multisets are reported.
    Infeasible {
        sl: Vec<Rat>,
        so: Vec<Rat>,
        sp: Vec<Rat>,
    },
    /// A member has rank-independent numerator sines; the reconstruction
    /// covers denominator factors only.
    NumeratorConstants {
        series: ClassicalSeries,
        args: Vec<Rat>,
    },
    /// The exhaustive search bound (16 factors) was exceeded.
    ProblemTooLarge(usize),
    Weyl(WeylError),
    Symbolic(SymbolicError),
}

impl fmt::Display for ReconstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructError::AreaMismatch { lambda, tau } => {
                write!(f, "diagram areas differ: {lambda} vs {tau}")
            }
            ReconstructError::Infeasible { sl, so, sp } => {
                let fmt_set = |v: &[Rat]| v.iter().map(format_rat).collect::<Vec<_>>().join(",");
                write!(
                    f,
                    "gamma-free multisets have mismatched sizes: sl {{{}}}, so {{{}}}, sp {{{}}}",
                    fmt_set(sl),
                    fmt_set(so),
                    fmt_set(sp)
                )
            }
            ReconstructError::NumeratorConstants { series, args } => {
                let set = args.iter().map(format_rat).collect::<Vec<_>>().join(",");
                write!(
                    f,
                    "the {series} member has rank-independent numerator sines {{{set}}}; \
                     only denominator factors are reconstructed"
                )
            }
            ReconstructError::ProblemTooLarge(n) => {
                write!(
                    f,
                    "{n} denominator factors exceed the exhaustive-search bound of 16"
                )
            }
            ReconstructError::Weyl(e) => write!(f, "{e}"),
            ReconstructError::Symbolic(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ReconstructError {}

impl From<WeylError> for ReconstructError {
    fn from(e: WeylError) -> Self {
        ReconstructError::Weyl(e)
    }
}

impl From<SymbolicError> for ReconstructError {
    fn from(e: SymbolicError) -> Self {
        ReconstructError::Symbolic(e)
    }
}

/// The extracted data the solver works on.
#[derive(Clone, Debug)]
pub struct ReconstructionProblem {
    pub lambda: YoungDiagram,
    pub tau: YoungDiagram,
    /// Rank-independent sl denominator arguments (x/2 units).
    pub sl_args: Vec<Rat>,
    /// Rank-independent so denominator arguments.
    pub so_args: Vec<Rat>,
    /// Rank-independent sp denominator arguments.
    pub sp_args: Vec<Rat>,
    /// Whether the Z2 correction factor participates (`lambda != tau`).
    pub z2_active: bool,
}

/// One pairing found by the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionSolution {
    /// `(x_i, y_i)` pairs, sorted.
    pub pairs: Vec<(Rat, Rat)>,
    /// The so argument cancelled by the correction factor, when active.
    pub y_k: Option<Rat>,
}

impl ReconstructionSolution {
    /// Canonical forms `x_i w_x + y_i w_y`, sign-normalized and sorted.
    pub fn pair_args(&self) -> Vec<LinearForm> {
        let wx = WVector::w_x();
        let wy = WVector::w_y();
        let mut forms: Vec<LinearForm> = self
            .pairs
            .iter()
            .map(|(x, y)| wx.scale(x).add(&wy.scale(y)).canonical_sign().0)
            .collect();
        forms.sort();
        forms
    }

    /// The reconstructed product of sines (the universal denominator itself,
    /// as a standalone product), up to overall sign.
    pub fn denominator_product(&self) -> SinhProduct {
        SinhProduct::new(VarSet::Vogel, int(1), self.pair_args(), vec![])
            .expect("pair forms are nonzero")
    }

    /// The full gamma-free factor of the universal quantum dimension: the
    /// reciprocal of the denominator sines times the correction factor when
    /// one is active.
    pub fn universal_factor(&self) -> SinhProduct {
        let mut num = Vec::new();
        let mut den = self.pair_args();
        if let Some(y_k) = &self.y_k {
            // 2c = y_k: numerator sinh((alpha+beta)c x/2), denominator
            // sinh((alpha+beta)c x/4), stored in x/2 units.
            let c = y_k / int(2);
            let line = LinearForm::vogel(int(1), int(1), int(0));
            num.push(line.scale(&c));
            den.push(line.scale(&(c / int(2))));
        }
        SinhProduct::new(VarSet::Vogel, int(1), num, den).expect("correction forms are nonzero")
    }

    /// The x -> 0 factor list of the reconstructed denominator: each
    /// sinh(u x/2) contributes the form u, normalized to primitive integer
    /// coefficients. Canonical up to overall sign and rational scale.
    pub fn limit_polynomial(&self) -> RationalFactorForm {
        let factors: Vec<LinearForm> = self.pair_args().iter().map(LinearForm::primitive).collect();
        RationalFactorForm::new(int(1), factors, vec![]).expect("nonzero factors")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs": self.pairs.iter()
                .map(|(x, y)| json!([format_rat(x), format_rat(y)]))
                .collect::<Vec<_>>(),
            "y_k": match &self.y_k {
                Some(y) => Value::String(format_rat(y)),
                None => Value::Null,
            },
            "universal_denominator": self.denominator_product().to_json(),
            "limit_polynomial": self.limit_polynomial().numerator().iter()
                .map(form_json)
                .collect::<Vec<_>>(),
        })
    }
}

fn form_json(f: &LinearForm) -> Value {
    let mut obj = serde_json::Map::new();
    for (sym, c) in f.vars().symbols().iter().zip(f.coeffs()) {
        obj.insert((*sym).into(), Value::String(format_rat(c)));
    }
    obj.insert("const".into(), Value::String(format_rat(f.constant_term())));
    Value::Object(obj)
}

/// Constant terms of the arguments with zero rank coefficient on one side.
pub fn gamma_free_args(p: &SinhProduct, side: Side) -> Vec<Rat> {
    assert_eq!(
        p.vars(),
        VarSet::RankN,
        "gamma-free extraction needs N-forms"
    );
    p.constant_args(side)
}

/// Builds the reconstruction data for an sl pair: associated so and sp
/// diagrams by the two sums, then the three gamma-free denominator
/// multisets from symbolic-rank interpolation.
pub fn build_problem(
    lambda: &YoungDiagram,
    tau: &YoungDiagram,
) -> Result<ReconstructionProblem, ReconstructError> {
    if lambda.area() != tau.area() {
        return Err(ReconstructError::AreaMismatch {
            lambda: lambda.area(),
            tau: tau.area(),
        });
    }
    let specs = [
        RepSpec::Sl {
            lambda: lambda.clone(),
            tau: tau.clone(),
        },
        RepSpec::So {
            diagram: lambda.vertical_sum(tau),
        },
        RepSpec::Sp {
            diagram: lambda.horizontal_sum(tau),
        },
    ];
    let extract = |spec: &RepSpec| -> Result<Vec<Rat>, ReconstructError> {
        let product = rank_interpolate(spec)?;
        // The method only covers rank-independent sines in the denominator;
        // a surviving constant numerator argument puts the multiplet outside
        // its scope.
        let stray = gamma_free_args(&product, Side::Numerator);
        if !stray.is_empty() {
            return Err(ReconstructError::NumeratorConstants {
                series: spec.series(),
                args: stray,
            });
        }
        Ok(gamma_free_args(&product, Side::Denominator))
    };
    let sl_args = extract(&specs[0])?;
    let so_args = extract(&specs[1])?;
    let sp_args = extract(&specs[2])?;
    Ok(ReconstructionProblem {
        lambda: lambda.clone(),
        tau: tau.clone(),
        sl_args,
        so_args,
        sp_args,
        z2_active: lambda != tau,
    })
}

/// Working stack of pairs during the distribution recursion.
type PairStack = Vec<(Rat, Rat)>;

/// A candidate true so multiset with its cancelled argument, when active.
type Candidate = (Vec<Rat>, Option<Rat>);

/// A sorted pair list with the cancelled argument; the solution dedup key.
type SolutionKey = (Vec<(Rat, Rat)>, Option<Rat>);

/// Exhaustive solve: enumerate candidate true so multisets (inverting the
/// correction-factor replacement when active), then all multiset bijections
/// between the sl and so multisets, and keep the pairings whose sp image
/// matches. Returns all solutions, deduplicated and sorted; an empty list
/// means no pairing works.
pub fn solve(
    problem: &ReconstructionProblem,
) -> Result<Vec<ReconstructionSolution>, ReconstructError> {
    if problem.so_args.len() > 16 {
        return Err(ReconstructError::ProblemTooLarge(problem.so_args.len()));
    }
    if problem.sl_args.len() != problem.so_args.len()
        || problem.sl_args.len() != problem.sp_args.len()
    {
        return Err(ReconstructError::Infeasible {
            sl: problem.sl_args.clone(),
            so: problem.so_args.clone(),
            sp: problem.sp_args.clone(),
        });
    }

    let mut sp_sorted = problem.sp_args.clone();
    sp_sorted.sort();

    // Candidate (true y multiset, y_k): without the correction the observed
    // so multiset is already the truth; with it, one observed entry e is
    // y_k/2 for y_k = 2e.
    let mut candidates: Vec<Candidate> = Vec::new();
    if problem.z2_active {
        let mut seen = BTreeSet::new();
        for e in &problem.so_args {
            if !seen.insert(e.clone()) {
                continue;
            }
            let mut y = problem.so_args.clone();
            let pos = y.iter().position(|v| v == e).unwrap();
            y[pos] = e * int(2);
            y.sort();
            candidates.push((y, Some(e * int(2))));
        }
    } else {
        let mut y = problem.so_args.clone();
        y.sort();
        candidates.push((y, None));
    }

    let mut solutions: BTreeSet<SolutionKey> = BTreeSet::new();
    for (y_multiset, y_k) in candidates {
        // Group both multisets by distinct value.
        let mut xs: Vec<(Rat, usize)> = Vec::new();
        for v in &problem.sl_args {
            match xs.iter_mut().find(|(u, _)| u == v) {
                Some((_, k)) => *k += 1,
                None => xs.push((v.clone(), 1)),
            }
        }
        let mut ys: Vec<(Rat, usize)> = Vec::new();
        for v in &y_multiset {
            match ys.iter_mut().find(|(u, _)| u == v) {
                Some((_, k)) => *k += 1,
                None => ys.push((v.clone(), 1)),
            }
        }
        // Enumerate every way to distribute the multiplicity of each
        // distinct x value over the distinct y values.
        let mut remaining: Vec<usize> = ys.iter().map(|(_, k)| *k).collect();
        let mut pairs: Vec<(Rat, Rat)> = Vec::new();
        distribute(
            &xs,
            &ys,
            0,
            0,
            &mut remaining,
            &mut pairs,
            &mut |pairs: &[(Rat, Rat)]| {
                // sp image: {3/2 x - 1/2 y}, with the correction replacing
                // one occurrence of y_k/2 by y_k/4.
                let mut image: Vec<Rat> = pairs
                    .iter()
                    .map(|(x, y)| rat(3, 2) * x - rat(1, 2) * y)
                    .collect();
                if let Some(y_k) = &y_k {
                    let half = y_k / int(2);
                    match image.iter().position(|v| *v == half) {
                        Some(pos) => image[pos] = y_k / int(4),
                        None => return,
                    }
                }
                image.sort();
                if image != sp_sorted {
                    return;
                }
                // Universal arguments must be nonzero forms.
                let wx = WVector::w_x();
                let wy = WVector::w_y();
                if pairs
                    .iter()
                    .any(|(x, y)| wx.scale(x).add(&wy.scale(y)).is_zero())
                {
                    return;
                }
                let mut sorted = pairs.to_vec();
                sorted.sort();
                solutions.insert((sorted, y_k.clone()));
            },
        );
    }

    Ok(solutions
        .into_iter()
        .map(|(pairs, y_k)| ReconstructionSolution { pairs, y_k })
        .collect())
}

/// Recursively assigns, for each distinct x value, how many of its copies
/// pair with each distinct y value; `emit` fires for every complete
/// assignment with the flat pair list.
fn distribute(
    xs: &[(Rat, usize)],
    ys: &[(Rat, usize)],
    xi: usize,
    need: usize,
    remaining: &mut Vec<usize>,
    pairs: &mut PairStack,
    emit: &mut impl FnMut(&[(Rat, Rat)]),
) {
    if xi == xs.len() {
        emit(pairs);
        return;
    }
    let (x_val, x_count) = &xs[xi];
    let need = if need == 0 { *x_count } else { need };
    // Choose how many copies of x_val go to each y slot, left to right.
    fn rec(
        x_val: &Rat,
        left: usize,
        yj: usize,
        ys: &[(Rat, usize)],
        remaining: &mut Vec<usize>,
        pairs: &mut PairStack,
        next: &mut dyn FnMut(&mut Vec<usize>, &mut PairStack),
    ) {
        if left == 0 {
            next(remaining, pairs);
            return;
        }
        if yj == ys.len() {
            return;
        }
        let max_here = remaining[yj].min(left);
        for take in (0..=max_here).rev() {
            remaining[yj] -= take;
            for _ in 0..take {
                pairs.push((x_val.clone(), ys[yj].0.clone()));
            }
            rec(x_val, left - take, yj + 1, ys, remaining, pairs, next);
            for _ in 0..take {
                pairs.pop();
            }
            remaining[yj] += take;
        }
    }
    let mut cont = |remaining: &mut Vec<usize>, pairs: &mut PairStack| {
        distribute(xs, ys, xi + 1, 0, remaining, pairs, emit);
    };
    rec(x_val, need, 0, ys, remaining, pairs, &mut cont);
}

/// Machine check of a solution against its problem: the pair data must
/// reproduce all three observed multisets under the series weights, with
/// the correction bookkeeping applied on so and sp.
pub fn check_soundness(
    problem: &ReconstructionProblem,
    solution: &ReconstructionSolution,
) -> Result<(), String> {
    let sorted = |mut v: Vec<Rat>| {
        v.sort();
        v
    };
    let observed_sl = sorted(problem.sl_args.clone());
    let observed_so = sorted(problem.so_args.clone());
    let observed_sp = sorted(problem.sp_args.clone());

    let xs = sorted(solution.pairs.iter().map(|(x, _)| x.clone()).collect());
    if xs != observed_sl {
        return Err("x multiset does not match the sl arguments".into());
    }

    let mut so_image: Vec<Rat> = solution.pairs.iter().map(|(_, y)| y.clone()).collect();
    if let Some(y_k) = &solution.y_k {
        let pos = so_image
            .iter()
            .position(|v| v == y_k)
            .ok_or("y_k missing from the y multiset")?;
        so_image[pos] = y_k / int(2);
    }
    if sorted(so_image) != observed_so {
        return Err("y multiset does not match the so arguments".into());
    }

    let mut sp_image: Vec<Rat> = solution
        .pairs
        .iter()
        .map(|(x, y)| rat(3, 2) * x - rat(1, 2) * y)
        .collect();
    if let Some(y_k) = &solution.y_k {
        let half = y_k / int(2);
        let pos = sp_image
            .iter()
            .position(|v| *v == half)
            .ok_or("y_k/2 missing from the sp image")?;
        sp_image[pos] = y_k / int(4);
    }
    if sorted(sp_image) != observed_sp {
        return Err("sp image does not match the sp arguments".into());
    }
    if solution
        .pairs
        .iter()
        .any(|(x, y)| x.is_zero() && y.is_zero())
    {
        return Err("zero universal argument".into());
    }
    Ok(())
}
