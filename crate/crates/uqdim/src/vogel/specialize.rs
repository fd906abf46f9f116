//! Specializes universal sinh products to a classical series, producing
//! symbolic-rank products over `N`.
//!
//! Substitution sends `alpha, beta` to the base-row constants and `gamma`
//! to the base-row affine function of the defining dimension `N`. Arguments
//! that vanish identically under the substitution are multiples of the
//! series line form; matching numerator/denominator pairs are resolved
//! symbolically to their rational ratio (the factor 2 of the sl line comes
//! from exactly this), an excess on the numerator side is retained as exact
//! zero factors (the formula's member vanishes for the whole series), and an
//! excess on the denominator side is divergent.

use num_traits::One;

use crate::symbolic::{int, rat, LinearForm, Rat, SinhProduct, SymbolicError, VarSet};
use crate::weyl::ClassicalSeries;

/// Base-row substitution: constants for `alpha`, `beta` and the affine
/// `gamma(N) = slope * N + offset`.
pub fn series_substitution(series: ClassicalSeries) -> (Rat, Rat, Rat, Rat) {
    match series {
        ClassicalSeries::Sl => (int(-2), int(2), int(1), int(0)),
        ClassicalSeries::So => (int(-2), int(4), int(1), int(-4)),
        ClassicalSeries::Sp => (int(-2), int(1), rat(1, 2), int(2)),
    }
}

fn image(form: &LinearForm, series: ClassicalSeries) -> LinearForm {
    let (a0, b0, slope, offset) = series_substitution(series);
    let c = form.coeffs();
    let n_coeff = &c[2] * slope;
    let constant = &c[0] * a0 + &c[1] * b0 + &c[2] * offset + form.constant_term();
    LinearForm::rank(n_coeff, constant)
}

pub fn specialize_to_series(
    p: &SinhProduct,
    series: ClassicalSeries,
) -> Result<SinhProduct, SymbolicError> {
    assert_eq!(p.vars(), VarSet::Vogel, "specialize needs universal forms");
    let split = |forms: &[LinearForm]| -> (Vec<LinearForm>, Vec<LinearForm>) {
        let mut images = Vec::new();
        let mut vanished = Vec::new();
        for f in forms {
            let img = image(f, series);
            if img.is_zero() {
                vanished.push(f.clone());
            } else {
                images.push(img);
            }
        }
        (images, vanished)
    };
    let (mut num, zero_num) = split(p.numerator());
    let (den, zero_den) = split(p.denominator());

    // Pair identically-vanishing arguments within proportionality classes of
    // their universal forms; each pair contributes the ratio of scalars.
    let mut prefactor = p.prefactor().clone();
    let mut classes: Vec<(LinearForm, Vec<Rat>, Vec<Rat>)> = Vec::new();
    let file =
        |form: &LinearForm, is_num: bool, classes: &mut Vec<(LinearForm, Vec<Rat>, Vec<Rat>)>| {
            for (rep, nums, dens) in classes.iter_mut() {
                if let Some(q) = form.proportional_ratio(rep) {
                    if is_num {
                        nums.push(q);
                    } else {
                        dens.push(q);
                    }
                    return;
                }
            }
            let entry = if is_num {
                (form.clone(), vec![Rat::one()], vec![])
            } else {
                (form.clone(), vec![], vec![Rat::one()])
            };
            classes.push(entry);
        };
    for f in &zero_num {
        file(f, true, &mut classes);
    }
    for f in &zero_den {
        file(f, false, &mut classes);
    }
    for (_, mut nums, dens) in classes {
        if dens.len() > nums.len() {
            return Err(SymbolicError::Divergent);
        }
        nums.sort();
        for (q_num, q_den) in nums.iter().zip(dens.iter()) {
            prefactor *= q_num / q_den;
        }
        // Unpaired vanishing numerator factors stay as exact zeros: the
        // specialized member of the multiplet is zero for this series.
        for _ in dens.len()..nums.len() {
            num.push(LinearForm::zero(VarSet::RankN));
        }
    }
    SinhProduct::new(VarSet::RankN, prefactor, num, den)
}
