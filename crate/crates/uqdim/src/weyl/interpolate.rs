//! Lifts numeric-rank quantum dimensions to symbolic-rank products.
//!
//! The canonical products at several consecutive admissible ranks are paired
//! slot by slot (arguments are sorted constants at each rank), each slot is
//! fitted with an affine form `a + b N` from the first two ranks, and the fit
//! is confirmed on every remaining sampled rank plus held-out substitution
//! checks. Any count mismatch or failed confirmation is reported as an
//! unstable fit: the base rank is chosen high enough that argument order is
//! stable across the sampled window.

use crate::symbolic::{int, LinearForm, Rat, Side, SinhProduct, VarSet};

use super::qdim::qdim_at_rank;
use super::rep::{ClassicalSeries, RepSpec};
use super::WeylError;

const SAMPLES: usize = 6;
const HELD_OUT: usize = 2;

/// Symbolic-rank product over `N` reproducing `qdim_at_rank` at every
/// admissible rank. `so` is fitted on even ranks (expressed in `N = 2n`) and
/// cross-checked on an odd rank; `sp` uses even `N` throughout.
pub fn rank_interpolate(spec: &RepSpec) -> Result<SinhProduct, WeylError> {
    let step: u32 = match spec.series() {
        ClassicalSeries::Sl => 1,
        ClassicalSeries::So | ClassicalSeries::Sp => 2,
    };
    let size = match spec {
        RepSpec::Sl { lambda, tau } => {
            lambda.height() + lambda.width() as usize + tau.height() + tau.width() as usize
        }
        RepSpec::So { diagram } | RepSpec::Sp { diagram } => {
            diagram.height() + diagram.width() as usize
        }
    };
    let mut base = 20u32.max(4 * size as u32);
    if step == 2 && base % 2 == 1 {
        base += 1;
    }
    while !spec.admissible_at(base) {
        base += step;
    }
    let ranks: Vec<u32> = (0..SAMPLES as u32).map(|k| base + k * step).collect();
    let samples: Vec<SinhProduct> = ranks
        .iter()
        .map(|&r| qdim_at_rank(spec, r))
        .collect::<Result<_, _>>()?;

    let first = &samples[0];
    for (p, &r) in samples.iter().zip(ranks.iter()) {
        if p.prefactor() != first.prefactor() {
            return Err(WeylError::FitUnstable(format!(
                "prefactor differs at rank {r}"
            )));
        }
        if p.numerator().len() != first.numerator().len()
            || p.denominator().len() != first.denominator().len()
        {
            return Err(WeylError::FitUnstable(format!(
                "factor counts differ at rank {r}"
            )));
        }
    }

    let fit_count = SAMPLES - HELD_OUT;
    let fit_side = |side: Side| -> Result<Vec<LinearForm>, WeylError> {
        let arg_at = |sample: usize, slot: usize| -> Rat {
            samples[sample].side(side)[slot]
                .as_constant()
                .expect("numeric-rank arguments are constants")
                .clone()
        };
        let r0 = int(i64::from(ranks[0]));
        let r1 = int(i64::from(ranks[1]));
        let mut forms = Vec::with_capacity(first.side(side).len());
        for slot in 0..first.side(side).len() {
            let v0 = arg_at(0, slot);
            let v1 = arg_at(1, slot);
            let slope = (&v1 - &v0) / (&r1 - &r0);
            let form = LinearForm::rank(slope.clone(), v0 - slope * &r0);
            for (sample, &r) in ranks.iter().enumerate().take(fit_count).skip(2) {
                if form.eval_rank(&int(i64::from(r))) != arg_at(sample, slot) {
                    return Err(WeylError::FitUnstable(format!(
                        "slot {slot} not affine across fitting ranks"
                    )));
                }
            }
            forms.push(form);
        }
        Ok(forms)
    };

    let result = SinhProduct::new(
        VarSet::RankN,
        first.prefactor().clone(),
        fit_side(Side::Numerator)?,
        fit_side(Side::Denominator)?,
    )?;

    // Held-out ranks, plus one odd rank for so where the representation
    // exists (the even/odd unification is checked, not assumed).
    let mut checks: Vec<u32> = ranks[fit_count..].to_vec();
    if spec.series() == ClassicalSeries::So {
        checks.push(base + 1);
    }
    for r in checks {
        if !spec.admissible_at(r) {
            continue;
        }
        let substituted = result.substitute_rank(&int(i64::from(r)))?;
        if substituted != qdim_at_rank(spec, r)? {
            return Err(WeylError::FitUnstable(format!(
                "held-out verification failed at rank {r}"
            )));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rat;
    use crate::young::diagram;

    fn n_form(b: Rat, a: Rat) -> LinearForm {
        LinearForm::rank(b, a)
    }

    fn constant(c: Rat) -> LinearForm {
        LinearForm::constant(VarSet::RankN, c)
    }

    #[test]
    fn sl_adjoint_reproduces_closed_form() {
        let spec = RepSpec::Sl {
            lambda: diagram(&[1]),
            tau: diagram(&[1]),
        };
        let p = rank_interpolate(&spec).unwrap();
        assert_eq!(p.prefactor(), &int(1));
        assert_eq!(
            p.numerator(),
            &[n_form(int(1), int(-1)), n_form(int(1), int(1))]
        );
        assert_eq!(p.denominator(), &[constant(int(1)), constant(int(1))]);
    }

    #[test]
    fn so_adjoint_reproduces_closed_form() {
        // num {N/2, N-1, N-4}, den {1, 2, N/2-2} in x/2 units
        let spec = RepSpec::So {
            diagram: diagram(&[1, 1]),
        };
        let p = rank_interpolate(&spec).unwrap();
        let mut num = p.numerator().to_vec();
        num.sort();
        let mut expect_num = vec![
            n_form(rat(1, 2), int(0)),
            n_form(int(1), int(-1)),
            n_form(int(1), int(-4)),
        ];
        expect_num.sort();
        assert_eq!(num, expect_num);
        let mut expect_den = [
            constant(int(1)),
            constant(int(2)),
            n_form(rat(1, 2), int(-2)),
        ];
        expect_den.sort();
        assert_eq!(p.denominator(), &expect_den[..]);
    }

    #[test]
    fn sp_adjoint_reproduces_closed_form() {
        // num {N/4, (N+1)/2, (N+4)/2}, den {1/2, 1, (N+4)/4}
        let spec = RepSpec::Sp {
            diagram: diagram(&[2]),
        };
        let p = rank_interpolate(&spec).unwrap();
        let mut expect_num = [
            n_form(rat(1, 4), int(0)),
            n_form(rat(1, 2), rat(1, 2)),
            n_form(rat(1, 2), int(2)),
        ];
        expect_num.sort();
        assert_eq!(p.numerator(), &expect_num[..]);
        let mut expect_den = [
            constant(rat(1, 2)),
            constant(int(1)),
            n_form(rat(1, 4), int(1)),
        ];
        expect_den.sort();
        assert_eq!(p.denominator(), &expect_den[..]);
    }

    #[test]
    fn substitution_matches_direct_computation_at_held_out_ranks() {
        let spec = RepSpec::Sl {
            lambda: diagram(&[2]),
            tau: diagram(&[1, 1]),
        };
        let p = rank_interpolate(&spec).unwrap();
        for rank in [9u32, 17, 30] {
            assert_eq!(
                p.substitute_rank(&int(i64::from(rank))).unwrap(),
                qdim_at_rank(&spec, rank).unwrap()
            );
        }
    }
}
