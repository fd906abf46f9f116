//! Verification harness: universal formulas against direct Weyl-line
//! computations, and the square-of-adjoint decomposition identities.

use serde_json::{json, Map, Value};

use crate::symbolic::{format_rat, int, rat_to_f64, Assignment, Rat};
use crate::weyl::{dimension, qdim_at_rank, ClassicalSeries, RepSpec};

use super::formulas::{formula, FormulaBody, FormulaEntry};
use super::point::{vogel_point, Family, Permutation, VogelPoint};

/// One failed comparison inside [`VerifyReport`].
#[derive(Clone, Debug)]
pub struct VerifyFailure {
    pub rank: u32,
    /// Weyl-line sample; 0.0 for exact (x-independent) comparisons.
    pub x: f64,
    pub universal: f64,
    pub weyl: f64,
}

/// Outcome of sweeping one formula against one series.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub formula: String,
    pub series: String,
    pub max_rel_dev: f64,
    /// Number of (rank, x) comparisons actually made; inadmissible ranks are
    /// skipped because the associated representation is absent there.
    pub checks: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "formula": self.formula,
            "series": self.series,
            "max_rel_dev": self.max_rel_dev,
            "checks": self.checks,
            "failures": self.failures.iter().map(|f| json!({
                "rank": f.rank,
                "x": f.x,
                "universal": f.universal,
                "weyl": f.weyl,
            })).collect::<Vec<_>>(),
        })
    }
}

fn rel_dev(universal: f64, weyl: f64) -> f64 {
    if weyl == 0.0 {
        universal.abs()
    } else {
        (universal - weyl).abs() / weyl.abs()
    }
}

/// The per-series representation a formula entry decomposes to.
pub fn associated_spec(entry: &FormulaEntry, series: ClassicalSeries) -> RepSpec {
    match series {
        ClassicalSeries::Sl => RepSpec::Sl {
            lambda: entry.sl_pair.0.clone(),
            tau: entry.sl_pair.1.clone(),
        },
        ClassicalSeries::So => RepSpec::So {
            diagram: entry.so_diagram.clone(),
        },
        ClassicalSeries::Sp => RepSpec::Sp {
            diagram: entry.sp_diagram.clone(),
        },
    }
}

/// Compares the universal value at each series point against the direct
/// Weyl-line value of the associated representation, with the factor 2 for
/// Z2-moved sl members. Sinh bodies are compared numerically at each `x`;
/// the x-independent rational body is compared exactly (one check per rank).
pub fn verify_formula(
    entry: &FormulaEntry,
    series: ClassicalSeries,
    ranks: &[u32],
    x_samples: &[f64],
    tol: f64,
) -> VerifyReport {
    let family = Family::classical(series);
    let spec = associated_spec(entry, series);
    let z2_factor: f64 = if entry.z2 && series == ClassicalSeries::Sl {
        2.0
    } else {
        1.0
    };
    let mut report = VerifyReport {
        formula: entry.name.to_string(),
        series: series.name().to_string(),
        max_rel_dev: 0.0,
        checks: 0,
        failures: Vec::new(),
    };
    for &rank in ranks {
        if !spec.admissible_at(rank) {
            continue;
        }
        let point = match vogel_point(family, &int(i64::from(rank)), Permutation::IDENTITY) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let asg = point.assignment();
        match &entry.body {
            FormulaBody::Sinh(body) => {
                let q = match qdim_at_rank(&spec, rank) {
                    Ok(q) => q,
                    Err(_) => continue,
                };
                let rank_asg = Assignment::rank(int(i64::from(rank)));
                // Evaluation along the series line. Individual ranks can sit
                // on a secondary degeneration where the pointwise 0/0 has no
                // direction-independent value; there the series-specialized
                // product (vanishing pair already cancelled on the line)
                // carries the formula's value.
                let on_line = super::specialize::specialize_to_series(body, series).ok();
                for &x in x_samples {
                    let universal = match body.evaluate(&asg, x) {
                        Ok(v) => v,
                        Err(crate::symbolic::SymbolicError::UnpairedVanishing) => on_line
                            .as_ref()
                            .and_then(|p| p.evaluate(&rank_asg, x).ok())
                            .unwrap_or(f64::NAN),
                        Err(_) => f64::NAN,
                    };
                    let weyl = match q.evaluate(&rank_asg, x) {
                        Ok(v) => z2_factor * v,
                        Err(_) => f64::NAN,
                    };
                    let dev = rel_dev(universal, weyl);
                    report.checks += 1;
                    if dev.is_nan() || dev >= tol {
                        report.failures.push(VerifyFailure {
                            rank,
                            x,
                            universal,
                            weyl,
                        });
                    }
                    if dev.is_finite() {
                        report.max_rel_dev = report.max_rel_dev.max(dev);
                    }
                }
            }
            FormulaBody::Rational(body) => {
                let universal = match body.evaluate_rational(&asg) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let weyl = match dimension(&spec, rank) {
                    Ok(d) => {
                        let d = Rat::from_integer(d);
                        if entry.z2 && series == ClassicalSeries::Sl {
                            d * int(2)
                        } else {
                            d
                        }
                    }
                    Err(_) => continue,
                };
                report.checks += 1;
                if universal != weyl {
                    report.failures.push(VerifyFailure {
                        rank,
                        x: 0.0,
                        universal: rat_to_f64(&universal),
                        weyl: rat_to_f64(&weyl),
                    });
                    report.max_rel_dev = report
                        .max_rel_dev
                        .max(rel_dev(rat_to_f64(&universal), rat_to_f64(&weyl)));
                }
            }
        }
    }
    report
}

/// One failed identity inside [`SquareReport`].
#[derive(Clone, Debug)]
pub struct SquareFailure {
    pub x: f64,
    pub identity: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of the square-of-adjoint checks at one point.
#[derive(Clone, Debug)]
pub struct SquareReport {
    pub point: VogelPoint,
    pub max_rel_dev: f64,
    pub checks: usize,
    pub failures: Vec<SquareFailure>,
}

impl SquareReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert(
            "family".into(),
            Value::String(self.point.family().to_string()),
        );
        obj.insert(
            "parameter".into(),
            Value::String(format_rat(self.point.parameter())),
        );
        obj.insert(
            "alpha".into(),
            Value::String(format_rat(self.point.alpha())),
        );
        obj.insert("beta".into(), Value::String(format_rat(self.point.beta())));
        obj.insert(
            "gamma".into(),
            Value::String(format_rat(self.point.gamma())),
        );
        obj.insert(
            "max_rel_dev".into(),
            Value::Number(
                serde_json::Number::from_f64(self.max_rel_dev)
                    .unwrap_or_else(|| serde_json::Number::from(0)),
            ),
        );
        obj.insert("checks".into(), Value::Number(self.checks.into()));
        obj.insert(
            "failures".into(),
            Value::Array(
                self.failures
                    .iter()
                    .map(|f| {
                        json!({
                            "x": f.x,
                            "identity": f.identity,
                            "lhs": f.lhs,
                            "rhs": f.rhs,
                        })
                    })
                    .collect(),
            ),
        );
        Value::Object(obj)
    }
}

/// Checks the symmetric and antisymmetric square decompositions of the
/// adjoint at one point: with `d(x)` the adjoint value,
/// `(d(x)^2 + d(2x))/2 = 1 + sum of the three symmetric members` and
/// `(d(x)^2 - d(2x))/2 = d(x) + X2`. Works at any point of the plane, no
/// root-system data involved.
pub fn square_identities(point: &VogelPoint, x_samples: &[f64], tol: f64) -> SquareReport {
    let asg = point.assignment();
    let adjoint = formula("adjoint").expect("builtin");
    let x2 = formula("X2").expect("builtin");
    let y2: Vec<FormulaEntry> = ["Y2_alpha", "Y2_beta", "Y2_gamma"]
        .iter()
        .map(|n| formula(n).expect("builtin"))
        .collect();
    // Classical table points can sit on a secondary degeneration of one of
    // the bodies (a pointwise 0/0 with no plane limit); there the value
    // along the series line is the one the decomposition refers to.
    let series = match point.family() {
        Family::Sl => Some(ClassicalSeries::Sl),
        Family::So => Some(ClassicalSeries::So),
        Family::Sp => Some(ClassicalSeries::Sp),
        _ => None,
    };
    let rank_asg = Assignment::rank(point.parameter().clone());
    let eval = |entry: &FormulaEntry, x: f64| -> f64 {
        let body = entry.sinh_body().expect("sinh bodies only");
        match body.evaluate(&asg, x) {
            Ok(v) => v,
            Err(crate::symbolic::SymbolicError::UnpairedVanishing) => series
                .and_then(|s| super::specialize::specialize_to_series(body, s).ok())
                .and_then(|p| p.evaluate(&rank_asg, x).ok())
                .unwrap_or(f64::NAN),
            Err(_) => f64::NAN,
        }
    };
    let mut report = SquareReport {
        point: point.clone(),
        max_rel_dev: 0.0,
        checks: 0,
        failures: Vec::new(),
    };
    for &x in x_samples {
        let d = eval(&adjoint, x);
        let d2 = eval(&adjoint, 2.0 * x);
        let sym_lhs = (d * d + d2) / 2.0;
        let sym_rhs = 1.0 + y2.iter().map(|e| eval(e, x)).sum::<f64>();
        let anti_lhs = (d * d - d2) / 2.0;
        let anti_rhs = d + eval(&x2, x);
        for (identity, lhs, rhs) in [
            ("symmetric", sym_lhs, sym_rhs),
            ("antisymmetric", anti_lhs, anti_rhs),
        ] {
            let dev = rel_dev(lhs, rhs);
            report.checks += 1;
            if dev.is_nan() || dev >= tol {
                report.failures.push(SquareFailure {
                    x,
                    identity,
                    lhs,
                    rhs,
                });
            }
            if dev.is_finite() {
                report.max_rel_dev = report.max_rel_dev.max(dev);
            }
        }
    }
    report
}

/// Classical x -> 0 consistency: dim g^2 = dim S^2 + dim wedge^2 expressed
/// through the universal members; exact rational check.
pub fn square_dimension_identity(
    point: &VogelPoint,
) -> Result<bool, crate::symbolic::SymbolicError> {
    let asg = point.assignment();
    let value = |name: &str| -> Result<Rat, crate::symbolic::SymbolicError> {
        formula(name)
            .expect("builtin")
            .sinh_body()
            .expect("sinh")
            .classical_limit(&asg)
    };
    let d = value("adjoint")?;
    let sym = int(1) + value("Y2_alpha")? + value("Y2_beta")? + value("Y2_gamma")?;
    let anti = &d + &value("X2")?;
    Ok(&d * &d == sym + anti)
}

/// Convenience used by reports: an f64 that serde_json can always carry.
#[allow(dead_code)]
fn finite(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::MAX
    }
}
