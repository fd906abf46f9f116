//! Command-line interface: quantum dimensions, symbolic-rank interpolation,
//! gamma-free factor reconstruction, formula verification, exact dimension
//! evaluation, and the square-of-adjoint checks.
//!
//! One JSON document or text/LaTeX block goes to stdout; diagnostics go to
//! stderr. Exit codes: 0 success, 1 no solution or verification failure,
//! 2 invalid input, 3 internal inconsistency (e.g. an unstable fit).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use uqdim::reconstruct::{build_problem, solve, ReconstructError};
use uqdim::symbolic::{format_rat, parse_rat, Assignment, Rat, SinhProduct};
use uqdim::vogel::{
    formula, square_identities, verify_formula, vogel_point, Family, FormulaBody, Permutation,
};
use uqdim::weyl::{qdim_at_rank, rank_interpolate, ClassicalSeries, RepSpec, WeylError};
use uqdim::young::YoungDiagram;

#[derive(Parser)]
#[command(
    name = "uqdim",
    about = "Exact quantum dimensions of classical Lie algebra representations \
             and universal-formula reconstruction",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Sl,
    So,
    Sp,
}

impl From<SeriesArg> for ClassicalSeries {
    fn from(s: SeriesArg) -> Self {
        match s {
            SeriesArg::Sl => ClassicalSeries::Sl,
            SeriesArg::So => ClassicalSeries::So,
            SeriesArg::Sp => ClassicalSeries::Sp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sl,
    So,
    Sp,
    Exc,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sl => Family::Sl,
            FamilyArg::So => Family::So,
            FamilyArg::Sp => Family::Sp,
            FamilyArg::Exc => Family::Exc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct DiagramArgs {
    /// First composite diagram for sl, e.g. "3,1"
    #[arg(long)]
    lambda: Option<String>,
    /// Second composite diagram for sl (defaults to the empty diagram)
    #[arg(long)]
    tau: Option<String>,
    /// Single diagram for so/sp
    #[arg(long)]
    diagram: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum dimension of a representation at a numeric rank
    Qdim {
        #[arg(long, value_enum)]
        series: SeriesArg,
        /// Defining dimension: N of sl(N), so(N), sp(N) (even for sp)
        #[arg(long)]
        rank: u32,
        #[command(flatten)]
        diagrams: DiagramArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Symbolic-rank quantum dimension as sinh factors with arguments
    /// linear in N
    Interp {
        #[arg(long, value_enum)]
        series: SeriesArg,
        #[command(flatten)]
        diagrams: DiagramArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reconstruct the gamma-independent denominator factor from an sl pair
    Reconstruct {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        tau: String,
        /// Print every pairing the search finds, not just the first
        #[arg(long)]
        all_solutions: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a built-in universal formula against direct computations
    Verify {
        /// adjoint | X2 | Y2_alpha | Y2_beta | Y2_gamma | dimE
        #[arg(long)]
        formula: String,
        /// Comma-separated series list, e.g. "sl,so,sp"
        #[arg(long)]
        series: String,
        /// Inclusive rank range "A:B"
        #[arg(long)]
        ranks: String,
        /// Comma-separated Weyl-line samples, e.g. "0.1,0.5"
        #[arg(long)]
        x: String,
        #[arg(long)]
        tol: f64,
    },
    /// Exact value of a built-in formula at an explicit parameter point
    Dim {
        #[arg(long)]
        formula: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Square-of-adjoint decomposition identities at a table point
    SquareCheck {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family parameter: rank for classical rows, n for the
        /// exceptional line
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        tol: f64,
    },
}

/// Errors that map to "invalid input" (exit code 2).
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_diagram(s: &str) -> Result<YoungDiagram, InputError> {
    s.parse::<YoungDiagram>().map_err(InputError::from)
}

fn parse_spec(series: SeriesArg, diagrams: &DiagramArgs) -> Result<RepSpec, InputError> {
    match ClassicalSeries::from(series) {
        ClassicalSeries::Sl => {
            if diagrams.diagram.is_some() {
                return Err(InputError(
                    "--diagram is for so/sp; use --lambda/--tau".into(),
                ));
            }
            let lambda = parse_diagram(
                diagrams
                    .lambda
                    .as_deref()
                    .ok_or(InputError("sl needs --lambda".into()))?,
            )?;
            let tau = parse_diagram(diagrams.tau.as_deref().unwrap_or(""))?;
            Ok(RepSpec::Sl { lambda, tau })
        }
        series => {
            if diagrams.lambda.is_some() || diagrams.tau.is_some() {
                return Err(InputError(
                    "so/sp take --diagram, not --lambda/--tau".into(),
                ));
            }
            let diagram = parse_diagram(
                diagrams
                    .diagram
                    .as_deref()
                    .ok_or(InputError("so/sp need --diagram".into()))?,
            )?;
            Ok(match series {
                ClassicalSeries::So => RepSpec::So { diagram },
                ClassicalSeries::Sp => RepSpec::Sp { diagram },
                ClassicalSeries::Sl => unreachable!(),
            })
        }
    }
}

fn parse_rank_range(s: &str) -> Result<Vec<u32>, InputError> {
    let (a, b) = s
        .split_once(':')
        .ok_or(InputError(format!("rank range must be A:B, got `{s}`")))?;
    let a: u32 = a
        .parse()
        .map_err(|_| InputError(format!("bad rank `{a}`")))?;
    let b: u32 = b
        .parse()
        .map_err(|_| InputError(format!("bad rank `{b}`")))?;
    if a > b {
        return Err(InputError(format!("empty rank range `{s}`")));
    }
    Ok((a..=b).collect())
}

fn parse_x_list(s: &str) -> Result<Vec<f64>, InputError> {
    let xs: Result<Vec<f64>, _> = s.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let xs = xs.map_err(|_| InputError(format!("bad x list `{s}`")))?;
    if xs.is_empty() || xs.iter().any(|&x| !(x.is_finite() && x > 0.0)) {
        return Err(InputError("x samples must be positive and finite".into()));
    }
    Ok(xs)
}

fn parse_series_list(s: &str) -> Result<Vec<ClassicalSeries>, InputError> {
    s.split(',')
        .map(|t| match t.trim() {
            "sl" => Ok(ClassicalSeries::Sl),
            "so" => Ok(ClassicalSeries::So),
            "sp" => Ok(ClassicalSeries::Sp),
            other => Err(InputError(format!("unknown series `{other}`"))),
        })
        .collect()
}

fn print_product(p: &SinhProduct, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&p.to_json()).expect("json")
        ),
        Format::Latex => println!("{}", p.to_latex()),
    }
}

fn weyl_exit(e: &WeylError) -> u8 {
    match e {
        // A bad rank is caller input; a failed fit is an internal defect.
        WeylError::RankTooSmall { .. } => 2,
        WeylError::FitUnstable(_) => 3,
        WeylError::Symbolic(_) => 3,
    }
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    match cli.command {
        Command::Qdim {
            series,
            rank,
            diagrams,
            format,
        } => {
            let spec = parse_spec(series, &diagrams).map_err(|e| (2, e.0))?;
            let q = qdim_at_rank(&spec, rank).map_err(|e| (weyl_exit(&e), e.to_string()))?;
            print_product(&q, format);
            Ok(0)
        }
        Command::Interp {
            series,
            diagrams,
            format,
        } => {
            let spec = parse_spec(series, &diagrams).map_err(|e| (2, e.0))?;
            let p = rank_interpolate(&spec).map_err(|e| (weyl_exit(&e), e.to_string()))?;
            print_product(&p, format);
            Ok(0)
        }
        Command::Reconstruct {
            lambda,
            tau,
            all_solutions,
            format,
        } => {
            let lambda = parse_diagram(&lambda).map_err(|e| (2, e.0))?;
            let tau = parse_diagram(&tau).map_err(|e| (2, e.0))?;
            let problem = build_problem(&lambda, &tau).map_err(|e| match &e {
                ReconstructError::AreaMismatch { .. } => (2, e.to_string()),
                ReconstructError::NumeratorConstants { .. } => (1, e.to_string()),
                ReconstructError::Weyl(w) => (weyl_exit(w), e.to_string()),
                _ => (3, e.to_string()),
            })?;
            let solutions = solve(&problem).map_err(|e| match &e {
                ReconstructError::Infeasible { .. } => (1, e.to_string()),
                ReconstructError::ProblemTooLarge(_) => (2, e.to_string()),
                _ => (3, e.to_string()),
            })?;
            if solutions.is_empty() {
                return Err((1, "no pairing reproduces the sp arguments".into()));
            }
            let shown: &[_] = if all_solutions {
                &solutions
            } else {
                &solutions[..1]
            };
            match format {
                Format::Json => {
                    let docs: Vec<_> = shown.iter().map(|s| s.to_json()).collect();
                    let doc = if all_solutions {
                        serde_json::Value::Array(docs)
                    } else {
                        docs.into_iter().next().expect("nonempty")
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                Format::Latex => {
                    for s in shown {
                        println!("{}", s.denominator_product().to_latex());
                    }
                }
                Format::Text => {
                    for s in shown {
                        let pairs: Vec<String> = s
                            .pairs
                            .iter()
                            .map(|(x, y)| format!("({},{})", format_rat(x), format_rat(y)))
                            .collect();
                        println!("pairs: {}", pairs.join(" "));
                        match &s.y_k {
                            Some(y) => println!("y_k: {}", format_rat(y)),
                            None => println!("y_k: none"),
                        }
                        println!("universal denominator: {}", s.denominator_product());
                        println!("limit polynomial: {}", s.limit_polynomial());
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            formula: name,
            series,
            ranks,
            x,
            tol,
        } => {
            let entry = formula(&name).ok_or((2, format!("unknown formula `{name}`")))?;
            let series = parse_series_list(&series).map_err(|e| (2, e.0))?;
            let ranks = parse_rank_range(&ranks).map_err(|e| (2, e.0))?;
            let xs = parse_x_list(&x).map_err(|e| (2, e.0))?;
            if !(tol.is_finite() && tol > 0.0) {
                return Err((2, "tolerance must be positive".into()));
            }
            let reports: Vec<_> = series
                .iter()
                .map(|&s| verify_formula(&entry, s, &ranks, &xs, tol))
                .collect();
            let all_passed = reports.iter().all(|r| r.passed());
            let doc = serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Dim {
            formula: name,
            alpha,
            beta,
            gamma,
        } => {
            let entry = formula(&name).ok_or((2, format!("unknown formula `{name}`")))?;
            let point = |s: &str| -> Result<Rat, (u8, String)> { parse_rat(s).map_err(|e| (2, e)) };
            let asg = Assignment::vogel(point(&alpha)?, point(&beta)?, point(&gamma)?);
            let value = match &entry.body {
                FormulaBody::Sinh(p) => p.classical_limit(&asg),
                FormulaBody::Rational(r) => r.evaluate_rational(&asg),
            }
            .map_err(|e| (1, e.to_string()))?;
            println!("{}", format_rat(&value));
            Ok(0)
        }
        Command::SquareCheck {
            family,
            param,
            x,
            tol,
        } => {
            let param = parse_rat(&param).map_err(|e| (2, e))?;
            let xs = parse_x_list(&x).map_err(|e| (2, e.0))?;
            if !(tol.is_finite() && tol > 0.0) {
                return Err((2, "tolerance must be positive".into()));
            }
            let point = vogel_point(family.into(), &param, Permutation::IDENTITY)
                .map_err(|e| (2, e.to_string()))?;
            let report = square_identities(&point, &xs, tol);
            println!(
                "{}",
                serde_json::to_string_pretty(&report.to_json()).expect("json")
            );
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_range_parsing() {
        assert_eq!(parse_rank_range("5:8").unwrap(), vec![5, 6, 7, 8]);
        assert!(parse_rank_range("8:5").is_err());
        assert!(parse_rank_range("5").is_err());
    }

    #[test]
    fn series_list_parsing() {
        assert_eq!(
            parse_series_list("sl,so,sp").unwrap(),
            vec![
                ClassicalSeries::Sl,
                ClassicalSeries::So,
                ClassicalSeries::Sp
            ]
        );
        assert!(parse_series_list("sl,su").is_err());
    }

    #[test]
    fn x_list_validation() {
        assert_eq!(parse_x_list("0.1,0.5").unwrap(), vec![0.1, 0.5]);
        assert!(parse_x_list("0").is_err());
        assert!(parse_x_list("-1.0").is_err());
        assert!(parse_x_list("abc").is_err());
    }
}
