//! Acceptance suite: one test per release criterion, each printing a
//! pass line with its number. Tolerances are pinned here, in code.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use common::weyl_dimension_oracle;

use uqdim::reconstruct::{build_problem, check_soundness, solve};
use uqdim::symbolic::{int, rat, Assignment, LinearForm, Rat, SinhProduct, SymbolicError, VarSet};
use uqdim::vogel::{
    formula, square_identities, verify_formula, vogel_point, Family, Permutation,
    EXCEPTIONAL_POINTS,
};
use uqdim::weyl::{dimension, qdim_at_rank, rank_interpolate, ClassicalSeries, RepSpec};
use uqdim::young::diagram;

fn n_form(slope: Rat, constant: Rat) -> LinearForm {
    LinearForm::rank(slope, constant)
}

fn n_const(c: Rat) -> LinearForm {
    LinearForm::constant(VarSet::RankN, c)
}

fn product(num: Vec<LinearForm>, den: Vec<LinearForm>) -> SinhProduct {
    SinhProduct::new(VarSet::RankN, int(1), num, den).expect("fixture")
}

fn vogel_form(a: Rat, b: Rat) -> LinearForm {
    LinearForm::vogel(a, b, int(0))
}

#[test]
fn criterion_01_square_of_adjoint_table_rows() {
    // Five rows: sl pair, so diagram, sp diagram. The two sums land on the
    // row's so/sp columns; in the gamma row the roles are exchanged (its
    // members sit at the swapped evaluation, so the vertical sum gives the
    // sp column and the horizontal sum the so column).
    let rows = [
        ("adjoint", (vec![1], vec![1]), vec![1u32, 1], vec![2u32]),
        ("Y2_alpha", (vec![2], vec![2]), vec![2, 2], vec![4]),
        (
            "Y2_beta",
            (vec![1, 1], vec![1, 1]),
            vec![1, 1, 1, 1],
            vec![2, 2],
        ),
        ("Y2_gamma", (vec![1], vec![1]), vec![2], vec![1, 1]),
        ("X2", (vec![2], vec![1, 1]), vec![2, 1, 1], vec![3, 1]),
    ];
    for (name, (lambda, tau), so_col, sp_col) in rows {
        let entry = formula(name).unwrap();
        let lambda = diagram(&lambda);
        let tau = diagram(&tau);
        assert_eq!(
            entry.sl_pair,
            (lambda.clone(), tau.clone()),
            "{name} sl pair"
        );
        assert_eq!(entry.so_diagram, diagram(&so_col), "{name} so column");
        assert_eq!(entry.sp_diagram, diagram(&sp_col), "{name} sp column");
        let vertical = lambda.vertical_sum(&tau);
        let horizontal = lambda.horizontal_sum(&tau);
        if name == "Y2_gamma" {
            assert_eq!(vertical, entry.sp_diagram, "{name} vertical -> sp");
            assert_eq!(horizontal, entry.so_diagram, "{name} horizontal -> so");
        } else {
            assert_eq!(vertical, entry.so_diagram, "{name} vertical -> so");
            assert_eq!(horizontal, entry.sp_diagram, "{name} horizontal -> sp");
        }
    }
    println!("criterion 1 (square-of-adjoint table rows): PASS");
}

#[test]
fn criterion_02_adjoint_interpolation_matches_closed_forms() {
    let expect_sl = product(
        vec![n_form(int(1), int(-1)), n_form(int(1), int(1))],
        vec![n_const(int(1)), n_const(int(1))],
    );
    let expect_so = product(
        vec![
            n_form(rat(1, 2), int(0)),
            n_form(int(1), int(-1)),
            n_form(int(1), int(-4)),
        ],
        vec![n_const(int(1)), n_const(int(2)), n_form(rat(1, 2), int(-2))],
    );
    let expect_sp = product(
        vec![
            n_form(rat(1, 4), int(0)),
            n_form(rat(1, 2), rat(1, 2)),
            n_form(rat(1, 2), int(2)),
        ],
        vec![
            n_const(rat(1, 2)),
            n_const(int(1)),
            n_form(rat(1, 4), int(1)),
        ],
    );
    let cases = [
        (
            RepSpec::Sl {
                lambda: diagram(&[1]),
                tau: diagram(&[1]),
            },
            expect_sl,
            vec![23u32, 30],
        ),
        (
            RepSpec::So {
                diagram: diagram(&[1, 1]),
            },
            expect_so,
            vec![24, 30],
        ),
        (
            RepSpec::Sp {
                diagram: diagram(&[2]),
            },
            expect_sp,
            vec![24, 30],
        ),
    ];
    for (spec, expect, held_out) in cases {
        let p = rank_interpolate(&spec).unwrap();
        assert_eq!(p, expect, "{spec}");
        for rank in held_out {
            assert_eq!(
                p.substitute_rank(&int(i64::from(rank))).unwrap(),
                qdim_at_rank(&spec, rank).unwrap(),
                "{spec} held-out rank {rank}"
            );
        }
    }
    println!("criterion 2 (adjoint symbolic-rank forms, held-out to 30): PASS");
}

#[test]
fn criterion_03_composite_multiplet_interpolation() {
    // sl composite of (3,1) and (2,1,1)
    let spec = RepSpec::Sl {
        lambda: diagram(&[3, 1]),
        tau: diagram(&[2, 1, 1]),
    };
    let expect = product(
        [-4i64, -2, -1, -1, 1, 1, 2, 4]
            .iter()
            .map(|&c| n_form(int(1), int(c)))
            .collect(),
        [1i64, 1, 1, 1, 2, 2, 4, 4]
            .iter()
            .map(|&c| n_const(int(c)))
            .collect(),
    );
    assert_eq!(rank_interpolate(&spec).unwrap(), expect, "sl member");

    // so member (3,2,1,1,1), arguments in N = 2n
    let spec = RepSpec::So {
        diagram: diagram(&[3, 2, 1, 1, 1]),
    };
    let num: Vec<LinearForm> = vec![
        n_form(rat(1, 2), int(0)),
        n_form(rat(1, 2), int(2)),
        n_form(int(1), int(-10)),
        n_form(int(1), int(-6)),
        n_form(int(1), int(-4)),
        n_form(int(1), int(-2)),
        n_form(int(1), int(-2)),
        n_form(int(1), int(-1)),
        n_form(int(1), int(0)),
        n_form(int(1), int(2)),
    ];
    let den: Vec<LinearForm> = vec![
        n_const(int(1)),
        n_const(int(1)),
        n_const(int(1)),
        n_const(int(2)),
        n_const(int(3)),
        n_const(int(3)),
        n_const(int(5)),
        n_const(int(7)),
        n_form(rat(1, 2), int(-5)),
        n_form(rat(1, 2), int(-1)),
    ];
    assert_eq!(
        rank_interpolate(&spec).unwrap(),
        product(num, den),
        "so member"
    );

    // sp member (5,2,1), arguments in N = 2n
    let spec = RepSpec::Sp {
        diagram: diagram(&[5, 2, 1]),
    };
    let num: Vec<LinearForm> = vec![
        n_form(rat(1, 4), int(-1)),
        n_form(rat(1, 4), int(0)),
        n_form(rat(1, 2), int(-1)),
        n_form(rat(1, 2), int(0)),
        n_form(rat(1, 2), rat(1, 2)),
        n_form(rat(1, 2), int(1)),
        n_form(rat(1, 2), int(1)),
        n_form(rat(1, 2), int(2)),
        n_form(rat(1, 2), int(3)),
        n_form(rat(1, 2), int(5)),
    ];
    let den: Vec<LinearForm> = vec![
        n_const(rat(1, 2)),
        n_const(rat(1, 2)),
        n_const(rat(1, 2)),
        n_const(int(1)),
        n_const(rat(3, 2)),
        n_const(rat(3, 2)),
        n_const(rat(5, 2)),
        n_const(rat(7, 2)),
        n_form(rat(1, 4), rat(1, 2)),
        n_form(rat(1, 4), rat(5, 2)),
    ];
    assert_eq!(
        rank_interpolate(&spec).unwrap(),
        product(num, den),
        "sp member"
    );
    println!("criterion 3 (composite multiplet symbolic-rank forms): PASS");
}

#[test]
fn criterion_04_adjoint_reconstruction() {
    let square = diagram(&[1]);
    let problem = build_problem(&square, &square).unwrap();
    let solutions = solve(&problem).unwrap();
    assert_eq!(solutions.len(), 1, "unique solution");
    let sol = &solutions[0];
    assert_eq!(sol.pairs, vec![(int(1), int(1)), (int(1), int(2))]);
    assert_eq!(sol.y_k, None);
    let mut expect = vec![
        vogel_form(rat(1, 2), int(0)), // alpha/2, i.e. sinh(alpha x/4)
        vogel_form(int(0), rat(1, 2)), // beta/2
    ];
    expect.sort();
    assert_eq!(sol.pair_args(), expect, "denominator factors up to sign");
    check_soundness(&problem, sol).unwrap();
    println!("criterion 4 (adjoint reconstruction): PASS");
}

#[test]
fn criterion_05_composite_reconstruction() {
    let problem = build_problem(&diagram(&[3, 1]), &diagram(&[2, 1, 1])).unwrap();
    let solutions = solve(&problem).unwrap();
    assert_eq!(solutions.len(), 1, "unique solution");
    let sol = &solutions[0];
    let expect_pairs: Vec<(Rat, Rat)> = [
        (1, 1),
        (1, 1),
        (1, 2),
        (1, 2),
        (2, 3),
        (2, 3),
        (4, 5),
        (4, 7),
    ]
    .iter()
    .map(|&(x, y)| (int(x), int(y)))
    .collect();
    assert_eq!(sol.pairs, expect_pairs);
    assert_eq!(sol.y_k, Some(int(2)));
    // Denominator factor by factor: alpha/2 (x2), beta/2 (x2),
    // (beta-alpha)/2 (x2), (beta-3 alpha)/2, (3 beta-alpha)/2.
    let mut expect = vec![
        vogel_form(rat(1, 2), int(0)),
        vogel_form(rat(1, 2), int(0)),
        vogel_form(int(0), rat(1, 2)),
        vogel_form(int(0), rat(1, 2)),
        vogel_form(rat(-1, 2), rat(1, 2)),
        vogel_form(rat(-1, 2), rat(1, 2)),
        vogel_form(rat(-3, 2), rat(1, 2)),
        vogel_form(rat(-1, 2), rat(3, 2)),
    ];
    expect.sort();
    assert_eq!(sol.pair_args(), expect, "matches the known factor list");
    // Limit polynomial proportional to
    // alpha^2 beta^2 (beta-alpha)^2 (beta-3 alpha)(3 beta-alpha).
    let mut limit_factors = sol.limit_polynomial().numerator().to_vec();
    limit_factors.sort();
    let mut expect_limit = vec![
        vogel_form(int(1), int(0)),
        vogel_form(int(1), int(0)),
        vogel_form(int(0), int(1)),
        vogel_form(int(0), int(1)),
        vogel_form(int(-1), int(1)),
        vogel_form(int(-1), int(1)),
        vogel_form(int(-3), int(1)),
        vogel_form(int(-1), int(3)),
    ];
    expect_limit.sort();
    assert_eq!(limit_factors, expect_limit);
    check_soundness(&problem, sol).unwrap();
    println!("criterion 5 (composite multiplet reconstruction): PASS");
}

#[test]
fn criterion_06_formula_verification_sweep() {
    let ranks: Vec<u32> = (6..=16).collect();
    let xs = [0.1, 0.25, 0.5, 1.0];
    for name in ["adjoint", "X2", "Y2_alpha", "Y2_beta", "Y2_gamma"] {
        let entry = formula(name).unwrap();
        for series in [
            ClassicalSeries::Sl,
            ClassicalSeries::So,
            ClassicalSeries::Sp,
        ] {
            let report = verify_formula(&entry, series, &ranks, &xs, 1e-9);
            assert!(report.checks > 0, "{name}/{series}: no admissible ranks");
            assert!(
                report.passed(),
                "{name}/{series}: max dev {} with failures {:?}",
                report.max_rel_dev,
                report.failures
            );
        }
    }
    println!("criterion 6 (formula verification, ranks 6-16, tol 1e-9): PASS");
}

#[test]
fn criterion_07_dimension_formula_specializations() {
    let body = formula("dimE").unwrap();
    let body = body.rational_body().unwrap();
    let sl_poly = |n: i64| -> Rat {
        rat(1, 32)
            * int(n - 4)
            * int(n - 2)
            * int((n - 1) * (n - 1))
            * int((n + 1) * (n + 1))
            * int(n + 2)
            * int(n + 4)
    };
    let so_poly = |n: i64| -> Rat {
        rat(1, 630)
            * int(n - 6)
            * int(n - 4)
            * int(n - 2)
            * int(n - 1)
            * int(n * n)
            * int(n + 2)
            * int(n + 4)
    };
    let sp_poly = |n: i64| -> Rat {
        rat(1, 630)
            * int(n - 4)
            * int(n - 2)
            * int(n * n)
            * int(n + 1)
            * int(n + 2)
            * int(n + 4)
            * int(n + 6)
    };
    let spec = RepSpec::Sl {
        lambda: diagram(&[3, 1]),
        tau: diagram(&[2, 1, 1]),
    };
    for n in 6..=20i64 {
        let sl = vogel_point(Family::Sl, &int(n), Permutation::IDENTITY).unwrap();
        let value = body.evaluate_rational(&sl.assignment()).unwrap();
        assert_eq!(value, sl_poly(n), "sl N={n}");
        // The formula counts the composite together with its Z2 image.
        let dim = Rat::from_integer(dimension(&spec, n as u32).unwrap());
        assert_eq!(value, dim * int(2), "sl N={n} vs twice the dimension");

        let so = vogel_point(Family::So, &int(n), Permutation::IDENTITY).unwrap();
        if n == 8 {
            // (beta - gamma) vanishes at so(8): the point sits on a pole of
            // the written form and is not admissible for direct evaluation.
            assert!(matches!(
                body.evaluate_rational(&so.assignment()),
                Err(SymbolicError::PoleAtPoint)
            ));
        } else {
            assert_eq!(
                body.evaluate_rational(&so.assignment()).unwrap(),
                so_poly(n),
                "so N={n}"
            );
        }
        if n % 2 == 0 {
            let sp = vogel_point(Family::Sp, &int(n), Permutation::IDENTITY).unwrap();
            assert_eq!(
                body.evaluate_rational(&sp.assignment()).unwrap(),
                sp_poly(n),
                "sp N={n}"
            );
        }
    }
    println!("criterion 7 (dimension formula per-series polynomials, N 6-20): PASS");
}

#[test]
fn criterion_08_square_identities() {
    let xs = [0.1, 0.3, 0.7];
    let mut points = Vec::new();
    for rank in 6..=14i64 {
        points.push(vogel_point(Family::Sl, &int(rank), Permutation::IDENTITY).unwrap());
        points.push(vogel_point(Family::So, &int(rank), Permutation::IDENTITY).unwrap());
        if rank % 2 == 0 {
            points.push(vogel_point(Family::Sp, &int(rank), Permutation::IDENTITY).unwrap());
        }
    }
    for (name, (p, q), _) in EXCEPTIONAL_POINTS {
        let point = vogel_point(Family::Exc, &rat(p, q), Permutation::IDENTITY)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        points.push(point);
    }
    for point in &points {
        let report = square_identities(point, &xs, 1e-9);
        assert!(
            report.passed(),
            "{point}: max dev {} failures {:?}",
            report.max_rel_dev,
            report.failures
        );
    }
    println!(
        "criterion 8 (square-of-adjoint identities at {} points): PASS",
        points.len()
    );
}

#[test]
fn criterion_09_classical_and_exceptional_dimension_limits() {
    let adjoint = formula("adjoint").unwrap();
    let body = adjoint.sinh_body().unwrap();
    for n in 5..=16i64 {
        let sl = vogel_point(Family::Sl, &int(n), Permutation::IDENTITY).unwrap();
        assert_eq!(
            body.classical_limit(&sl.assignment()).unwrap(),
            int(n * n - 1),
            "sl({n})"
        );
        let so = vogel_point(Family::So, &int(n), Permutation::IDENTITY).unwrap();
        assert_eq!(
            body.classical_limit(&so.assignment()).unwrap(),
            int(n * (n - 1) / 2),
            "so({n})"
        );
        if n % 2 == 0 {
            let sp = vogel_point(Family::Sp, &int(n), Permutation::IDENTITY).unwrap();
            assert_eq!(
                body.classical_limit(&sp.assignment()).unwrap(),
                int(n * (n + 1) / 2),
                "sp({n})"
            );
        }
    }
    // Oracle: standard adjoint dimensions of the five exceptional algebras.
    for (name, (p, q), dim) in EXCEPTIONAL_POINTS {
        let point = vogel_point(Family::Exc, &rat(p, q), Permutation::IDENTITY).unwrap();
        assert_eq!(
            body.classical_limit(&point.assignment()).unwrap(),
            int(i64::from(dim)),
            "{name}"
        );
    }
    println!("criterion 9 (dimension limits, classical and exceptional): PASS");
}

#[test]
fn criterion_10_property_suites() {
    use common::{random_diagram, TestRng};

    // Transpose duality and sum invariants on 10^3 random pairs.
    let mut rng = TestRng::new(0x5EED_0001);
    for _ in 0..1000 {
        let a = random_diagram(&mut rng, 5, 6);
        let b = random_diagram(&mut rng, 5, 6);
        let v = a.vertical_sum(&b);
        let h = a.horizontal_sum(&b);
        assert_eq!(v.area(), a.area() + b.area());
        assert_eq!(h.area(), a.area() + b.area());
        assert_eq!(v, b.vertical_sum(&a));
        assert_eq!(h, b.horizontal_sum(&a));
        assert_eq!(h, a.transpose().vertical_sum(&b.transpose()).transpose());
        assert_eq!(a.transpose().transpose(), a);
    }

    // Oracle equivalence on 10^2 random small specs, plus evenness in x.
    let mut rng = TestRng::new(0x5EED_0002);
    let mut checked = 0;
    while checked < 100 {
        let spec = match rng.below(3) {
            0 => RepSpec::Sl {
                lambda: random_diagram(&mut rng, 3, 4),
                tau: random_diagram(&mut rng, 3, 4),
            },
            1 => RepSpec::So {
                diagram: random_diagram(&mut rng, 4, 4),
            },
            _ => RepSpec::Sp {
                diagram: random_diagram(&mut rng, 4, 4),
            },
        };
        let rank = (6 + rng.below(9)) as u32;
        if !spec.admissible_at(rank) {
            continue;
        }
        checked += 1;
        let q = qdim_at_rank(&spec, rank).unwrap();
        let limit = q
            .classical_limit(&Assignment::rank(int(i64::from(rank))))
            .unwrap();
        assert_eq!(
            limit,
            weyl_dimension_oracle(&spec, rank),
            "{spec} at {rank}"
        );
        let asg = Assignment::rank(int(i64::from(rank)));
        let x = 0.1 + (rng.below(80) as f64) / 100.0;
        let plus = q.evaluate(&asg, x).unwrap();
        let minus = q.evaluate(&asg, -x).unwrap();
        assert!(
            (plus - minus).abs() <= 1e-9 * plus.abs().max(1.0),
            "{spec} at {rank}: {plus} vs {minus}"
        );
    }

    // Reconstruction soundness round-trip for every returned solution.
    let pairs = [
        (diagram(&[1]), diagram(&[1])),
        (diagram(&[2]), diagram(&[2])),
        (diagram(&[1, 1]), diagram(&[1, 1])),
        (diagram(&[2]), diagram(&[1, 1])),
        (diagram(&[3, 1]), diagram(&[2, 1, 1])),
    ];
    for (lambda, tau) in &pairs {
        let problem = build_problem(lambda, tau).unwrap();
        let solutions = solve(&problem).unwrap();
        assert!(!solutions.is_empty(), "({lambda};{tau}) should be solvable");
        for sol in &solutions {
            check_soundness(&problem, sol).unwrap_or_else(|e| panic!("({lambda};{tau}): {e}"));
        }
    }
    println!("criterion 10 (property suites): PASS");
}
