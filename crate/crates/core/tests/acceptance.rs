//! Acceptance gate. Each test prints one `criterion N: PASS|FAIL` line and
//! asserts exact rational equality throughout; nothing is compared with a
//! tolerance.
//!
//! Run with `cargo test -p lpdual --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use common::{corpus, report};
use lpdual::duality::{check_weak, strong_duality, verify_optimal_pair, DualityPath};
use lpdual::exactnum::{ExtendedRational, Rational, Vector};
use lpdual::instances::InstanceGenerator;
use lpdual::polyhedron::reciprocity;
use lpdual::program::LinearProgram;
use lpdual::solver::{
    basic_feasible_solutions, classify_pair, dual_basic_feasible_solutions, solve_enum, solve_fm, SolveOutcome, Status,
};
use num_traits::{One, Signed, Zero};

const OPTIMAL_TARGET: usize = 1000;

#[test]
fn criterion_1_strong_duality() {
    let mut checked = 0;
    let mut paths: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for (p, outcome) in corpus(OPTIMAL_TARGET) {
        let SolveOutcome::Optimal { value, .. } = outcome else { continue };
        checked += 1;
        let r = match strong_duality(&p) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("pipeline error: {e}"));
                continue;
            }
        };
        let key = match &r.path {
            Some(DualityPath::ZeroObjective) => "zero-objective",
            Some(DualityPath::OriginFeasible) => "origin-feasible",
            Some(DualityPath::Translated(_)) => "translated",
            None => "none",
        };
        *paths.entry(key).or_default() += 1;
        let exact = ExtendedRational::Finite(value.clone());
        if r.nu_max != exact || r.nu_min != exact {
            failures.push(format!("nu_max {} nu_min {} oracle {value}", r.nu_max, r.nu_min));
        }
        match (r.primal.witness(), r.dual_witness()) {
            (Some(x), Some(y)) if verify_optimal_pair(&p, x, y).is_optimal() => {}
            _ => failures.push(format!("pair not certified for {p:?}")),
        }
    }
    let pass = checked >= OPTIMAL_TARGET && failures.is_empty();
    report("1", pass, &format!("{checked} optimal instances, paths {paths:?}, {} failures", failures.len()));
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_2_weak_duality() {
    let mut pairs = 0usize;
    let mut failures = Vec::new();
    for (p, outcome) in corpus(OPTIMAL_TARGET) {
        if outcome.status() != Status::Optimal {
            continue;
        }
        let xs = basic_feasible_solutions(&p);
        let ys = dual_basic_feasible_solutions(&p);
        // include the midpoint of the first and last sample on each side,
        // which is feasible but usually not basic
        let xs = with_midpoint(xs);
        let ys = with_midpoint(ys);
        for x in &xs {
            let cx = p.objective(x).unwrap();
            for y in &ys {
                pairs += 1;
                let by = p.dualize().objective(y).unwrap();
                if cx > by || check_weak(&p, x, y).is_err() {
                    failures.push(format!("<c,x> = {cx} > <b,y> = {by} at x = {x}, y = {y}"));
                }
            }
        }
    }
    let pass = pairs > 0 && failures.is_empty();
    report("2", pass, &format!("{pairs} feasible pairs, {} violations", failures.len()));
    assert!(pass, "{failures:#?}");
}

fn with_midpoint(mut points: Vec<Vector>) -> Vec<Vector> {
    if points.len() >= 2 {
        let half = Rational::new(1.into(), 2.into());
        let mid = points[0].checked_add(&points[points.len() - 1]).unwrap().scale(&half);
        points.push(mid);
    }
    points
}

#[test]
fn criterion_3_oracle_equivalence() {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let instances = corpus(OPTIMAL_TARGET);
    for (p, fm) in &instances {
        let en = solve_enum(p).unwrap();
        *counts.entry(fm.status().to_string()).or_default() += 1;
        if fm.status() != en.status() || fm.value() != en.value() {
            failures.push(format!("fm {fm:?} enum {en:?} on {p:?}"));
        }
        for witness in [fm.witness(), en.witness()].into_iter().flatten() {
            if !p.is_feasible(witness).unwrap() || Some(&p.objective(witness).unwrap()) != fm.value() {
                failures.push(format!("bad witness {witness} on {p:?}"));
            }
        }
    }
    let pass = failures.is_empty();
    report("3", pass, &format!("{} instances {counts:?}, {} disagreements", instances.len(), failures.len()));
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_4_support_radial_reciprocity() {
    const POLYHEDRA: usize = 500;
    const DIRECTIONS: usize = 4;
    let mut g = InstanceGenerator::new(0x4ec1);
    let one = ExtendedRational::Finite(Rational::one());
    let zero = ExtendedRational::Finite(Rational::zero());
    let (mut checked, mut infinite) = (0, 0);
    let mut failures = Vec::new();
    for _ in 0..POLYHEDRA {
        let k = g.origin_polyhedron();
        for _ in 0..DIRECTIONS {
            let u = g.nonzero_vector(k.dim());
            let r = reciprocity(&k, &u).unwrap();
            checked += 1;
            // a zero-or-infinite factor must be paired with its reciprocal
            let lhs_ok = match (&r.support, &r.polar_radial) {
                (ExtendedRational::Finite(h), ExtendedRational::Finite(rho)) if h.is_positive() => {
                    h * rho == Rational::one()
                }
                (h, rho) => {
                    infinite += 1;
                    (*h == zero && *rho == ExtendedRational::PlusInfinity)
                        || (*h == ExtendedRational::PlusInfinity && *rho == zero)
                }
            };
            let rhs_ok = match (&r.polar_support, &r.radial) {
                (ExtendedRational::Finite(h), ExtendedRational::Finite(rho)) if h.is_positive() => {
                    h * rho == Rational::one()
                }
                (h, rho) => {
                    (*h == zero && *rho == ExtendedRational::PlusInfinity)
                        || (*h == ExtendedRational::PlusInfinity && *rho == zero)
                }
            };
            let products_ok = match r.products() {
                Ok((a, b)) => a == one && b == one,
                Err(_) => true,
            };
            if !(lhs_ok && rhs_ok && products_ok && r.holds()) {
                failures.push(format!("{r:?} for u = {u} on {k}"));
            }
        }
    }
    let pass = failures.is_empty();
    report(
        "4",
        pass,
        &format!(
            "{POLYHEDRA} polyhedra, {checked} directions, {infinite} with an infinite side, {} failures",
            failures.len()
        ),
    );
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_5_bipolar_membership() {
    const POLYHEDRA: usize = 500;
    const PROBES: usize = 20;
    let mut g = InstanceGenerator::new(0xb1b0);
    let (mut inside, mut outside) = (0usize, 0usize);
    let mut failures = Vec::new();
    for _ in 0..POLYHEDRA {
        let k = g.origin_polyhedron();
        let polar = k.polar().unwrap();
        let mut probes: Vec<Vector> = (0..PROBES - 4).map(|_| g.probe_point(k.dim())).collect();
        // points on the boundary along a ray, and just beyond it
        for _ in 0..2 {
            let u = g.nonzero_vector(k.dim());
            if let ExtendedRational::Finite(rho) = k.radial(&u).unwrap() {
                probes.push(u.scale(&rho));
                probes.push(u.scale(&(rho + Rational::new(1.into(), 7.into()))));
            } else {
                probes.push(u.scale(&Rational::from_integer(100.into())));
                probes.push(u.negated());
            }
        }
        for y in probes {
            let direct = k.contains(&y).unwrap();
            if direct {
                inside += 1;
            } else {
                outside += 1;
            }
            if polar.bipolar_contains(&y).unwrap() != direct {
                failures.push(format!("y = {y} direct {direct} on {k}"));
            }
        }
    }
    let pass = failures.is_empty();
    report(
        "5",
        pass,
        &format!(
            "{POLYHEDRA} polyhedra x {PROBES} probes, {inside} inside, {outside} outside, {} disagreements",
            failures.len()
        ),
    );
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_6_exclusion() {
    let mut table: BTreeMap<(Status, Status), usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for (p, _) in corpus(OPTIMAL_TARGET) {
        let pair = classify_pair(&p).unwrap();
        let key = (pair.primal.status(), pair.dual.status());
        *table.entry(key).or_default() += 1;
        let bad = (key.0 == Status::Unbounded && key.1 != Status::Infeasible)
            || (key.1 == Status::Unbounded && key.0 != Status::Infeasible);
        if bad {
            failures.push(format!("{key:?} on {p:?}"));
        }
    }
    let saw_both = table.keys().any(|k| k.0 == Status::Unbounded) && table.keys().any(|k| k.1 == Status::Unbounded);
    let pass = failures.is_empty() && saw_both;
    report("6", pass, &format!("(primal, dual) statuses {table:?}, {} violations", failures.len()));
    assert!(pass, "{failures:#?}");
}

/// A fixed instance meant to have an infeasible primal and an optimal
/// asymmetric dual. Farkas' lemma rules this combination out: an infeasible
/// `Ax <= b` has `y0 >= 0` with `A^T y0 = 0` and `<b,y0> < 0`, so any dual
/// feasible `y` can be pushed along `y0` without bound. The solver therefore
/// reports a dual that is unbounded, and this check fails.
#[test]
fn criterion_6_infeasible_primal_with_optimal_dual_fixture() {
    // x <= -1 and -x <= -1 with a zero objective; the dual is
    // min -y1 - y2 s.t. y1 - y2 = 0, y >= 0.
    let p = LinearProgram::new(
        lpdual::exactnum::Matrix::from_ints(&[&[1], &[-1]], 1).unwrap(),
        Vector::from_ints(&[-1, -1]),
        Vector::from_ints(&[0]),
    )
    .unwrap();
    let pair = classify_pair(&p).unwrap();
    let got = (pair.primal.status(), pair.dual.status());
    let pass = got == (Status::Infeasible, Status::Optimal);
    report(
        "6 (fixture)",
        pass,
        &format!(
            "expected (infeasible, optimal), solver reports ({}, {}); an infeasible primal always has an unbounded or infeasible asymmetric dual",
            got.0, got.1
        ),
    );
    assert!(pass, "primal infeasible with dual optimal is impossible for the asymmetric pair; got {got:?}");
}

#[test]
fn criterion_7_translation() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (p, outcome) in corpus(OPTIMAL_TARGET) {
        if outcome.status() != Status::Optimal || p.c().is_zero() || p.b().iter().all(|b| !b.is_negative()) {
            continue;
        }
        checked += 1;
        let r = strong_duality(&p).unwrap();
        let Some(DualityPath::Translated(anchor)) = &r.path else {
            failures.push(format!("path {:?} for an origin-infeasible program", r.path));
            continue;
        };
        let direct = solve_fm(&p.dualize().as_primal()).unwrap().negated();
        if r.nu_min != direct.nu_min() {
            failures.push(format!("translated nu_min {} vs direct {}", r.nu_min, direct.nu_min()));
        }
        let shifted = p.translate(anchor).unwrap().program;
        let (d, d_shifted) = (p.dualize(), shifted.dualize());
        if d.a() != d_shifted.a() || d.c() != d_shifted.c() {
            failures.push(format!("dual systems differ after translation by {anchor}"));
        }
    }
    let pass = checked > 0 && failures.is_empty();
    report("7", pass, &format!("{checked} origin-infeasible optimal instances, {} failures", failures.len()));
    assert!(pass, "{failures:#?}");
}

#[test]
fn criterion_8_canonical_symmetric() {
    const INSTANCES: usize = 300;
    let mut g = InstanceGenerator::new(0x5e11);
    let (mut both_bounded, mut neither) = (0, 0);
    let mut failures = Vec::new();
    for _ in 0..INSTANCES {
        let base = g.program();
        let canonical = base.canonicalize();
        let dual = base.symmetric_dual();
        let primal_outcome = solve_fm(&canonical).unwrap();
        // the symmetric dual is stored as `max <-b,y>`, so its optimum is `-nu_min`
        let dual_outcome = solve_fm(&dual).unwrap().negated();
        match (&primal_outcome, &dual_outcome) {
            (SolveOutcome::Optimal { value: v, .. }, SolveOutcome::Optimal { value: w, .. }) => {
                both_bounded += 1;
                if v != w {
                    failures.push(format!("values {v} vs {w} on {base:?}"));
                }
            }
            (SolveOutcome::Optimal { .. }, _) | (_, SolveOutcome::Optimal { .. }) => {
                failures.push(format!("{primal_outcome:?} vs {dual_outcome:?} on {base:?}"));
            }
            _ => neither += 1,
        }
        // the dual's sign rows are explicit, so dualizing again yields an
        // equivalent program rather than the same rows
        let double = solve_fm(&dual.symmetric_dual()).unwrap();
        if double.status() != primal_outcome.status() || double.value() != primal_outcome.value() {
            failures.push(format!("double dual {double:?} vs {primal_outcome:?} on {base:?}"));
        }
    }
    let pass = failures.is_empty();
    report(
        "8",
        pass,
        &format!(
            "{INSTANCES} canonical instances, {both_bounded} bounded on both sides, {neither} on neither, {} failures",
            failures.len()
        ),
    );
    assert!(pass, "{failures:#?}");
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// `(golden output name, arguments relative to the fixture directory, exit code)`.
const CLI_CASES: &[(&str, &[&str], i32)] = &[
    ("square_solve", &["solve", "square.lp"], 0),
    ("square_solve_enum", &["solve", "square.lp", "--oracle", "enum"], 0),
    ("square_duality", &["duality", "square.lp"], 0),
    ("square_dualize", &["dualize", "square.lp"], 0),
    ("square_verify", &["verify", "square.lp", "--x", "1", "1", "--y", "1", "0", "1", "0"], 0),
    ("square_verify_gap", &["verify", "square.lp", "--x", "0", "0", "--y", "1", "0", "1", "0"], 1),
    ("unbounded_solve", &["solve", "unbounded.lp"], 3),
    ("unbounded_duality", &["duality", "unbounded.lp"], 3),
    ("infeasible_solve", &["solve", "infeasible.lp"], 2),
    ("infeasible_duality", &["duality", "infeasible.lp"], 2),
    ("zero_objective_duality", &["duality", "zero_objective.lp"], 0),
    ("interval_duality", &["duality", "interval.lp"], 0),
    ("diet_min_solve", &["solve", "diet_min.lp"], 0),
    ("diet_min_duality", &["duality", "diet_min.lp"], 0),
    ("min_unbounded_solve", &["solve", "min_unbounded.lp"], 3),
    ("min_infeasible_solve", &["solve", "min_infeasible.lp"], 2),
    ("equality_solve", &["solve", "equality.lp"], 0),
    ("equality_duality", &["duality", "equality.lp"], 0),
    ("flat_top_duality", &["duality", "flat_top.lp"], 0),
    ("fractions_solve", &["solve", "fractions.lp"], 0),
    ("fractions_duality", &["duality", "fractions.lp"], 0),
    ("simplex3_solve_enum", &["solve", "simplex3.lp", "--oracle", "enum"], 0),
    ("wedge_unbounded_duality", &["duality", "wedge.lp"], 3),
    ("cross_polar", &["polar", "cross.poly"], 0),
    ("cross_support", &["support", "cross.poly", "--dir", "1", "1/2"], 0),
    ("cross_radial", &["radial", "cross.poly", "--dir", "-1", "2"], 0),
    ("halfplane_support", &["support", "halfplane.poly", "--dir", "0", "1"], 0),
    ("halfplane_radial", &["radial", "halfplane.poly", "--dir", "1", "0"], 0),
    ("halfplane_polar", &["polar", "halfplane.poly"], 0),
    ("square_region_polar", &["polar", "square.lp"], 0),
    ("interval_polar_error", &["polar", "interval.lp"], 1),
];

fn run_cli(args: &[&str]) -> (Vec<u8>, Vec<u8>, i32) {
    let output =
        Command::new(env!("CARGO_BIN_EXE_lpdual")).current_dir(fixture_dir()).args(args).output().expect("binary runs");
    (output.stdout, output.stderr, output.status.code().expect("exited normally"))
}

#[test]
fn criterion_9_cli_determinism() {
    let files = std::fs::read_dir(fixture_dir())
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.path().extension().is_some_and(|x| x == "lp" || x == "poly"))
        .count();
    let mut failures = Vec::new();
    let mut statuses: BTreeMap<i32, usize> = BTreeMap::new();
    for (name, args, code) in CLI_CASES {
        let first = run_cli(args);
        let second = run_cli(args);
        let (stdout, _, exit) = &first;
        *statuses.entry(*exit).or_default() += 1;
        if first != second {
            failures.push(format!("{name}: outputs differ across runs"));
        }
        if exit != code {
            failures.push(format!("{name}: exit {exit}, expected {code}"));
        }
        let golden = fixture_dir().join("golden").join(format!("{name}.out"));
        match std::fs::read(&golden) {
            Ok(expected) if &expected == stdout => {}
            Ok(_) => failures.push(format!("{name}: output differs from golden:\n{}", String::from_utf8_lossy(stdout))),
            Err(e) => failures.push(format!("{name}: {}: {e}", golden.display())),
        }
    }
    let pass = files >= 12 && failures.is_empty();
    report(
        "9",
        pass,
        &format!(
            "{files} fixture files, {} invocations run twice, exit codes {statuses:?}, {} failures",
            CLI_CASES.len(),
            failures.len()
        ),
    );
    assert!(pass, "{failures:#?}");
}
