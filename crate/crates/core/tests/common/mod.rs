#![allow(dead_code)]

use lpdual::instances::InstanceGenerator;
use lpdual::program::LinearProgram;
use lpdual::solver::{solve_fm, SolveOutcome};

pub const CORPUS_SEED: u64 = 0x1d_2024;

/// Random programs from the default configuration (n in 1..=4, m in 1..=8,
/// numerators in [-5, 5], denominators in {1, 2, 3}), generated until
/// `optimal_target` of them have an optimal primal. Each entry carries its
/// Fourier-Motzkin outcome.
pub fn corpus(optimal_target: usize) -> Vec<(LinearProgram, SolveOutcome)> {
    let mut generator = InstanceGenerator::new(CORPUS_SEED);
    let mut out = Vec::new();
    let mut optimal = 0;
    while optimal < optimal_target {
        let p = generator.program();
        let outcome = solve_fm(&p).expect("row limit is never reached at this size");
        if matches!(outcome, SolveOutcome::Optimal { .. }) {
            optimal += 1;
        }
        out.push((p, outcome));
    }
    out
}

pub fn report(criterion: &str, pass: bool, detail: &str) {
    println!("criterion {criterion}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
}
