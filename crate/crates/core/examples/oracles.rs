//! Solves random programs with both exact oracles and tallies their verdicts.

use std::collections::BTreeMap;

use lpdual::instances::InstanceGenerator;
use lpdual::solver::{solve_enum, solve_fm};

fn main() -> lpdual::Result<()> {
    let mut g = InstanceGenerator::new(std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1));
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for _ in 0..200 {
        let p = g.program();
        let (fm, en) = (solve_fm(&p)?, solve_enum(&p)?);
        assert_eq!((fm.status(), fm.value()), (en.status(), en.value()));
        *tally.entry(fm.status().to_string()).or_default() += 1;
    }
    println!("200 random programs, both oracles agree: {tally:?}");
    Ok(())
}
