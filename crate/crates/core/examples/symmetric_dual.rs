//! Canonical form and its symmetric dual have the same optimal value.

use lpdual::instances::InstanceGenerator;
use lpdual::solver::solve_fm;

fn main() -> lpdual::Result<()> {
    let mut g = InstanceGenerator::new(5);
    let (mut shown, mut skipped) = (0, 0);
    while shown < 5 {
        let p = g.program();
        let primal = solve_fm(&p.canonicalize())?;
        let dual = solve_fm(&p.symmetric_dual())?.negated();
        if let (Some(v), Some(w)) = (primal.value(), dual.value()) {
            println!("n = {}, m = {}: canonical max {v}, symmetric dual min {w}", p.n(), p.m());
            shown += 1;
        } else {
            skipped += 1;
        }
    }
    println!("{skipped} programs skipped: neither side feasible and bounded");
    Ok(())
}
