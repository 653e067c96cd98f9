//! Every primal-feasible point is bounded by every dual-feasible point.

use lpdual::duality::check_weak;
use lpdual::exactnum::{Matrix, Vector};
use lpdual::program::LinearProgram;
use lpdual::solver::{basic_feasible_solutions, dual_basic_feasible_solutions};

fn main() -> lpdual::Result<()> {
    let p = LinearProgram::new(
        Matrix::from_ints(&[&[1, 2], &[3, 1], &[-1, 0], &[0, -1]], 2)?,
        Vector::from_ints(&[4, 6, 0, 0]),
        Vector::from_ints(&[1, 1]),
    )?;
    for x in basic_feasible_solutions(&p) {
        for y in dual_basic_feasible_solutions(&p) {
            let cert = check_weak(&p, &x, &y)?;
            let [cx, yax, yb] = &cert.chain;
            let tight = if cert.is_tight() { "  (optimal pair)" } else { "" };
            println!("x = {x}, y = {y}: {cx} = {yax} <= {yb}{tight}");
        }
    }
    Ok(())
}
