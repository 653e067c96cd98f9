//! Moves a feasible point to the origin so the polar argument applies.

use lpdual::duality::{strong_duality, strong_duality_translated};
use lpdual::exactnum::{Matrix, Vector};
use lpdual::program::LinearProgram;

fn main() -> lpdual::Result<()> {
    // 2 <= x1 <= 3, 1 <= x2 <= 5, x1 + x2 <= 7: the origin is infeasible
    let p = LinearProgram::new(
        Matrix::from_ints(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1]], 2)?,
        Vector::from_ints(&[3, -2, 5, -1, 7]),
        Vector::from_ints(&[1, 2]),
    )?;
    let report = strong_duality(&p)?;
    println!("{report}");
    let anchor = Vector::from_ints(&[2, 5]);
    let shifted = p.translate(&anchor)?;
    println!("shifted offsets b - A x0 = {}, objective offset {}", shifted.program.b(), shifted.objective_offset);
    let again = strong_duality_translated(&p, &anchor)?;
    println!("anchor {anchor}: nu_min = {}", again.nu_min);
    Ok(())
}
