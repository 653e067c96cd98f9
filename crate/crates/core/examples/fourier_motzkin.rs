//! Projects an inequality system and extracts a Farkas certificate.

use lpdual::exactnum::{int, Vector};
use lpdual::solver::{fm_eliminate, fm_feasible, FmOutcome, InequalitySystem};

fn main() -> lpdual::Result<()> {
    let rows = [
        (Vector::from_ints(&[1, 1]), int(2)),
        (Vector::from_ints(&[-1, 1]), int(0)),
        (Vector::from_ints(&[0, -1]), int(-2)),
    ];
    let sys = InequalitySystem::new(2, rows.clone())?;
    let projected = fm_eliminate(&sys, 0)?;
    for (coeffs, rhs) in projected.rows() {
        println!("{} <= {rhs}", Vector::new(coeffs.to_vec()));
    }
    match fm_feasible(&sys)? {
        FmOutcome::FeasiblePoint(x) => println!("feasible at {x}"),
        FmOutcome::Infeasible(cert) => {
            let w: Vec<String> = cert.multipliers().iter().map(ToString::to_string).collect();
            println!("infeasible; weights {} give 0 <= negative (verified: {})", w.join(" "), cert.verify(&sys));
        }
    }
    Ok(())
}
