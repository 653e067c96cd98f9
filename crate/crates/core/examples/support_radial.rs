//! Support and radial functions, and their reciprocity with the polar body.

use lpdual::exactnum::Vector;
use lpdual::polyhedron::{reciprocity, HPolyhedron};

fn main() -> lpdual::Result<()> {
    let k: HPolyhedron = "vars 2\nrow 1 1 <= 1\nrow 1 -1 <= 1\nrow -1 1 <= 1\nrow -1 0 <= 0\n".parse()?;
    for u in [Vector::from_ints(&[1, 0]), Vector::from_ints(&[2, 1]), Vector::from_ints(&[-1, 0])] {
        let r = reciprocity(&k, &u)?;
        println!(
            "u = {u}: h_K = {}, rho_K* = {}, h_K* = {}, rho_K = {}, reciprocal: {}",
            r.support,
            r.polar_radial,
            r.polar_support,
            r.radial,
            r.holds()
        );
    }
    Ok(())
}
