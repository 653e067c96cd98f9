//! Builds the polar of a polyhedron containing the origin and tests membership.

use lpdual::exactnum::{rat, Vector};
use lpdual::polyhedron::{HPolyhedron, PolarGenerator};

fn main() -> lpdual::Result<()> {
    // the strip -1 <= x2 <= 2 together with x1 <= 1 (unbounded to the left)
    let k: HPolyhedron = "vars 2\nrow 0 1 <= 2\nrow 0 -1 <= 1\nrow 1 0 <= 1\nrow -1 0 <= 0\n".parse()?;
    let polar = k.polar()?;
    println!("polar body:\n{polar}");
    for g in polar.generators() {
        match g {
            PolarGenerator::Segment(tip) => println!("segment [0, {tip}]"),
            PolarGenerator::Ray(dir) => println!("ray along {dir}"),
        }
    }
    for y in [Vector::new(vec![rat(1, 2), rat(1, 4)]), Vector::from_ints(&[2, 0])] {
        println!("{y} in polar: {}, in bipolar: {}", polar.polar_contains(&y)?, polar.bipolar_contains(&y)?);
    }
    Ok(())
}
