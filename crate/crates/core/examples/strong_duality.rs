//! Runs the certified strong duality pipeline on an LP file.
//!
//! `cargo run --example strong_duality -- path/to/file.lp`

use lpdual::duality::strong_duality;
use lpdual::lpfile::LpFile;

const DEFAULT: &str = "problem max\nvars 2\nobjective 3 2\nconstraint 1 1 <= 4\nconstraint 1 3 <= 6\nconstraint -1 0 <= 0\nconstraint 0 -1 <= 0\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let p = LpFile::parse(&text)?.to_program();
    print!("{}", strong_duality(&p)?);
    Ok(())
}
