//! Parses an LP file, normalizes it and writes out its dual.

use lpdual::lpfile::LpFile;

fn main() -> lpdual::Result<()> {
    let file = LpFile::parse(
        "# blend two ingredients at minimum cost\nproblem min\nvars 2\nobjective 2 3\n\
         constraint 1 1 >= 4\nconstraint 1 3 >= 6\nconstraint 1 -1 = 0\n",
    )?;
    print!("{file}");
    let p = file.to_program();
    println!("normalized: {} rows over {} variables", p.m(), p.n());
    print!("{}", LpFile::from_program(&p));
    println!("dual:");
    print!("{}", LpFile::from_dual(&p.dualize()));
    Ok(())
}
