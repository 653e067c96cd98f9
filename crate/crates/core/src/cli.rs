//! Command-line front end.
//!
//! Exit codes: 0 optimal or OK, 2 infeasible, 3 unbounded, 1 usage, parse,
//! verification failure or internal error. Results go to the output
//! stream, diagnostics to the error stream.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::duality::{check_weak, strong_duality, verify_optimal_pair, PairVerdict};
use crate::error::{Error, Result};
use crate::exactnum::{ExtendedRational, Vector};
use crate::lpfile::{LpFile, Sense};
use crate::polyhedron::HPolyhedron;
use crate::solver::{solve_enum, solve_fm, SolveOutcome, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_UNBOUNDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lpdual", version, about = "Exact LP duality through polar bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Oracle {
    /// Fourier-Motzkin elimination
    Fm,
    /// basic-solution enumeration
    Enum,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an LP file and print status, value and witness
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "fm")]
        oracle: Oracle,
    },
    /// Print the asymmetric dual of the normalized program as an LP file
    Dualize { input: PathBuf },
    /// Run the certified strong duality pipeline on the normalized program
    Duality { input: PathBuf },
    /// Print the polar body of the feasible region (must contain the origin)
    Polar { input: PathBuf },
    /// Support function of the feasible region in a direction
    Support {
        input: PathBuf,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        dir: Vec<String>,
    },
    /// Radial function of the feasible region in a direction
    Radial {
        input: PathBuf,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        dir: Vec<String>,
    },
    /// Check a primal/dual pair of the normalized program
    Verify {
        input: PathBuf,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        x: Vec<String>,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        y: Vec<String>,
    },
}

/// Parses the arguments (the first is the program name), runs the command
/// and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_ERROR
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut buffer = String::new();
    let code = match execute(&cli.command, &mut buffer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    if out.write_all(buffer.as_bytes()).is_err() {
        return EXIT_ERROR;
    }
    code
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::EmptyPolyhedron => EXIT_INFEASIBLE,
        _ => EXIT_ERROR,
    }
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Optimal => EXIT_OK,
        Status::Infeasible => EXIT_INFEASIBLE,
        Status::Unbounded => EXIT_UNBOUNDED,
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    let io = |e: std::io::Error| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_lp(path: &PathBuf) -> Result<LpFile> {
    LpFile::parse(&read_input(path)?)
}

/// Reads either a polyhedron file (`vars` first) or an LP file (`problem`
/// first, whose normalized feasible region is used).
fn load_region(path: &PathBuf) -> Result<HPolyhedron> {
    let text = read_input(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next());
    match first {
        Some("problem") => Ok(LpFile::parse(&text)?.to_program().feasible_region()),
        _ => text.parse(),
    }
}

fn parse_vector(values: &[String], expected: usize, flag: &str) -> Result<Vector> {
    let v = Vector::parse(&values.join(" "))?;
    if v.dim() != expected {
        return Err(Error::Parse {
            line: 0,
            message: format!("--{flag} expects {expected} rationals, found {}", v.dim()),
        });
    }
    Ok(v)
}

fn execute(command: &Command, out: &mut String) -> Result<i32> {
    use std::fmt::Write as _;
    match command {
        Command::Solve { input, oracle } => {
            let file = load_lp(input)?;
            let p = file.to_program();
            let outcome = match oracle {
                Oracle::Fm => solve_fm(&p)?,
                Oracle::Enum => solve_enum(&p)?,
            };
            let value = match file.sense {
                Sense::Max => outcome.nu_max(),
                Sense::Min => -outcome.nu_max(),
            };
            let _ = writeln!(out, "status {}", outcome.status());
            let _ = writeln!(out, "value {value}");
            if let SolveOutcome::Optimal { witness, .. } = &outcome {
                let _ = writeln!(out, "witness {witness}");
            }
            Ok(status_code(outcome.status()))
        }
        Command::Dualize { input } => {
            let p = load_lp(input)?.to_program();
            let _ = write!(out, "{}", LpFile::from_dual(&p.dualize()));
            Ok(EXIT_OK)
        }
        Command::Duality { input } => {
            let p = load_lp(input)?.to_program();
            let report = strong_duality(&p)?;
            let _ = write!(out, "{report}");
            Ok(status_code(report.primal.status()))
        }
        Command::Polar { input } => {
            let polar = load_region(input)?.polar()?;
            let _ = write!(out, "{polar}");
            Ok(EXIT_OK)
        }
        Command::Support { input, dir } => {
            let region = load_region(input)?;
            let u = parse_vector(dir, region.dim(), "dir")?;
            let _ = writeln!(out, "{}", region.support(&u)?);
            Ok(EXIT_OK)
        }
        Command::Radial { input, dir } => {
            let region = load_region(input)?;
            let u = parse_vector(dir, region.dim(), "dir")?;
            let value: ExtendedRational = region.radial(&u)?;
            let _ = writeln!(out, "{value}");
            Ok(EXIT_OK)
        }
        Command::Verify { input, x, y } => {
            let p = load_lp(input)?.to_program();
            let x = parse_vector(x, p.n(), "x")?;
            let y = parse_vector(y, p.m(), "y")?;
            if let Ok(cert) = check_weak(&p, &x, &y) {
                let [a, b, c] = &cert.chain;
                let _ = writeln!(out, "chain {a} {b} {c}");
            }
            let verdict = verify_optimal_pair(&p, &x, &y);
            let _ = match &verdict {
                PairVerdict::Optimal => writeln!(out, "OK"),
                PairVerdict::ValueGap { primal, dual } => writeln!(out, "FAIL value gap {primal} < {dual}"),
                PairVerdict::PrimalInfeasible { index } => writeln!(out, "FAIL x violates row {index}"),
                PairVerdict::DualInfeasible(why) => writeln!(out, "FAIL {why}"),
                PairVerdict::Malformed(why) => writeln!(out, "FAIL {why}"),
            };
            Ok(if verdict.is_optimal() { EXIT_OK } else { EXIT_ERROR })
        }
    }
}
