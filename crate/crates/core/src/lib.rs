//! Exact linear programming duality through polar bodies.
//!
//! The optimum of `max <c,x> s.t. Ax <= b` is the support function of the
//! feasible polyhedron at `c`, and the support function of a body containing
//! the origin is the reciprocal of the radial function of its polar. This
//! crate turns that observation into machinery: it builds polar bodies of
//! H-polyhedra, evaluates support and radial functions, and recovers optimal
//! dual solutions from the polar body, certifying every answer with exact
//! rational arithmetic.
//!
//! Two independent exact LP oracles back all of this: Fourier-Motzkin
//! elimination ([`solver::solve_fm`]) and basic-solution enumeration
//! ([`solver::solve_enum`]).
//!
//! ```
//! use lpdual::{exactnum::{int, Matrix, Vector}, program::LinearProgram, duality::strong_duality};
//!
//! // max x1 + x2 over the square [-1, 1]^2
//! let a = Matrix::from_ints(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2).unwrap();
//! let p = LinearProgram::new(a, Vector::from_ints(&[1, 1, 1, 1]), Vector::from_ints(&[1, 1])).unwrap();
//! let report = strong_duality(&p).unwrap();
//! assert_eq!(report.nu_max, int(2).into());
//! assert_eq!(report.nu_min, int(2).into());
//! ```

pub mod cli;
pub mod duality;
mod error;
pub mod exactnum;
pub mod instances;
pub mod lpfile;
pub mod polyhedron;
pub mod program;
pub mod solver;

pub use error::{Error, Result};
