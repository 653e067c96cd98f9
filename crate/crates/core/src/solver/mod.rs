//! Two independent exact LP oracles and status classification.
//!
//! [`solve_fm`] projects the feasible region onto the objective value with
//! Fourier-Motzkin elimination. [`solve_enum`] enumerates basic solutions.
//! They share nothing but the feasibility pre-check.

mod enumerate;
mod fm;

use std::fmt;

pub use enumerate::{basic_feasible_solutions, dual_basic_feasible_solutions, recession_direction, solve_enum};
pub use fm::{
    fm_eliminate, fm_feasible, solve_fm, solve_fm_with_limit, FarkasCertificate, FmOutcome, InequalitySystem,
    DEFAULT_ROW_LIMIT,
};

use crate::error::{Error, Result};
use crate::exactnum::{ExtendedRational, Rational, Vector};
use crate::program::LinearProgram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
        })
    }
}

/// Result of solving a program. For a maximization, an infeasible program
/// has value `-inf` and an unbounded one `+inf`; for a minimization the
/// signs flip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Optimal { value: Rational, witness: Vector },
    Infeasible,
    Unbounded,
}

impl SolveOutcome {
    pub fn status(&self) -> Status {
        match self {
            SolveOutcome::Optimal { .. } => Status::Optimal,
            SolveOutcome::Infeasible => Status::Infeasible,
            SolveOutcome::Unbounded => Status::Unbounded,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            SolveOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Vector> {
        match self {
            SolveOutcome::Optimal { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// The value read as the optimum of a maximization.
    pub fn nu_max(&self) -> ExtendedRational {
        match self {
            SolveOutcome::Optimal { value, .. } => ExtendedRational::Finite(value.clone()),
            SolveOutcome::Infeasible => ExtendedRational::MinusInfinity,
            SolveOutcome::Unbounded => ExtendedRational::PlusInfinity,
        }
    }

    /// The value read as the optimum of a minimization.
    pub fn nu_min(&self) -> ExtendedRational {
        match self {
            SolveOutcome::Optimal { value, .. } => ExtendedRational::Finite(value.clone()),
            SolveOutcome::Infeasible => ExtendedRational::PlusInfinity,
            SolveOutcome::Unbounded => ExtendedRational::MinusInfinity,
        }
    }

    /// Flips the sign of the optimal value, keeping the witness.
    pub fn negated(self) -> SolveOutcome {
        match self {
            SolveOutcome::Optimal { value, witness } => SolveOutcome::Optimal { value: -value, witness },
            other => other,
        }
    }
}

/// True when the statuses respect weak duality: an unbounded side forces
/// the other side to be infeasible.
pub fn exclusion_holds(primal: Status, dual: Status) -> bool {
    (primal != Status::Unbounded || dual == Status::Infeasible)
        && (dual != Status::Unbounded || primal == Status::Infeasible)
}

/// A primal outcome (maximization) next to the outcome of its asymmetric
/// dual (minimization; its value is `nu_min`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub primal: SolveOutcome,
    pub dual: SolveOutcome,
}

/// Solves a program and its asymmetric dual with the Fourier-Motzkin oracle,
/// then checks that an unbounded side forces an infeasible other side.
pub fn classify_pair(p: &LinearProgram) -> Result<PairOutcome> {
    let primal = solve_fm(p)?;
    let dual = solve_fm(&p.dualize().as_primal())?.negated();
    if !exclusion_holds(primal.status(), dual.status()) {
        return Err(Error::Inconsistency(format!(
            "weak duality exclusion violated: primal {}, dual {}",
            primal.status(),
            dual.status()
        )));
    }
    Ok(PairOutcome { primal, dual })
}
