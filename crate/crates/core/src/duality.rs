//! Certified weak and strong duality.
//!
//! [`strong_duality`] recovers an optimal dual solution geometrically. With
//! the origin feasible, the optimum `h_K(c)` of the primal is the reciprocal
//! of the radial value `rho_{K*}(c)` of the polar body, and the weights that
//! write `rho c` as a point of `K*` rescale into a dual solution. A feasible
//! primal that excludes the origin is first translated so that it does
//! contain it; the dual feasible set is unchanged by the translation and only
//! the objective shifts by `<x0, c>`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{dot, ExtendedRational, Rational, Vector};
use crate::program::LinearProgram;
use crate::solver::{classify_pair, fm_feasible, solve_fm, InequalitySystem, SolveOutcome};

/// The exact chain `<c,x> = <y,Ax> <= <y,b>` for a primal-feasible `x` and a
/// dual-feasible `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDualityCertificate {
    pub x: Vector,
    pub y: Vector,
    pub primal_value: Rational,
    pub dual_value: Rational,
    /// `[<c,x>, <y,Ax>, <y,b>]`.
    pub chain: [Rational; 3],
}

impl WeakDualityCertificate {
    /// Equal primal and dual values: both points are optimal.
    pub fn is_tight(&self) -> bool {
        self.primal_value == self.dual_value
    }
}

/// Evaluates the weak duality chain after checking both points exactly.
pub fn check_weak(p: &LinearProgram, x: &Vector, y: &Vector) -> Result<WeakDualityCertificate> {
    p.check_feasible(x)?;
    p.dualize().check_feasible(y)?;
    let cx = dot(p.c(), x)?;
    let yax = dot(y, &p.a().apply(x)?)?;
    let yb = dot(y, p.b())?;
    if cx != yax || yax > yb {
        return Err(Error::Inconsistency(format!("weak duality chain broken: {cx}, {yax}, {yb}")));
    }
    Ok(WeakDualityCertificate {
        x: x.clone(),
        y: y.clone(),
        primal_value: cx.clone(),
        dual_value: yb.clone(),
        chain: [cx, yax, yb],
    })
}

/// Why a candidate pair is or is not a certified optimal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairVerdict {
    Optimal,
    PrimalInfeasible { index: usize },
    DualInfeasible(String),
    ValueGap { primal: Rational, dual: Rational },
    Malformed(String),
}

impl PairVerdict {
    pub fn is_optimal(&self) -> bool {
        matches!(self, PairVerdict::Optimal)
    }
}

/// Certifies optimality of `x` and `y` by feasibility plus `<c,x> = <b,y>`.
pub fn verify_optimal_pair(p: &LinearProgram, x: &Vector, y: &Vector) -> PairVerdict {
    match check_weak(p, x, y) {
        Ok(cert) if cert.is_tight() => PairVerdict::Optimal,
        Ok(cert) => PairVerdict::ValueGap { primal: cert.primal_value, dual: cert.dual_value },
        Err(Error::InfeasiblePoint { index }) => PairVerdict::PrimalInfeasible { index },
        Err(Error::InfeasibleDualPoint(why)) => PairVerdict::DualInfeasible(why),
        Err(other) => PairVerdict::Malformed(other.to_string()),
    }
}

/// A dual solution recovered from the polar body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarDual {
    pub y: Vector,
    pub nu_min: Rational,
    /// `rho_{K*}(c)`; `+inf` when the primal optimum is zero and `y` came
    /// from solving the dual directly.
    pub radial: ExtendedRational,
}

/// Recovers an optimal dual solution for a bounded program whose feasible
/// region contains the origin and whose objective is nonzero.
///
/// Solves `max rho` subject to `rho c = sum z_i a_i`, `z >= 0`,
/// `<b,z> <= 1`, then returns `y = z / rho`. Rows with a zero normal get
/// `y_i = 0`.
pub fn dual_from_polar(p: &LinearProgram) -> Result<PolarDual> {
    if p.c().is_zero() {
        return Err(Error::ZeroObjective);
    }
    if let Some(index) = p.b().iter().position(|b| b.is_negative()) {
        return Err(Error::OriginNotContained { index });
    }
    let kept: Vec<usize> = (0..p.m()).filter(|&i| !p.a().row(i).is_zero()).collect();
    let polar = p.feasible_region().polar()?;
    match solve_fm(&polar.radial_program(p.c())?)? {
        SolveOutcome::Optimal { value: rho, witness } => {
            if !rho.is_positive() {
                return Err(Error::Inconsistency(
                    "radial value of the objective is zero: the primal is unbounded".into(),
                ));
            }
            let scale = rho.recip();
            let mut y = vec![Rational::zero(); p.m()];
            for (slot, &i) in kept.iter().enumerate() {
                y[i] = &witness[slot] * &scale;
            }
            let y = Vector::new(y);
            let nu_min = dot(p.b(), &y)?;
            if nu_min != scale {
                return Err(Error::Inconsistency(format!("<b,y> = {nu_min} differs from 1/rho = {scale}")));
            }
            Ok(PolarDual { y, nu_min, radial: ExtendedRational::Finite(rho) })
        }
        SolveOutcome::Unbounded => match solve_fm(&p.dualize().as_primal())?.negated() {
            SolveOutcome::Optimal { value, witness } => {
                Ok(PolarDual { y: witness, nu_min: value, radial: ExtendedRational::PlusInfinity })
            }
            other => Err(Error::Inconsistency(format!("direct dual solve returned {}", other.status()))),
        },
        SolveOutcome::Infeasible => Err(Error::Inconsistency("dual infeasible despite bounded primal".into())),
    }
}

/// Which branch of the strong duality argument produced the dual solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityPath {
    ZeroObjective,
    OriginFeasible,
    Translated(Vector),
}

impl fmt::Display for DualityPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityPath::ZeroObjective => f.write_str("zero-objective"),
            DualityPath::OriginFeasible => f.write_str("origin-feasible"),
            DualityPath::Translated(anchor) => write_labeled(f, "translated", anchor),
        }
    }
}

/// Outcome of the strong duality pipeline. Only produced after the pair has
/// been verified: when the primal is optimal, `nu_max = nu_min` and the dual
/// witness attains `nu_min`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDualityReport {
    pub primal: SolveOutcome,
    /// The dual outcome; its value is `nu_min`.
    pub dual: SolveOutcome,
    pub nu_max: ExtendedRational,
    pub nu_min: ExtendedRational,
    pub path: Option<DualityPath>,
    pub chain: Option<[Rational; 3]>,
}

impl StrongDualityReport {
    pub fn dual_witness(&self) -> Option<&Vector> {
        self.dual.witness()
    }
}

fn write_labeled(f: &mut fmt::Formatter<'_>, label: &str, v: &Vector) -> fmt::Result {
    if v.dim() == 0 {
        f.write_str(label)
    } else {
        write!(f, "{label} {v}")
    }
}

/// Fixed field order: status, dual_status, path, nu_max, nu_min,
/// primal_witness, dual_witness, chain.
impl fmt::Display for StrongDualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status {}", self.primal.status())?;
        writeln!(f, "dual_status {}", self.dual.status())?;
        match &self.path {
            Some(path) => writeln!(f, "path {path}")?,
            None => writeln!(f, "path none")?,
        }
        writeln!(f, "nu_max {}", self.nu_max)?;
        writeln!(f, "nu_min {}", self.nu_min)?;
        for (label, w) in [("primal_witness", self.primal.witness()), ("dual_witness", self.dual.witness())] {
            match w {
                Some(v) => write_labeled(f, label, v)?,
                None => write!(f, "{label} none")?,
            }
            writeln!(f)?;
        }
        match &self.chain {
            Some([a, b, c]) => writeln!(f, "chain {a} {b} {c}"),
            None => writeln!(f, "chain none"),
        }
    }
}

/// Runs the strong duality pipeline on any program.
///
/// Infeasible and unbounded primals are reported with their dual status.
/// Otherwise the dual solution comes from the zero-objective case, from the
/// polar body directly, or from the polar body of the program translated by
/// a feasible point. The result is verified before it is returned.
pub fn strong_duality(p: &LinearProgram) -> Result<StrongDualityReport> {
    let primal = solve_fm(p)?;
    let SolveOutcome::Optimal { value, witness } = primal else {
        let pair = classify_pair(p)?;
        return Ok(StrongDualityReport {
            nu_max: pair.primal.nu_max(),
            nu_min: pair.dual.nu_min(),
            primal: pair.primal,
            dual: pair.dual,
            path: None,
            chain: None,
        });
    };
    if p.c().is_zero() {
        return certify(p, value, witness, DualityPath::ZeroObjective, Vector::zeros(p.m()));
    }
    if p.b().iter().all(|b| !b.is_negative()) {
        let polar = dual_from_polar(p)?;
        return certify(p, value, witness, DualityPath::OriginFeasible, polar.y);
    }
    let anchor = match fm_feasible(&InequalitySystem::from_program(p))?.point() {
        Some(x0) => x0.clone(),
        None => return Err(Error::Inconsistency("optimal primal has no feasible point".into())),
    };
    translated(p, value, witness, anchor)
}

/// Like [`strong_duality`] for an optimal primal, but always takes the
/// translation route with the given feasible anchor.
pub fn strong_duality_translated(p: &LinearProgram, anchor: &Vector) -> Result<StrongDualityReport> {
    match solve_fm(p)? {
        SolveOutcome::Optimal { value, witness } if !p.c().is_zero() => translated(p, value, witness, anchor.clone()),
        SolveOutcome::Optimal { .. } => Err(Error::ZeroObjective),
        other => Err(Error::Inconsistency(format!("translation needs an optimal primal, got {}", other.status()))),
    }
}

fn translated(p: &LinearProgram, value: Rational, witness: Vector, anchor: Vector) -> Result<StrongDualityReport> {
    let shifted = p.translate(&anchor)?;
    let polar = dual_from_polar(&shifted.program)?;
    // <b',y> + <c,x0> = <b,y>, and y needs no adjustment
    let nu_min = shifted.untranslate_value(&polar.nu_min.clone().into());
    if nu_min != ExtendedRational::Finite(dot(p.b(), &polar.y)?) {
        return Err(Error::Inconsistency(format!("translated dual value {nu_min} does not match <b,y>")));
    }
    certify(p, value, witness, DualityPath::Translated(anchor), polar.y)
}

fn certify(p: &LinearProgram, value: Rational, x: Vector, path: DualityPath, y: Vector) -> Result<StrongDualityReport> {
    let dump = |why: &str| {
        Error::Inconsistency(format!(
            "{why}\nprogram A = {:?}\nb = {}\nc = {}\nx = {x}\ny = {y}\nnu_max = {value}\npath = {path}",
            p.a().rows().iter().map(ToString::to_string).collect::<Vec<_>>(),
            p.b(),
            p.c()
        ))
    };
    let cert = check_weak(p, &x, &y).map_err(|e| dump(&e.to_string()))?;
    if cert.dual_value != value {
        return Err(dump("nu_max differs from nu_min"));
    }
    if !verify_optimal_pair(p, &x, &y).is_optimal() {
        return Err(dump("pair is not certified optimal"));
    }
    Ok(StrongDualityReport {
        nu_max: ExtendedRational::Finite(value.clone()),
        nu_min: ExtendedRational::Finite(cert.dual_value.clone()),
        primal: SolveOutcome::Optimal { value: value.clone(), witness: x },
        dual: SolveOutcome::Optimal { value, witness: y },
        path: Some(path),
        chain: Some(cert.chain),
    })
}
