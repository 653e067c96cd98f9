//! H-polyhedra, their support and radial functions, and polar bodies.
//!
//! The polar of an origin-containing polyhedron `{x : <a_i,x> <= b_i}` is kept
//! in generator form: the set of `sum mu_i a_i` with `mu >= 0` and
//! `sum mu_i b_i <= 1`. Each half-space contributes the segment `[0, a_i/b_i]`
//! when `b_i > 0` and the ray along `a_i` when `b_i = 0`, and the polar of the
//! intersection is the convex hull of those pieces. Membership, support and
//! radial queries on a [`PolarRep`] are exact linear programs over the
//! weights `mu`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{dot, parse_rational, ExtendedRational, Matrix, Rational, Vector};
use crate::program::LinearProgram;
use crate::solver::{fm_feasible, solve_fm, InequalitySystem, SolveOutcome};

/// The closed half-space `<normal, x> <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vector,
    pub offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vector, offset: Rational) -> Self {
        HalfSpace { normal, offset }
    }
}

/// `{x in R^dim : <a_i, x> <= b_i for every constraint}`. May be empty or unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolyhedron {
    dim: usize,
    constraints: Vec<HalfSpace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Normalized(HPolyhedron),
    /// Some row reads `0 <= negative`.
    ProvenEmpty,
}

impl HPolyhedron {
    pub fn new(dim: usize, constraints: Vec<HalfSpace>) -> Result<Self> {
        for h in &constraints {
            check_dim(dim, h.normal.dim())?;
        }
        Ok(HPolyhedron { dim, constraints })
    }

    /// All of `R^dim`.
    pub fn whole_space(dim: usize) -> Self {
        HPolyhedron { dim, constraints: Vec::new() }
    }

    /// The cube `[-r, r]^dim`, rows ordered `x_1 <= r, -x_1 <= r, x_2 <= r, ...`.
    pub fn cube(dim: usize, radius: Rational) -> Self {
        let constraints = (0..dim)
            .flat_map(|j| {
                let e = Vector::unit(dim, j);
                [HalfSpace::new(e.clone(), radius.clone()), HalfSpace::new(e.negated(), radius.clone())]
            })
            .collect();
        HPolyhedron { dim, constraints }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }

    /// Returns a copy with `constraint` appended.
    pub fn with_constraint(&self, constraint: HalfSpace) -> Result<Self> {
        check_dim(self.dim, constraint.normal.dim())?;
        let mut out = self.clone();
        out.constraints.push(constraint);
        Ok(out)
    }

    /// Drops vacuous zero-normal rows, or reports emptiness if one reads
    /// `0 <= negative`.
    pub fn normalize_rows(&self) -> Normalized {
        let mut kept = Vec::with_capacity(self.constraints.len());
        for h in &self.constraints {
            if h.normal.is_zero() {
                if h.offset.is_negative() {
                    return Normalized::ProvenEmpty;
                }
            } else {
                kept.push(h.clone());
            }
        }
        Normalized::Normalized(HPolyhedron { dim: self.dim, constraints: kept })
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        check_dim(self.dim, x.dim())?;
        Ok(self.constraints.iter().all(|h| dot(&h.normal, x).expect("checked") <= h.offset))
    }

    pub fn contains_origin(&self) -> bool {
        self.constraints.iter().all(|h| !h.offset.is_negative())
    }

    /// `max <u, x> s.t. x in self`, as a program.
    pub fn support_program(&self, u: &Vector) -> Result<LinearProgram> {
        check_dim(self.dim, u.dim())?;
        let a = Matrix::new(self.constraints.iter().map(|h| h.normal.clone()).collect(), self.dim)?;
        let b: Vector = self.constraints.iter().map(|h| h.offset.clone()).collect();
        LinearProgram::new(a, b, u.clone())
    }

    /// Support function `h(u) = sup { <x,u> : x in self }`, `+inf` along
    /// unbounded directions. The polyhedron must be nonempty.
    pub fn support(&self, u: &Vector) -> Result<ExtendedRational> {
        check_dim(self.dim, u.dim())?;
        if u.is_zero() {
            return Err(Error::ZeroDirection);
        }
        match solve_fm(&self.support_program(u)?)? {
            SolveOutcome::Optimal { value, .. } => Ok(value.into()),
            SolveOutcome::Unbounded => Ok(ExtendedRational::PlusInfinity),
            SolveOutcome::Infeasible => Err(Error::EmptyPolyhedron),
        }
    }

    /// Radial function `rho(u) = sup { l >= 0 : l u in self }` of a polyhedron
    /// containing the origin: the smallest `b_i / <a_i,u>` over rows with
    /// `<a_i,u> > 0`, or `+inf` if there is none.
    pub fn radial(&self, u: &Vector) -> Result<ExtendedRational> {
        check_dim(self.dim, u.dim())?;
        if u.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if let Some(index) = self.constraints.iter().position(|h| h.offset.is_negative()) {
            return Err(Error::OriginNotContained { index });
        }
        let best = self
            .constraints
            .iter()
            .filter_map(|h| {
                let slope = dot(&h.normal, u).expect("checked");
                slope.is_positive().then(|| &h.offset / slope)
            })
            .min();
        Ok(best.map_or(ExtendedRational::PlusInfinity, ExtendedRational::Finite))
    }

    /// The polar body in generator form. Vacuous zero-normal rows are dropped
    /// first; any negative offset means the origin is outside.
    pub fn polar(&self) -> Result<PolarRep> {
        if let Some(index) = self.constraints.iter().position(|h| h.offset.is_negative()) {
            return Err(Error::OriginNotContained { index });
        }
        let generators = self
            .constraints
            .iter()
            .filter(|h| !h.normal.is_zero())
            .map(|h| (h.normal.clone(), h.offset.clone()))
            .collect();
        Ok(PolarRep { dim: self.dim, generators })
    }
}

/// The polar of one half-space `<a,x> <= b` containing the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarGenerator {
    /// `[0, a/b]` for `b > 0`.
    Segment(Vector),
    /// `{ l a : l >= 0 }` for `b = 0`.
    Ray(Vector),
}

pub fn polar_halfspace(a: &Vector, b: &Rational) -> Result<PolarGenerator> {
    if a.is_zero() {
        return Err(Error::ZeroNormal);
    }
    if b.is_negative() {
        return Err(Error::NegativeOffset(b.to_string()));
    }
    if b.is_zero() {
        Ok(PolarGenerator::Ray(a.clone()))
    } else {
        Ok(PolarGenerator::Segment(a.scale(&b.recip())))
    }
}

/// `{ sum mu_i a_i : mu >= 0, sum mu_i b_i <= 1 }`, the polar of the
/// polyhedron with rows `(a_i, b_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolarRep {
    dim: usize,
    generators: Vec<(Vector, Rational)>,
}

impl PolarRep {
    /// Builds a representation directly, enforcing `a_i != 0` and `b_i >= 0`.
    pub fn new(dim: usize, generators: Vec<(Vector, Rational)>) -> Result<Self> {
        for (a, b) in &generators {
            check_dim(dim, a.dim())?;
            polar_halfspace(a, b)?;
        }
        Ok(PolarRep { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The `(a_i, b_i)` pairs.
    pub fn pairs(&self) -> &[(Vector, Rational)] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<PolarGenerator> {
        self.generators.iter().map(|(a, b)| polar_halfspace(a, b).expect("validated on construction")).collect()
    }

    fn weight_count(&self) -> usize {
        self.generators.len()
    }

    /// Rows `-mu_i <= 0` and `sum mu_i b_i <= 1` over `width` variables whose
    /// first `k` are the weights.
    fn weight_rows(&self, width: usize) -> Vec<(Vector, Rational)> {
        let k = self.weight_count();
        let mut rows: Vec<(Vector, Rational)> =
            (0..k).map(|i| (Vector::unit(width, i).negated(), Rational::zero())).collect();
        let mut budget = vec![Rational::zero(); width];
        for (slot, (_, b)) in budget.iter_mut().zip(&self.generators) {
            *slot = b.clone();
        }
        rows.push((budget.into(), Rational::one()));
        rows
    }

    /// Rows `+-(sum mu_i a_i - rho * target) <= 0` over the weights and, when
    /// `rho_slot` is given, a scale variable in that slot. Without a scale
    /// variable the target sits on the right-hand side instead.
    fn span_rows(&self, width: usize, target: &Vector, rho_slot: Option<usize>) -> Vec<(Vector, Rational)> {
        let mut rows = Vec::with_capacity(2 * self.dim);
        for j in 0..self.dim {
            let mut coeffs = vec![Rational::zero(); width];
            for (slot, (a, _)) in coeffs.iter_mut().zip(&self.generators) {
                *slot = a[j].clone();
            }
            let rhs = match rho_slot {
                Some(r) => {
                    coeffs[r] = -target[j].clone();
                    Rational::zero()
                }
                None => target[j].clone(),
            };
            let coeffs = Vector::new(coeffs);
            rows.push((coeffs.negated(), -rhs.clone()));
            rows.push((coeffs, rhs));
        }
        rows
    }

    /// Membership: some `mu >= 0` with `sum mu_i a_i = y` and `sum mu_i b_i <= 1`.
    pub fn polar_contains(&self, y: &Vector) -> Result<bool> {
        check_dim(self.dim, y.dim())?;
        let k = self.weight_count();
        let mut rows = self.span_rows(k, y, None);
        rows.extend(self.weight_rows(k));
        Ok(fm_feasible(&InequalitySystem::new(k, rows)?)?.is_feasible())
    }

    /// `max sum mu_i <a_i,u>` subject to the weight constraints.
    pub fn support_program(&self, u: &Vector) -> Result<LinearProgram> {
        check_dim(self.dim, u.dim())?;
        let k = self.weight_count();
        let (a, b): (Vec<Vector>, Vec<Rational>) = self.weight_rows(k).into_iter().unzip();
        let c: Vector = self.generators.iter().map(|(ai, _)| dot(ai, u).expect("checked")).collect();
        LinearProgram::new(Matrix::new(a, k)?, b.into(), c)
    }

    /// Support function of the polar body.
    pub fn polar_support(&self, u: &Vector) -> Result<ExtendedRational> {
        if u.is_zero() {
            return Err(Error::ZeroDirection);
        }
        match solve_fm(&self.support_program(u)?)? {
            SolveOutcome::Optimal { value, .. } => Ok(value.into()),
            SolveOutcome::Unbounded => Ok(ExtendedRational::PlusInfinity),
            SolveOutcome::Infeasible => Err(Error::Inconsistency("polar weight system is infeasible".into())),
        }
    }

    /// `max rho` over variables `(mu_1..mu_k, rho)` subject to
    /// `rho u = sum mu_i a_i`, `mu >= 0`, `sum mu_i b_i <= 1`, `rho >= 0`.
    pub fn radial_program(&self, u: &Vector) -> Result<LinearProgram> {
        check_dim(self.dim, u.dim())?;
        let k = self.weight_count();
        let width = k + 1;
        let mut rows = self.span_rows(width, u, Some(k));
        rows.extend(self.weight_rows(width));
        rows.push((Vector::unit(width, k).negated(), Rational::zero()));
        let (a, b): (Vec<Vector>, Vec<Rational>) = rows.into_iter().unzip();
        LinearProgram::new(Matrix::new(a, width)?, b.into(), Vector::unit(width, k))
    }

    /// Radial function of the polar body.
    pub fn polar_radial(&self, u: &Vector) -> Result<ExtendedRational> {
        if u.is_zero() {
            return Err(Error::ZeroDirection);
        }
        match solve_fm(&self.radial_program(u)?)? {
            SolveOutcome::Optimal { value, .. } => Ok(value.into()),
            SolveOutcome::Unbounded => Ok(ExtendedRational::PlusInfinity),
            SolveOutcome::Infeasible => Err(Error::Inconsistency("radial program is infeasible".into())),
        }
    }

    /// Membership in the polar of the polar: `h_{K*}(y) <= 1`.
    pub fn bipolar_contains(&self, y: &Vector) -> Result<bool> {
        check_dim(self.dim, y.dim())?;
        if y.is_zero() {
            return Ok(true);
        }
        Ok(self.polar_support(y)? <= ExtendedRational::Finite(Rational::one()))
    }
}

/// The four quantities tied together by the support/radial reciprocity of a
/// body and its polar, for one direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reciprocity {
    pub support: ExtendedRational,
    pub polar_radial: ExtendedRational,
    pub polar_support: ExtendedRational,
    pub radial: ExtendedRational,
}

impl Reciprocity {
    /// `h_K(u) = 1/rho_{K*}(u)` and `h_{K*}(u) = 1/rho_K(u)`, with `1/inf = 0`
    /// and `1/0 = inf`.
    pub fn holds(&self) -> bool {
        self.support == self.polar_radial.recip() && self.polar_support == self.radial.recip()
    }

    /// The products `h_K * rho_{K*}` and `h_{K*} * rho_K`. Errors when a pair
    /// is `0 * inf`, which happens exactly when one side is infinite.
    pub fn products(&self) -> Result<(ExtendedRational, ExtendedRational)> {
        Ok((self.support.checked_mul(&self.polar_radial)?, self.polar_support.checked_mul(&self.radial)?))
    }
}

/// Evaluates both sides of the support/radial reciprocity for an
/// origin-containing polyhedron and a nonzero direction.
pub fn reciprocity(p: &HPolyhedron, u: &Vector) -> Result<Reciprocity> {
    let polar = p.polar()?;
    Ok(Reciprocity {
        support: p.support(u)?,
        polar_radial: polar.polar_radial(u)?,
        polar_support: polar.polar_support(u)?,
        radial: p.radial(u)?,
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub(crate) fn parse_rationals(tokens: &[&str], line: usize) -> Result<Vector> {
    tokens
        .iter()
        .map(|t| parse_rational(t).map_err(|e| parse_error(line, e.to_string())))
        .collect::<Result<Vec<_>>>()
        .map(Vector::new)
}

/// Text form: a `vars n` line, then one `row <n rationals> <= <rational>`
/// line per constraint. `#` starts a comment.
impl FromStr for HPolyhedron {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut dim: Option<usize> = None;
        let mut constraints = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let Some((&keyword, rest)) = tokens.split_first() else {
                continue;
            };
            match (keyword, dim) {
                ("vars", None) => {
                    let [count] = rest else {
                        return Err(parse_error(line, "expected `vars <count>`"));
                    };
                    let n: usize = count.parse().map_err(|_| parse_error(line, "bad variable count"))?;
                    if n == 0 {
                        return Err(parse_error(line, "variable count must be positive"));
                    }
                    dim = Some(n);
                }
                ("vars", Some(_)) => return Err(parse_error(line, "duplicate `vars` line")),
                ("row", Some(n)) => {
                    if rest.len() != n + 2 || rest[n] != "<=" {
                        return Err(parse_error(line, format!("expected `row <{n} rationals> <= <rational>`")));
                    }
                    let normal = parse_rationals(&rest[..n], line)?;
                    let offset = parse_rationals(&rest[n + 1..], line)?.into_entries().remove(0);
                    constraints.push(HalfSpace::new(normal, offset));
                }
                ("row", None) => return Err(parse_error(line, "`row` before `vars`")),
                (other, _) => return Err(parse_error(line, format!("unknown keyword `{other}`"))),
            }
        }
        let dim = dim.ok_or_else(|| parse_error(0, "missing `vars` line"))?;
        HPolyhedron::new(dim, constraints)
    }
}

impl fmt::Display for HPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.dim)?;
        for h in &self.constraints {
            writeln!(f, "row {} <= {}", h.normal, h.offset)?;
        }
        Ok(())
    }
}

/// One `gen <a_i> weight <b_i>` line per generator.
impl fmt::Display for PolarRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.generators {
            writeln!(f, "gen {a} weight {b}")?;
        }
        Ok(())
    }
}
