//! Fourier-Motzkin elimination over exact rationals.
//!
//! Every row carries the nonnegative multipliers that produce it from the
//! rows the system was built with, so an infeasible system always comes with
//! a Farkas certificate that can be replayed against the input.
//!
//! Pruning after each elimination step:
//! - rows are scaled so the first nonzero coefficient is `+-1`, then rows with
//!   identical coefficients keep only the smallest right-hand side;
//! - a generated row is dropped when its label holds more than `k + 1` input
//!   rows after `k` eliminations (Chernikov's rule). When two rows merge, the
//!   survivor's label is the intersection of both labels, so the survivor
//!   dominates every row the unmerged system would have kept.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{dot_slices, Rational, Vector};
use crate::program::LinearProgram;
use crate::solver::SolveOutcome;

pub const DEFAULT_ROW_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn singleton(i: usize) -> Self {
        let mut words = vec![0; i / 64 + 1];
        words[i / 64] |= 1 << (i % 64);
        RowSet(words)
    }

    fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut words = long.0.clone();
        for (w, o) in words.iter_mut().zip(&short.0) {
            *w |= o;
        }
        RowSet(words)
    }

    fn intersection(&self, other: &Self) -> Self {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
    /// Sparse nonnegative weights on the input rows, sorted by index.
    multipliers: Vec<(usize, Rational)>,
    label: RowSet,
}

impl Row {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn scaled(mut self, factor: &Rational) -> Row {
        debug_assert!(factor.is_positive());
        if factor.is_one() {
            return self;
        }
        for c in &mut self.coeffs {
            *c *= factor;
        }
        self.rhs *= factor;
        for (_, w) in &mut self.multipliers {
            *w *= factor;
        }
        self
    }

    /// Scales so that the first nonzero coefficient has absolute value one.
    fn normalized(self) -> Row {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) if !lead.abs().is_one() => {
                let factor = lead.abs().recip();
                self.scaled(&factor)
            }
            _ => self,
        }
    }

    /// `pos_weight * p + neg_weight * q`.
    fn combine(p: &Row, pos_weight: &Rational, q: &Row, neg_weight: &Rational) -> Row {
        let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a * pos_weight + b * neg_weight).collect();
        let rhs = &p.rhs * pos_weight + &q.rhs * neg_weight;
        let mut multipliers = Vec::with_capacity(p.multipliers.len() + q.multipliers.len());
        let (mut i, mut j) = (0, 0);
        while i < p.multipliers.len() || j < q.multipliers.len() {
            let left = p.multipliers.get(i);
            let right = q.multipliers.get(j);
            match (left, right) {
                (Some((a, wa)), Some((b, wb))) if a == b => {
                    multipliers.push((*a, wa * pos_weight + wb * neg_weight));
                    i += 1;
                    j += 1;
                }
                (Some((a, wa)), Some((b, _))) if a < b => {
                    multipliers.push((*a, wa * pos_weight));
                    i += 1;
                }
                (Some((a, wa)), None) => {
                    multipliers.push((*a, wa * pos_weight));
                    i += 1;
                }
                (_, Some((b, wb))) => {
                    multipliers.push((*b, wb * neg_weight));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Row { coeffs, rhs, multipliers, label: p.label.union(&q.label) }
    }
}

/// A system of closed inequalities `<coeffs, x> <= rhs` over `dim` variables.
///
/// Rows are stored normalized and deduplicated, and rows that are trivially
/// true (`0 <= r` with `r >= 0`) are dropped. Eliminated variables keep their
/// coordinate but have a zero coefficient in every row.
#[derive(Debug, Clone)]
pub struct InequalitySystem {
    dim: usize,
    rows: Vec<Row>,
    eliminated: Vec<bool>,
    inputs: Arc<Vec<(Vector, Rational)>>,
    row_limit: usize,
}

impl InequalitySystem {
    pub fn new<I>(dim: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vector, Rational)>,
    {
        let inputs: Vec<(Vector, Rational)> = rows.into_iter().collect();
        for (coeffs, _) in &inputs {
            check_dim(dim, coeffs.dim())?;
        }
        let mut out = RowSink::default();
        for (i, (coeffs, rhs)) in inputs.iter().enumerate() {
            out.insert(Row {
                coeffs: coeffs.entries().to_vec(),
                rhs: rhs.clone(),
                multipliers: vec![(i, Rational::one())],
                label: RowSet::singleton(i),
            });
        }
        Ok(InequalitySystem {
            dim,
            rows: out.rows,
            eliminated: vec![false; dim],
            inputs: Arc::new(inputs),
            row_limit: DEFAULT_ROW_LIMIT,
        })
    }

    /// The feasible region `{x : Ax <= b}` of a program, as a system.
    pub fn from_program(p: &LinearProgram) -> Self {
        let rows = p.a().rows().iter().cloned().zip(p.b().iter().cloned());
        Self::new(p.n(), rows).expect("program rows share its width")
    }

    /// Caps the number of rows any elimination may produce.
    pub fn with_row_limit(mut self, limit: usize) -> Self {
        self.row_limit = limit;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_eliminated(&self, var: usize) -> bool {
        self.eliminated.get(var).copied().unwrap_or(false)
    }

    /// The current rows as `(coeffs, rhs)` pairs.
    pub fn rows(&self) -> impl Iterator<Item = (&[Rational], &Rational)> {
        self.rows.iter().map(|r| (r.coeffs.as_slice(), &r.rhs))
    }

    /// The rows the system was built from, unnormalized.
    pub fn inputs(&self) -> &[(Vector, Rational)] {
        &self.inputs
    }

    /// True iff `x` satisfies every current row.
    pub fn contains(&self, x: &Vector) -> Result<bool> {
        check_dim(self.dim, x.dim())?;
        Ok(self.rows.iter().all(|r| dot_slices(&r.coeffs, x.entries()) <= r.rhs))
    }

    /// True iff `x` satisfies every input row.
    pub fn inputs_contain(&self, x: &Vector) -> Result<bool> {
        check_dim(self.dim, x.dim())?;
        Ok(self.inputs.iter().all(|(a, b)| dot_slices(a.entries(), x.entries()) <= *b))
    }

    /// Checks the recorded multipliers of every row against the inputs.
    pub fn audit(&self) -> bool {
        self.rows.iter().all(|row| {
            let (coeffs, rhs) = self.replay(&row.multipliers);
            row.multipliers.iter().all(|(_, w)| !w.is_negative()) && coeffs == row.coeffs && rhs == row.rhs
        })
    }

    fn replay(&self, multipliers: &[(usize, Rational)]) -> (Vec<Rational>, Rational) {
        let mut coeffs = vec![Rational::zero(); self.dim];
        let mut rhs = Rational::zero();
        for (i, w) in multipliers {
            let (a, b) = &self.inputs[*i];
            for (acc, x) in coeffs.iter_mut().zip(a.iter()) {
                *acc += w * x;
            }
            rhs += w * b;
        }
        (coeffs, rhs)
    }

    /// `(positive, negative)` occurrence counts of a variable.
    fn occurrences(&self, var: usize) -> (usize, usize) {
        self.rows.iter().fold((0, 0), |(p, n), r| match r.coeffs[var].signum() {
            s if s.is_positive() => (p + 1, n),
            s if s.is_negative() => (p, n + 1),
            _ => (p, n),
        })
    }

    fn contradiction(&self) -> Option<&Row> {
        self.rows.iter().find(|r| r.is_zero() && r.rhs.is_negative())
    }
}

#[derive(Default)]
struct RowSink {
    rows: Vec<Row>,
    by_coeffs: HashMap<Vec<Rational>, usize>,
}

impl RowSink {
    fn insert(&mut self, row: Row) {
        let row = row.normalized();
        if row.is_zero() && !row.rhs.is_negative() {
            return;
        }
        match self.by_coeffs.get(&row.coeffs) {
            Some(&k) => {
                let kept = &mut self.rows[k];
                let label = kept.label.intersection(&row.label);
                if row.rhs < kept.rhs {
                    *kept = row;
                }
                kept.label = label;
            }
            None => {
                self.by_coeffs.insert(row.coeffs.clone(), self.rows.len());
                self.rows.push(row);
            }
        }
    }
}

/// Projects `system` along variable `var` (0-based).
///
/// Rows without `var` pass through; every pair of a row with a positive and
/// a row with a negative coefficient on `var` contributes the positive
/// combination that cancels it. The result keeps the dimension, with `var`
/// marked eliminated.
pub fn fm_eliminate(system: &InequalitySystem, var: usize) -> Result<InequalitySystem> {
    if var >= system.dim {
        return Err(Error::IndexOutOfRange { index: var, dim: system.dim });
    }
    let mut eliminated = system.eliminated.clone();
    eliminated[var] = true;
    let allowed = eliminated.iter().filter(|&&e| e).count() + 1;

    let mut sink = RowSink::default();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for row in &system.rows {
        match row.coeffs[var].signum() {
            s if s.is_positive() => pos.push(row),
            s if s.is_negative() => neg.push(row),
            _ => sink.insert(row.clone()),
        }
    }
    for p in &pos {
        for q in &neg {
            let label = p.label.union(&q.label);
            if label.len() > allowed {
                continue;
            }
            let mut combined = Row::combine(p, &-&q.coeffs[var], q, &p.coeffs[var]);
            combined.coeffs[var] = Rational::zero();
            combined.label = label;
            sink.insert(combined);
            if sink.rows.len() > system.row_limit {
                return Err(Error::RowLimit { limit: system.row_limit });
            }
        }
    }
    Ok(InequalitySystem {
        dim: system.dim,
        rows: sink.rows,
        eliminated,
        inputs: Arc::clone(&system.inputs),
        row_limit: system.row_limit,
    })
}

/// Nonnegative weights on the input rows of a system whose combination reads
/// `0 <= negative`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    multipliers: Vec<Rational>,
}

impl FarkasCertificate {
    /// Dense weights, one per input row.
    pub fn multipliers(&self) -> &[Rational] {
        &self.multipliers
    }

    /// Replays the combination against the input rows of `system`.
    pub fn verify(&self, system: &InequalitySystem) -> bool {
        if self.multipliers.len() != system.inputs.len() || self.multipliers.iter().any(|w| w.is_negative()) {
            return false;
        }
        let sparse: Vec<(usize, Rational)> = self.multipliers.iter().cloned().enumerate().collect();
        let (coeffs, rhs) = system.replay(&sparse);
        coeffs.iter().all(Zero::is_zero) && rhs.is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FmOutcome {
    FeasiblePoint(Vector),
    Infeasible(FarkasCertificate),
}

impl FmOutcome {
    pub fn point(&self) -> Option<&Vector> {
        match self {
            FmOutcome::FeasiblePoint(x) => Some(x),
            FmOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.point().is_some()
    }
}

struct Elimination {
    /// `(variable, system before eliminating it)` in elimination order.
    stages: Vec<(usize, InequalitySystem)>,
    last: InequalitySystem,
}

/// Eliminates `vars` one at a time, picking next the variable with the
/// fewest generated pairs (ties to the lowest index).
fn eliminate_all(system: InequalitySystem, vars: &[usize]) -> Result<Elimination> {
    let mut remaining: Vec<usize> = vars.to_vec();
    let mut stages = Vec::with_capacity(vars.len());
    let mut current = system;
    while !remaining.is_empty() {
        if current.contradiction().is_some() {
            break;
        }
        let (slot, _) = remaining
            .iter()
            .enumerate()
            .map(|(slot, &v)| {
                let (p, n) = current.occurrences(v);
                (slot, (p * n) as isize - (p + n) as isize)
            })
            .min_by_key(|&(slot, cost)| (cost, remaining[slot]))
            .expect("remaining is nonempty");
        let var = remaining.remove(slot);
        let next = fm_eliminate(&current, var)?;
        stages.push((var, current));
        current = next;
    }
    Ok(Elimination { stages, last: current })
}

fn farkas_from(system: &InequalitySystem, row: &Row) -> Result<FarkasCertificate> {
    let mut multipliers = vec![Rational::zero(); system.inputs.len()];
    for (i, w) in &row.multipliers {
        multipliers[*i] = w.clone();
    }
    let cert = FarkasCertificate { multipliers };
    if !cert.verify(system) {
        return Err(Error::Inconsistency("Farkas certificate does not replay".into()));
    }
    Ok(cert)
}

/// Interval of values for `var` allowed by `system` with every other
/// coordinate fixed at `point`.
fn interval(system: &InequalitySystem, var: usize, point: &[Rational]) -> (Option<Rational>, Option<Rational>) {
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    for row in &system.rows {
        let a = &row.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let rest: Rational = row
            .coeffs
            .iter()
            .zip(point)
            .enumerate()
            .filter(|(j, (c, x))| *j != var && !c.is_zero() && !x.is_zero())
            .fold(Rational::zero(), |acc, (_, (c, x))| acc + c * x);
        let bound = (&row.rhs - rest) / a;
        if a.is_positive() {
            if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        } else if lower.as_ref().is_none_or(|l| bound > *l) {
            lower = Some(bound);
        }
    }
    (lower, upper)
}

fn back_substitute(stages: &[(usize, InequalitySystem)], mut point: Vec<Rational>) -> Result<Vec<Rational>> {
    for (var, before) in stages.iter().rev() {
        point[*var] = Rational::zero();
        let value = match interval(before, *var, &point) {
            (Some(lo), Some(hi)) if lo > hi => {
                return Err(Error::Inconsistency(format!("empty interval for variable {var} in back-substitution")));
            }
            (Some(lo), Some(hi)) => (lo + hi) / Rational::from_integer(2.into()),
            (Some(lo), None) => lo + Rational::one(),
            (None, Some(hi)) => hi - Rational::one(),
            (None, None) => Rational::zero(),
        };
        point[*var] = value;
    }
    Ok(point)
}

/// Decides feasibility by eliminating every variable. A feasible system
/// yields an explicit point built by back-substitution (midpoint of each
/// residual interval, one past a lone bound, zero when unconstrained).
pub fn fm_feasible(system: &InequalitySystem) -> Result<FmOutcome> {
    let vars: Vec<usize> = (0..system.dim).filter(|&v| !system.is_eliminated(v)).collect();
    let elim = eliminate_all(system.clone(), &vars)?;
    if let Some(row) = elim.last.contradiction() {
        return Ok(FmOutcome::Infeasible(farkas_from(system, row)?));
    }
    let point: Vector = back_substitute(&elim.stages, vec![Rational::zero(); system.dim])?.into();
    if !system.contains(&point)? {
        return Err(Error::Inconsistency(format!("back-substituted point {point} is infeasible")));
    }
    Ok(FmOutcome::FeasiblePoint(point))
}

/// Solves `max <c,x> s.t. Ax <= b` by projecting onto an objective variable
/// `t` bound to `<c,x>` and reading off its tightest upper bound.
pub fn solve_fm(p: &LinearProgram) -> Result<SolveOutcome> {
    solve_fm_with_limit(p, DEFAULT_ROW_LIMIT)
}

pub fn solve_fm_with_limit(p: &LinearProgram, row_limit: usize) -> Result<SolveOutcome> {
    let n = p.n();
    let t = n;
    let widen = |row: &Vector, t_coeff: Rational| -> Vector {
        let mut v = row.entries().to_vec();
        v.push(t_coeff);
        v.into()
    };
    let mut rows: Vec<(Vector, Rational)> =
        p.a().rows().iter().zip(p.b().iter()).map(|(a, b)| (widen(a, Rational::zero()), b.clone())).collect();
    rows.push((widen(&p.c().negated(), Rational::one()), Rational::zero()));
    rows.push((widen(p.c(), -Rational::one()), Rational::zero()));
    let system = InequalitySystem::new(n + 1, rows)?.with_row_limit(row_limit);

    let vars: Vec<usize> = (0..n).collect();
    let elim = eliminate_all(system.clone(), &vars)?;
    if elim.last.contradiction().is_some() || elim.stages.len() < n {
        return Ok(SolveOutcome::Infeasible);
    }
    let zeros = vec![Rational::zero(); n + 1];
    let (lower, upper) = interval(&elim.last, t, &zeros);
    if let (Some(lo), Some(hi)) = (&lower, &upper) {
        if lo > hi {
            return Ok(SolveOutcome::Infeasible);
        }
    }
    let Some(value) = upper else {
        return Ok(SolveOutcome::Unbounded);
    };
    let mut point = zeros;
    point[t] = value.clone();
    let mut point = back_substitute(&elim.stages, point)?;
    point.truncate(n);
    let witness: Vector = point.into();
    if !p.is_feasible(&witness)? || p.objective(&witness)? != value {
        return Err(Error::Inconsistency(format!("witness {witness} does not attain {value}")));
    }
    Ok(SolveOutcome::Optimal { value, witness })
}
