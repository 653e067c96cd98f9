//! Basic-solution enumeration: the second, independent LP oracle.

use num_traits::Signed;

use crate::error::Result;
use crate::exactnum::{independent_columns, solve_unique, Matrix, Rational, Vector};
use crate::program::LinearProgram;
use crate::solver::fm::{fm_feasible, solve_fm, InequalitySystem};
use crate::solver::SolveOutcome;

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if k <= n { Some((0..k).collect::<Vec<_>>()) } else { None };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if succ[i] < n - k + i {
                succ[i] += 1;
                for j in i + 1..k {
                    succ[j] = succ[j - 1] + 1;
                }
                next = Some(succ);
                break;
            }
        }
        Some(current)
    })
}

/// A direction `d` with `Ad <= 0` and `<c,d> >= 1`, if one exists. Its
/// existence, for a feasible program, is equivalent to unboundedness.
pub fn recession_direction(p: &LinearProgram) -> Result<Option<Vector>> {
    let mut rows: Vec<(Vector, Rational)> =
        p.a().rows().iter().map(|a| (a.clone(), Rational::from_integer(0.into()))).collect();
    rows.push((p.c().negated(), Rational::from_integer((-1).into())));
    let system = InequalitySystem::new(p.n(), rows)?;
    Ok(fm_feasible(&system)?.point().cloned())
}

/// Basic feasible solutions of `Ax <= b`.
///
/// When `A` lacks full column rank, the variables outside a fixed maximal
/// set of independent columns are pinned to zero; every feasible point can
/// be shifted along the null space of `A` to such a point without changing
/// `Ax`. Solutions are returned in the lexicographic order of their defining
/// row subsets, without duplicates.
pub fn basic_feasible_solutions(p: &LinearProgram) -> Vec<Vector> {
    let n = p.n();
    let cols = independent_columns(p.a());
    let reduced: Vec<Vector> = p.a().rows().iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
    let mut found: Vec<Vector> = Vec::new();
    for subset in combinations(p.m(), cols.len()) {
        let rows: Vec<Vector> = subset.iter().map(|&i| reduced[i].clone()).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| p.b()[i].clone()).collect();
        let Some(sol) = solve_unique(&rows, &rhs, cols.len()) else {
            continue;
        };
        let mut x = vec![Rational::from_integer(0.into()); n];
        for (&j, v) in cols.iter().zip(sol.into_entries()) {
            x[j] = v;
        }
        let x = Vector::new(x);
        if p.is_feasible(&x).expect("dimensions agree") && !found.contains(&x) {
            found.push(x);
        }
    }
    found
}

/// Basic feasible solutions of the asymmetric dual `A^T y = c, y >= 0`:
/// for every set of linearly independent rows of `A` whose span reaches `c`
/// with nonnegative weights, the corresponding `y`.
pub fn dual_basic_feasible_solutions(p: &LinearProgram) -> Vec<Vector> {
    let (m, n) = (p.m(), p.n());
    let mut found: Vec<Vector> = Vec::new();
    for k in 0..=m.min(n) {
        for subset in combinations(m, k) {
            let columns = Matrix::new(subset.iter().map(|&i| p.a().row(i).clone()).collect(), n)
                .expect("rows of A have width n")
                .transpose();
            let Some(weights) = solve_unique(columns.rows(), p.c().entries(), k) else {
                continue;
            };
            if weights.iter().any(|w| w.is_negative()) {
                continue;
            }
            let mut y = vec![Rational::from_integer(0.into()); m];
            for (&i, w) in subset.iter().zip(weights.into_entries()) {
                y[i] = w;
            }
            let y = Vector::new(y);
            if !found.contains(&y) {
                found.push(y);
            }
        }
    }
    found
}

/// Solves `max <c,x> s.t. Ax <= b` by enumerating basic solutions.
///
/// Feasibility comes from Fourier-Motzkin, unboundedness from
/// [`recession_direction`]. Among optimal basic solutions the
/// lexicographically smallest witness is returned.
pub fn solve_enum(p: &LinearProgram) -> Result<SolveOutcome> {
    if !fm_feasible(&InequalitySystem::from_program(p))?.is_feasible() {
        return Ok(SolveOutcome::Infeasible);
    }
    if recession_direction(p)?.is_some() {
        return Ok(SolveOutcome::Unbounded);
    }
    let mut best: Option<(Rational, Vector)> = None;
    for x in basic_feasible_solutions(p) {
        let value = p.objective(&x)?;
        let better = match &best {
            None => true,
            Some((v, w)) => value > *v || (value == *v && x < *w),
        };
        if better {
            best = Some((value, x));
        }
    }
    match best {
        Some((value, witness)) => Ok(SolveOutcome::Optimal { value, witness }),
        // a feasible bounded program always has a basic solution in the
        // reduced coordinates; this is reached only if that argument fails
        None => solve_fm(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{dot, int};

    fn lp(rows: &[&[i64]], n: usize, b: &[i64], c: &[i64]) -> LinearProgram {
        LinearProgram::new(Matrix::from_ints(rows, n).unwrap(), Vector::from_ints(b), Vector::from_ints(c)).unwrap()
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let all: Vec<Vec<usize>> = combinations(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(8, 4).count(), 70);
    }

    #[test]
    fn enum_examples() {
        let square = lp(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2, &[1, 1, 1, 1], &[1, 1]);
        assert_eq!(
            solve_enum(&square).unwrap(),
            SolveOutcome::Optimal { value: int(2), witness: Vector::from_ints(&[1, 1]) }
        );
        let p = lp(&[&[1, 1], &[0, -1]], 2, &[4, -1], &[1, 0]);
        assert_eq!(
            solve_enum(&p).unwrap(),
            SolveOutcome::Optimal { value: int(3), witness: Vector::from_ints(&[3, 1]) }
        );
        assert_eq!(solve_enum(&lp(&[&[-1]], 1, &[0], &[1])).unwrap(), SolveOutcome::Unbounded);
        assert_eq!(solve_enum(&lp(&[&[1], &[-1]], 1, &[-1, -1], &[1])).unwrap(), SolveOutcome::Infeasible);
    }

    #[test]
    fn ties_pick_smallest_witness() {
        // maximize x2 over the square: (-1,1) and (1,1) tie
        let square = lp(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2, &[1, 1, 1, 1], &[0, 1]);
        assert_eq!(solve_enum(&square).unwrap().witness(), Some(&Vector::from_ints(&[-1, 1])));
    }

    #[test]
    fn rank_deficient_program() {
        // a slab x1 + x2 <= 1, -x1 - x2 <= 1 has no vertex
        let p = lp(&[&[1, 1], &[-1, -1]], 2, &[1, 1], &[2, 2]);
        assert_eq!(
            solve_enum(&p).unwrap(),
            SolveOutcome::Optimal { value: int(2), witness: Vector::from_ints(&[1, 0]) }
        );
        let p = lp(&[&[0, 0]], 2, &[1], &[0, 0]);
        assert_eq!(solve_enum(&p).unwrap(), SolveOutcome::Optimal { value: int(0), witness: Vector::zeros(2) });
    }

    #[test]
    fn recession_certificate() {
        let p = lp(&[&[-1, 0], &[0, 1]], 2, &[0, 3], &[1, 1]);
        let d = recession_direction(&p).unwrap().unwrap();
        assert!(p.a().apply(&d).unwrap().iter().all(|v| !v.is_positive()));
        assert!(dot(p.c(), &d).unwrap() >= int(1));
        let square = lp(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2, &[1, 1, 1, 1], &[1, 1]);
        assert_eq!(recession_direction(&square).unwrap(), None);
    }

    #[test]
    fn dual_basic_solutions_of_square() {
        let square = lp(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2, &[1, 1, 1, 1], &[1, 1]);
        assert_eq!(dual_basic_feasible_solutions(&square), vec![Vector::from_ints(&[1, 0, 1, 0])]);
        let zero = lp(&[&[1], &[-1]], 1, &[1, 1], &[0]);
        assert_eq!(dual_basic_feasible_solutions(&zero), vec![Vector::zeros(2)]);
    }
}
