//! Linear programs in the maximization form `max <c,x> s.t. Ax <= b`, their
//! asymmetric duals `min <b,y> s.t. A^T y = c, y >= 0`, and the transforms
//! between them.

use num_traits::{Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{dot, transpose_apply, ExtendedRational, Matrix, Rational, Vector};
use crate::polyhedron::{HPolyhedron, HalfSpace};

/// `max <c,x>` subject to `Ax <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearProgram {
    a: Matrix,
    b: Vector,
    c: Vector,
}

impl LinearProgram {
    pub fn new(a: Matrix, b: Vector, c: Vector) -> Result<Self> {
        check_dim(a.m(), b.dim())?;
        check_dim(a.n(), c.dim())?;
        Ok(LinearProgram { a, b, c })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Vector {
        &self.b
    }

    pub fn c(&self) -> &Vector {
        &self.c
    }

    /// Number of constraint rows.
    pub fn m(&self) -> usize {
        self.a.m()
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn objective(&self, x: &Vector) -> Result<Rational> {
        dot(&self.c, x)
    }

    /// Index of the first row with `<a_i, x> > b_i`, if any.
    pub fn first_violation(&self, x: &Vector) -> Result<Option<usize>> {
        let ax = self.a.apply(x)?;
        Ok(ax.iter().zip(self.b.iter()).position(|(lhs, rhs)| lhs > rhs))
    }

    pub fn is_feasible(&self, x: &Vector) -> Result<bool> {
        Ok(self.first_violation(x)?.is_none())
    }

    /// Errors with the violated row when `x` is not feasible.
    pub fn check_feasible(&self, x: &Vector) -> Result<()> {
        match self.first_violation(x)? {
            None => Ok(()),
            Some(index) => Err(Error::InfeasiblePoint { index }),
        }
    }

    /// The feasible region `{x : Ax <= b}`.
    pub fn feasible_region(&self) -> HPolyhedron {
        let constraints =
            self.a.rows().iter().zip(self.b.iter()).map(|(a, b)| HalfSpace::new(a.clone(), b.clone())).collect();
        HPolyhedron::new(self.n(), constraints).expect("rows share the program width")
    }

    /// The asymmetric dual. Same data, read as `min <b,y> s.t. A^T y = c, y >= 0`.
    pub fn dualize(&self) -> DualProgram {
        DualProgram { a: self.a.clone(), b: self.b.clone(), c: self.c.clone() }
    }

    /// Appends the sign rows `-x_j <= 0` after the existing rows.
    ///
    /// Applying this twice appends the sign rows twice; rows are never deduplicated.
    pub fn canonicalize(&self) -> LinearProgram {
        let mut a = self.a.clone();
        let mut b = self.b.clone().into_entries();
        for j in 0..self.n() {
            a.push_row(Vector::unit(self.n(), j).negated()).expect("unit row has width n");
            b.push(Rational::zero());
        }
        LinearProgram { a, b: b.into(), c: self.c.clone() }
    }

    /// The symmetric dual `min <b,y> s.t. A^T y >= c, y >= 0`, reading `self`
    /// as a canonical-form program (the `x >= 0` rows are implied, not
    /// read from the matrix). It is returned in maximization form
    /// `max <-b,y> s.t. -A^T y <= -c, -y <= 0`, so its optimal value is the
    /// negated dual optimum.
    pub fn symmetric_dual(&self) -> LinearProgram {
        let m = self.m();
        let at = self.a.transpose();
        let mut rows: Vec<Vector> = at.rows().iter().map(Vector::negated).collect();
        let mut rhs: Vec<Rational> = self.c.iter().map(|x| -x).collect();
        for i in 0..m {
            rows.push(Vector::unit(m, i).negated());
            rhs.push(Rational::zero());
        }
        LinearProgram {
            a: Matrix::new(rows, m).expect("transposed rows have width m"),
            b: rhs.into(),
            c: self.b.negated(),
        }
    }

    /// Shifts the program so that the feasible point `x0` becomes the origin.
    pub fn translate(&self, x0: &Vector) -> Result<TranslatedProgram> {
        check_dim(self.n(), x0.dim())?;
        self.check_feasible(x0)?;
        let shifted = self.b.checked_sub(&self.a.apply(x0)?)?;
        Ok(TranslatedProgram {
            program: LinearProgram { a: self.a.clone(), b: shifted, c: self.c.clone() },
            anchor: x0.clone(),
            objective_offset: dot(&self.c, x0)?,
        })
    }
}

/// `min <b,y>` subject to `A^T y = c`, `y >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualProgram {
    a: Matrix,
    b: Vector,
    c: Vector,
}

impl DualProgram {
    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Vector {
        &self.b
    }

    pub fn c(&self) -> &Vector {
        &self.c
    }

    /// Number of dual variables (one per primal row).
    pub fn m(&self) -> usize {
        self.a.m()
    }

    pub fn objective(&self, y: &Vector) -> Result<Rational> {
        dot(&self.b, y)
    }

    /// Checks `y >= 0` and `A^T y = c`, describing the first failure.
    pub fn check_feasible(&self, y: &Vector) -> Result<()> {
        check_dim(self.m(), y.dim())?;
        if let Some(i) = y.iter().position(|v| v.is_negative()) {
            return Err(Error::InfeasibleDualPoint(format!("y_{i} is negative")));
        }
        let combo = transpose_apply(&self.a, y)?;
        if let Some(j) = combo.iter().zip(self.c.iter()).position(|(l, r)| l != r) {
            return Err(Error::InfeasibleDualPoint(format!("equality row {j} of A^T y = c fails")));
        }
        Ok(())
    }

    pub fn is_feasible(&self, y: &Vector) -> bool {
        self.check_feasible(y).is_ok()
    }

    /// Encodes the dual as `max <-b,y>` over the rows `A^T y <= c`,
    /// `-A^T y <= -c`, `-y <= 0`, in that order. The optimum of the encoded
    /// program is the negated dual optimum.
    pub fn as_primal(&self) -> LinearProgram {
        let m = self.m();
        let at = self.a.transpose();
        let mut rows: Vec<Vector> = at.rows().to_vec();
        rows.extend(at.rows().iter().map(Vector::negated));
        let mut rhs: Vec<Rational> = self.c.iter().cloned().collect();
        rhs.extend(self.c.iter().map(|x| -x));
        for i in 0..m {
            rows.push(Vector::unit(m, i).negated());
            rhs.push(Rational::zero());
        }
        LinearProgram {
            a: Matrix::new(rows, m).expect("transposed rows have width m"),
            b: rhs.into(),
            c: self.b.negated(),
        }
    }
}

/// A program shifted by a feasible anchor `x0`: `b' = b - A x0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedProgram {
    pub program: LinearProgram,
    pub anchor: Vector,
    /// `<c, x0>`.
    pub objective_offset: Rational,
}

impl TranslatedProgram {
    /// Maps an optimal value of the shifted program back: `v + <c, x0>`.
    pub fn untranslate_value(&self, v: &ExtendedRational) -> ExtendedRational {
        match v {
            ExtendedRational::Finite(r) => ExtendedRational::Finite(r + &self.objective_offset),
            inf => inf.clone(),
        }
    }

    /// Maps a point of the shifted program back: `x = x' + x0`.
    pub fn untranslate_point(&self, x: &Vector) -> Result<Vector> {
        x.checked_add(&self.anchor)
    }
}
