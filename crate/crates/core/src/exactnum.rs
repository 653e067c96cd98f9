//! Exact rational scalars, the extended rationals used for optimal values,
//! and the small dense linear algebra the rest of the crate is built on.
//!
//! Scalars are [`num_rational::BigRational`], which is always stored in
//! lowest terms with a positive denominator. Everything here is exact: there
//! is no floating point anywhere in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Index, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};

/// Arbitrary-precision fraction.
pub type Rational = BigRational;

/// Builds `numer / denom` from machine integers. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// True when the fraction has a positive denominator and is in lowest terms.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// Parses the textual rational syntax: an optional sign, a decimal integer,
/// optionally followed by `/` and a positive decimal integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(numer) {
        return Err(bad());
    }
    let mut numer = BigInt::from_str(numer).map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let denom = match denom {
        None => BigInt::one(),
        Some(d) if digits(d) => BigInt::from_str(d).map_err(|_| bad())?,
        Some(_) => return Err(bad()),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// A rational extended by `+inf` and `-inf`.
///
/// Optimal values, support values and radial values live here. Indeterminate
/// forms (`inf - inf`, `0 * inf`) are errors rather than sentinels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    PlusInfinity,
    MinusInfinity,
}

impl ExtendedRational {
    pub fn zero() -> Self {
        ExtendedRational::Finite(Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
            (PlusInfinity, MinusInfinity) | (MinusInfinity, PlusInfinity) => Err(Error::Indeterminate("inf - inf")),
            (PlusInfinity, _) | (_, PlusInfinity) => Ok(PlusInfinity),
            (MinusInfinity, _) | (_, MinusInfinity) => Ok(MinusInfinity),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Ok(Finite(a * b)),
            (Finite(a), inf) | (inf, Finite(a)) => match a.signum() {
                s if s.is_zero() => Err(Error::Indeterminate("0 * inf")),
                s if s.is_positive() => Ok(inf.clone()),
                _ => Ok(-inf.clone()),
            },
            (PlusInfinity, PlusInfinity) | (MinusInfinity, MinusInfinity) => Ok(PlusInfinity),
            _ => Ok(MinusInfinity),
        }
    }

    /// Reciprocal with `1/inf = 0` and `1/0 = +inf`.
    ///
    /// Zero is read as `0+`: every quantity inverted in this crate (support
    /// values and radial values of origin-containing bodies) is nonnegative.
    pub fn recip(&self) -> Self {
        use ExtendedRational::*;
        match self {
            Finite(r) if r.is_zero() => PlusInfinity,
            Finite(r) => Finite(r.recip()),
            PlusInfinity | MinusInfinity => ExtendedRational::zero(),
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl Neg for ExtendedRational {
    type Output = ExtendedRational;

    fn neg(self) -> Self {
        use ExtendedRational::*;
        match self {
            Finite(r) => Finite(-r),
            PlusInfinity => MinusInfinity,
            MinusInfinity => PlusInfinity,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (PlusInfinity, PlusInfinity) | (MinusInfinity, MinusInfinity) => Ordering::Equal,
            (PlusInfinity, _) | (_, MinusInfinity) => Ordering::Greater,
            (MinusInfinity, _) | (_, PlusInfinity) => Ordering::Less,
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => write!(f, "{r}"),
            ExtendedRational::PlusInfinity => f.write_str("+inf"),
            ExtendedRational::MinusInfinity => f.write_str("-inf"),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+inf" | "inf" => Ok(ExtendedRational::PlusInfinity),
            "-inf" => Ok(ExtendedRational::MinusInfinity),
            _ => parse_rational(s).map(ExtendedRational::Finite),
        }
    }
}

/// A dense vector of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The `index`-th standard basis vector of dimension `dim`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&n| int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn negated(&self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Parses whitespace-separated rationals.
    pub fn parse(text: &str) -> Result<Vector> {
        text.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>().map(Vector)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Exact inner product.
pub fn dot(u: &Vector, v: &Vector) -> Result<Rational> {
    check_dim(u.dim(), v.dim())?;
    Ok(dot_slices(u.entries(), v.entries()))
}

pub(crate) fn dot_slices(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// A dense `m x n` matrix stored by rows. The column count is kept
/// explicitly so that matrices with no rows still have a width.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vector>,
    cols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vector>, cols: usize) -> Result<Matrix> {
        for row in &rows {
            check_dim(cols, row.dim())?;
        }
        Ok(Matrix { rows, cols })
    }

    pub fn from_ints(rows: &[&[i64]], cols: usize) -> Result<Matrix> {
        Matrix::new(rows.iter().map(|r| Vector::from_ints(r)).collect(), cols)
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix { rows: (0..n).map(|i| Vector::unit(n, i)).collect(), cols: n }
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix { rows: (0..self.cols).map(|j| self.column(j)).collect(), cols: self.m() }
    }

    /// `A x`.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        check_dim(self.cols, x.dim())?;
        Ok(self.rows.iter().map(|r| dot_slices(r.entries(), x.entries())).collect())
    }

    /// Appends a row, checking its width.
    pub fn push_row(&mut self, row: Vector) -> Result<()> {
        check_dim(self.cols, row.dim())?;
        self.rows.push(row);
        Ok(())
    }
}

/// `A^T y`, computed as the row combination `sum_i y_i a_i`.
pub fn transpose_apply(a: &Matrix, y: &Vector) -> Result<Vector> {
    check_dim(a.m(), y.dim())?;
    let mut out = vec![Rational::zero(); a.n()];
    for (row, weight) in a.rows().iter().zip(y.iter()) {
        if weight.is_zero() {
            continue;
        }
        for (acc, entry) in out.iter_mut().zip(row.iter()) {
            *acc += weight * entry;
        }
    }
    Ok(Vector(out))
}

/// Reduced row echelon form of `rows` (each of width `cols`), returning the
/// reduced rows and the pivot column of each nonzero row.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                let (pivot_row, other) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, p) in other.iter_mut().zip(pivot_row.iter()) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (rows, pivots)
}

/// Rank of a list of vectors of common dimension `cols`.
pub fn rank(rows: &[Vector], cols: usize) -> usize {
    let data = rows.iter().map(|r| r.entries().to_vec()).collect();
    rref(data, cols).1.len()
}

/// Indices of a maximal linearly independent set of columns of `a`,
/// chosen greedily from the left.
pub fn independent_columns(a: &Matrix) -> Vec<usize> {
    let data = a.rows().iter().map(|r| r.entries().to_vec()).collect();
    rref(data, a.n()).1
}

/// Solves `M x = rhs` where `M` has the given rows. Returns the solution when
/// the system is consistent and `M` has full column rank, `None` otherwise.
pub fn solve_unique(rows: &[Vector], rhs: &[Rational], cols: usize) -> Option<Vector> {
    debug_assert_eq!(rows.len(), rhs.len());
    let data = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.entries().to_vec();
            v.push(b.clone());
            v
        })
        .collect();
    let (reduced, pivots) = rref(data, cols + 1);
    if pivots.len() != cols || pivots.contains(&cols) {
        return None;
    }
    Some(reduced.iter().take(cols).map(|r| r[cols].clone()).collect())
}
