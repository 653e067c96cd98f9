//! The line-oriented LP text format.
//!
//! ```text
//! # comments run to the end of the line
//! problem max
//! vars 2
//! objective 1 1
//! constraint 1 0 <= 1
//! constraint 0 1 >= -1/2
//! constraint 1 1 = 1
//! ```
//!
//! The header lines come first and in this order. Internally every file is
//! normalized to `max <c,x> s.t. Ax <= b`: a `min` objective is negated,
//! `>=` rows are negated, and `=` rows become a `<=` row followed by the
//! negated row.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Rational, Vector};
use crate::polyhedron::parse_rationals;
use crate::program::{DualProgram, LinearProgram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Max,
    Min,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Max => "max",
            Sense::Min => "min",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vector,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LpFile {
    pub sense: Sense,
    pub n: usize,
    pub objective: Vector,
    pub constraints: Vec<Constraint>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

impl LpFile {
    pub fn parse(text: &str) -> Result<LpFile> {
        let mut sense = None;
        let mut n = None;
        let mut objective = None;
        let mut constraints = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let Some((&keyword, rest)) = tokens.split_first() else {
                continue;
            };
            match keyword {
                "problem" => {
                    if sense.is_some() {
                        return Err(err(line, "duplicate `problem` line"));
                    }
                    sense = Some(match rest {
                        ["max"] => Sense::Max,
                        ["min"] => Sense::Min,
                        _ => return Err(err(line, "expected `problem max` or `problem min`")),
                    });
                }
                "vars" => {
                    if sense.is_none() {
                        return Err(err(line, "missing `problem` header"));
                    }
                    if n.is_some() {
                        return Err(err(line, "duplicate `vars` line"));
                    }
                    let [count] = rest else {
                        return Err(err(line, "expected `vars <count>`"));
                    };
                    let count: usize = count.parse().map_err(|_| err(line, "bad variable count"))?;
                    if count == 0 {
                        return Err(err(line, "variable count must be positive"));
                    }
                    n = Some(count);
                }
                "objective" => {
                    let Some(width) = n else {
                        return Err(err(line, "missing `vars` header"));
                    };
                    if objective.is_some() {
                        return Err(err(line, "duplicate `objective` line"));
                    }
                    if rest.len() != width {
                        return Err(err(
                            line,
                            format!("expected {width} objective coefficients, found {}", rest.len()),
                        ));
                    }
                    objective = Some(parse_rationals(rest, line)?);
                }
                "constraint" => {
                    let Some(width) = n.filter(|_| objective.is_some()) else {
                        return Err(err(line, "missing `objective` header"));
                    };
                    if rest.len() != width + 2 {
                        return Err(err(line, format!("expected `constraint <{width} rationals> <=|>=|= <rational>`")));
                    }
                    let relation = match rest[width] {
                        "<=" => Relation::Le,
                        ">=" => Relation::Ge,
                        "=" => Relation::Eq,
                        other => return Err(err(line, format!("unknown relation `{other}`"))),
                    };
                    let coeffs = parse_rationals(&rest[..width], line)?;
                    let rhs = parse_rationals(&rest[width + 1..], line)?.into_entries().remove(0);
                    constraints.push(Constraint { coeffs, relation, rhs });
                }
                other => return Err(err(line, format!("unknown keyword `{other}`"))),
            }
        }
        let missing = |what: &str| err(last_line + 1, format!("missing `{what}` header"));
        Ok(LpFile {
            sense: sense.ok_or_else(|| missing("problem"))?,
            n: n.ok_or_else(|| missing("vars"))?,
            objective: objective.ok_or_else(|| missing("objective"))?,
            constraints,
        })
    }

    /// The equivalent `max <c,x> s.t. Ax <= b`.
    pub fn to_program(&self) -> LinearProgram {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for con in &self.constraints {
            if matches!(con.relation, Relation::Le | Relation::Eq) {
                rows.push(con.coeffs.clone());
                rhs.push(con.rhs.clone());
            }
            if matches!(con.relation, Relation::Ge | Relation::Eq) {
                rows.push(con.coeffs.negated());
                rhs.push(-con.rhs.clone());
            }
        }
        let c = match self.sense {
            Sense::Max => self.objective.clone(),
            Sense::Min => self.objective.negated(),
        };
        LinearProgram::new(Matrix::new(rows, self.n).expect("arity checked on parse"), rhs.into(), c)
            .expect("shapes agree")
    }

    /// A `max` file holding exactly the rows of `p`.
    pub fn from_program(p: &LinearProgram) -> LpFile {
        LpFile {
            sense: Sense::Max,
            n: p.n(),
            objective: p.c().clone(),
            constraints: p
                .a()
                .rows()
                .iter()
                .zip(p.b().iter())
                .map(|(a, b)| Constraint { coeffs: a.clone(), relation: Relation::Le, rhs: b.clone() })
                .collect(),
        }
    }

    /// The asymmetric dual written out as a `min` file: one equality per
    /// primal variable, then one sign row per dual variable.
    pub fn from_dual(d: &DualProgram) -> LpFile {
        let m = d.m();
        let at = d.a().transpose();
        let mut constraints: Vec<Constraint> = at
            .rows()
            .iter()
            .zip(d.c().iter())
            .map(|(col, cj)| Constraint { coeffs: col.clone(), relation: Relation::Eq, rhs: cj.clone() })
            .collect();
        constraints.extend((0..m).map(|i| Constraint {
            coeffs: Vector::unit(m, i),
            relation: Relation::Ge,
            rhs: Rational::from_integer(0.into()),
        }));
        LpFile { sense: Sense::Min, n: m, objective: d.b().clone(), constraints }
    }
}

impl fmt::Display for LpFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "problem {}", self.sense)?;
        writeln!(f, "vars {}", self.n)?;
        writeln!(f, "objective {}", self.objective)?;
        for con in &self.constraints {
            writeln!(f, "constraint {} {} {}", con.coeffs, con.relation, con.rhs)?;
        }
        Ok(())
    }
}
