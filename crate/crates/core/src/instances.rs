//! Seeded random instances for property sweeps and examples.
//!
//! Entries are `p/q` with `p` in `[-bound, bound]` and `q` drawn from a small
//! set of denominators, so every instance stays exact and small.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{rat, Matrix, Rational, Vector};
use crate::polyhedron::{HPolyhedron, HalfSpace};
use crate::program::LinearProgram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceConfig {
    pub max_vars: usize,
    pub max_rows: usize,
    pub numer_bound: i64,
    pub denominators: Vec<i64>,
}

impl Default for InstanceConfig {
    fn default() -> Self {
        InstanceConfig { max_vars: 4, max_rows: 8, numer_bound: 5, denominators: vec![1, 2, 3] }
    }
}

#[derive(Debug, Clone)]
pub struct InstanceGenerator {
    rng: ChaCha8Rng,
    config: InstanceConfig,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        Self::with_config(seed, InstanceConfig::default())
    }

    pub fn with_config(seed: u64, config: InstanceConfig) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed), config }
    }

    pub fn config(&self) -> &InstanceConfig {
        &self.config
    }

    pub fn rational(&mut self) -> Rational {
        let bound = self.config.numer_bound;
        let numer = self.rng.gen_range(-bound..=bound);
        self.fraction(numer)
    }

    /// Like [`rational`](Self::rational) but never negative.
    pub fn nonnegative_rational(&mut self) -> Rational {
        let numer = self.rng.gen_range(0..=self.config.numer_bound);
        self.fraction(numer)
    }

    fn fraction(&mut self, numer: i64) -> Rational {
        let denoms = &self.config.denominators;
        let denom = denoms[self.rng.gen_range(0..denoms.len())];
        rat(numer, denom)
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        (0..dim).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, dim: usize) -> Vector {
        loop {
            let v = self.vector(dim);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }

    /// Variable and row counts drawn uniformly from `1..=max`.
    pub fn shape(&mut self) -> (usize, usize) {
        let n = self.rng.gen_range(1..=self.config.max_vars);
        let m = self.rng.gen_range(1..=self.config.max_rows);
        (n, m)
    }

    pub fn program_with_shape(&mut self, n: usize, m: usize) -> LinearProgram {
        let rows = (0..m).map(|_| self.vector(n)).collect();
        let b = self.vector(m);
        let c = self.vector(n);
        LinearProgram::new(Matrix::new(rows, n).expect("rows have width n"), b, c).expect("shapes agree")
    }

    pub fn program(&mut self) -> LinearProgram {
        let (n, m) = self.shape();
        self.program_with_shape(n, m)
    }

    /// A canonical-form program: random rows followed by `x >= 0`.
    pub fn canonical_program(&mut self) -> LinearProgram {
        self.program().canonicalize()
    }

    /// A polyhedron whose offsets are all nonnegative, so it contains the origin.
    pub fn origin_polyhedron(&mut self) -> HPolyhedron {
        let (n, m) = self.shape();
        self.origin_polyhedron_with_shape(n, m)
    }

    pub fn origin_polyhedron_with_shape(&mut self, n: usize, m: usize) -> HPolyhedron {
        let constraints = (0..m)
            .map(|_| {
                let normal = self.vector(n);
                HalfSpace::new(normal, self.nonnegative_rational())
            })
            .collect();
        HPolyhedron::new(n, constraints).expect("normals have width n")
    }

    /// A random point whose coordinates may exceed the entry range by a
    /// factor of two, to probe both sides of small bodies.
    pub fn probe_point(&mut self, dim: usize) -> Vector {
        let two = Rational::from_integer(2.into());
        (0..dim)
            .map(|_| {
                let r = self.rational();
                if self.rng.gen_bool(0.5) {
                    r * &two
                } else {
                    r / &two
                }
            })
            .collect()
    }

    /// Drops entries to zero with probability `p`, to create degenerate rows.
    pub fn sparsify(&mut self, v: &Vector, p: f64) -> Vector {
        v.iter().map(|x| if self.rng.gen_bool(p) { Rational::zero() } else { x.clone() }).collect()
    }
}
