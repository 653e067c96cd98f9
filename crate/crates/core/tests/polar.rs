//! Polar bodies against a brute-force membership oracle, and bipolarity.

use lpdual::exactnum::{rat, ExtendedRational, Rational, Vector};
use lpdual::instances::InstanceGenerator;
use lpdual::polyhedron::{HPolyhedron, PolarGenerator, PolarRep};
use num_traits::{One, Signed, Zero};

/// Solves `sum_i w_i v_i = y` for linearly independent `v_i` by Gaussian
/// elimination; `None` when there is no solution or it is not unique.
fn solve_combination(vs: &[&Vector], y: &Vector) -> Option<Vec<Rational>> {
    let (d, k) = (y.dim(), vs.len());
    let mut m: Vec<Vec<Rational>> =
        (0..d).map(|j| vs.iter().map(|v| v[j].clone()).chain([y[j].clone()]).collect()).collect();
    let mut row = 0;
    for col in 0..k {
        let pivot = (row..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, pivot);
        let p = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = m[row].clone();
        for (r, target) in m.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let f = target[col].clone();
                for (x, p) in target.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// `y` lies in the polar iff some nonnegative combination of linearly
/// independent generators reaches it within the budget; the cheapest
/// combination is attained at such a basic choice.
fn brute_force_contains(polar: &PolarRep, y: &Vector) -> bool {
    if y.is_zero() {
        return true;
    }
    let pairs = polar.pairs();
    let k = pairs.len();
    (1u32..(1 << k)).any(|mask| {
        let chosen: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let vs: Vec<&Vector> = chosen.iter().map(|&i| &pairs[i].0).collect();
        match solve_combination(&vs, y) {
            Some(w) if w.iter().all(|x| !x.is_negative()) => {
                let cost: Rational = chosen.iter().zip(&w).map(|(&i, wi)| wi * &pairs[i].1).sum();
                cost <= Rational::one()
            }
            _ => false,
        }
    })
}

#[test]
fn membership_matches_brute_force_on_small_bodies() {
    let mut g = InstanceGenerator::new(21);
    let (mut inside, mut outside) = (0, 0);
    for _ in 0..300 {
        let n = 1 + g.index(3);
        let m = 1 + g.index(3);
        let k = g.origin_polyhedron_with_shape(n, m);
        let polar = k.polar().unwrap();
        let mut probes: Vec<Vector> = (0..8).map(|_| g.probe_point(n)).collect();
        // generator tips and their midpoints sit on the boundary
        for gen in polar.generators() {
            if let PolarGenerator::Segment(tip) = gen {
                probes.push(tip.clone());
                probes.push(tip.scale(&rat(1, 2)));
                probes.push(tip.scale(&rat(9, 8)));
            }
        }
        for y in probes {
            let expected = brute_force_contains(&polar, &y);
            assert_eq!(polar.polar_contains(&y).unwrap(), expected, "y = {y} on {k}");
            if expected {
                inside += 1;
            } else {
                outside += 1;
                // a point of K separates y from the polar
                assert!(k.support(&y).unwrap() > ExtendedRational::Finite(Rational::one()), "y = {y} on {k}");
            }
        }
    }
    assert!(inside > 100 && outside > 100, "{inside} inside, {outside} outside");
}

#[test]
fn polar_of_polar_is_the_body() {
    let mut g = InstanceGenerator::new(22);
    for _ in 0..200 {
        let k = g.origin_polyhedron();
        let polar = k.polar().unwrap();
        for _ in 0..10 {
            let y = g.probe_point(k.dim());
            assert_eq!(polar.bipolar_contains(&y).unwrap(), k.contains(&y).unwrap(), "y = {y} on {k}");
        }
    }
}

#[test]
fn polar_support_is_the_gauge_of_the_body() {
    // h_{K*}(y) <= 1 exactly on K, and h_{K*} scales linearly
    let mut g = InstanceGenerator::new(23);
    for _ in 0..200 {
        let k = g.origin_polyhedron();
        let polar = k.polar().unwrap();
        let u = g.nonzero_vector(k.dim());
        let h = polar.polar_support(&u).unwrap();
        let h3 = polar.polar_support(&u.scale(&rat(3, 1))).unwrap();
        let three = ExtendedRational::Finite(rat(3, 1));
        assert_eq!(h.checked_mul(&three).unwrap(), h3);
    }
}

#[test]
fn larger_body_has_smaller_polar() {
    let mut g = InstanceGenerator::new(24);
    for _ in 0..200 {
        let small = g.origin_polyhedron();
        let extra = g.nonzero_vector(small.dim());
        let offset = g.nonnegative_rational();
        let smaller = small.with_constraint(lpdual::polyhedron::HalfSpace::new(extra, offset)).unwrap();
        let (p_big, p_small) = (small.polar().unwrap(), smaller.polar().unwrap());
        for _ in 0..5 {
            let y = g.probe_point(small.dim());
            if p_big.polar_contains(&y).unwrap() {
                assert!(p_small.polar_contains(&y).unwrap());
            }
        }
    }
}

#[test]
fn cube_polar_is_the_cross_polytope() {
    let cube = HPolyhedron::cube(3, rat(2, 1));
    let polar = cube.polar().unwrap();
    for gen in polar.generators() {
        let PolarGenerator::Segment(tip) = gen else { panic!("cube has no rays") };
        assert_eq!(tip.iter().map(|x| x.abs()).sum::<Rational>(), rat(1, 2));
    }
    assert!(polar.polar_contains(&Vector::new(vec![rat(1, 6), rat(1, 6), rat(1, 6)])).unwrap());
    assert!(!polar.polar_contains(&Vector::new(vec![rat(1, 6), rat(1, 6), rat(1, 5)])).unwrap());
}
