use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::geometry::ExponentVector;
use crate::rational::Rational;

fn cross(o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Exact planar covolume: lower convex hull from the `y`-axis intercept to
/// the `x`-axis intercept, then the trapezoids under it.
pub fn covolume_staircase_2d(generators: &[ExponentVector]) -> Result<Rational> {
    if generators.is_empty() {
        return invalid("staircase needs at least one generator");
    }
    if generators.iter().any(|g| g.dim() != 2) {
        return invalid("staircase covolume is planar only");
    }
    let on_axis = |axis: usize| {
        generators
            .iter()
            .filter(|g| g[1 - axis].is_zero())
            .map(|g| g[axis].clone())
            .min()
    };
    let (Some(a), Some(b)) = (on_axis(0), on_axis(1)) else {
        return Err(Error::NotPrimary("staircase needs a pure power on each axis".into()));
    };
    if a.is_zero() || b.is_zero() {
        return Ok(Rational::zero());
    }

    let mut pts: Vec<(Rational, Rational)> = generators
        .iter()
        .map(|g| (g[0].clone(), g[1].clone()))
        .filter(|(x, y)| *x <= a && *y <= b)
        .collect();
    pts.sort();
    pts.dedup();
    // Andrew's monotone chain, lower half
    let mut hull: Vec<(Rational, Rational)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= Rational::zero() {
            hull.pop();
        }
        hull.push(p);
    }
    // the chain runs from (0, b) to (a, 0); anything after (a, 0) rises
    let end = hull.iter().position(|(x, y)| *x == a && y.is_zero()).expect("x-intercept on hull");
    let start = hull.iter().position(|(x, y)| x.is_zero() && *y == b).expect("y-intercept on hull");
    let two = Rational::from_integer(2.into());
    Ok(hull[start..=end]
        .windows(2)
        .map(|w| (&w[1].0 - &w[0].0) * (&w[0].1 + &w[1].1) / &two)
        .sum())
}
