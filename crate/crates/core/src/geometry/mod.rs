//! Exact rational linear algebra and the two predicates the rest of the
//! crate is built on: simplex volume and Newton polyhedron membership.

pub(crate) mod hull;
pub mod lp;

use std::fmt;
use std::ops::Deref;

use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};
use crate::rational::{factorial, int, Rational};

/// Largest ambient dimension the polyhedral code accepts.
pub const MAX_DIMENSION: usize = 6;

/// Exponent of a monomial term: a point of the closed positive orthant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<Rational>);

impl ExponentVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return invalid("exponent vector must have at least one coordinate");
        }
        if coords.iter().any(Signed::is_negative) {
            return invalid("exponent coordinates must be nonnegative");
        }
        Ok(Self(coords))
    }

    /// Panics on negative input; meant for literals.
    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect()).expect("nonnegative exponent")
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    /// The `k`-th unit vector scaled by `c`.
    pub fn axis(n: usize, k: usize, c: Rational) -> Self {
        let mut coords = vec![Rational::zero(); n];
        coords[k] = c;
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// `Some(k)` if the only nonzero coordinate is the `k`-th one.
    pub fn pure_power_axis(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (support.next(), support.next()) {
            (Some((k, _)), None) => Some(k),
            _ => None,
        }
    }

    pub fn l1_norm(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn dominated_by(&self, x: &[Rational]) -> bool {
        self.0.iter().zip(x).all(|(a, b)| a <= b)
    }
}

impl Deref for ExponentVector {
    type Target = [Rational];

    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl AsRef<[Rational]> for ExponentVector {
    fn as_ref(&self) -> &[Rational] {
        &self.0
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Volume of the simplex spanned by `n + 1` points of `R^n`:
/// `|det(p_1 - p_0, ..., p_n - p_0)| / n!`. Affinely dependent points give 0.
pub fn simplex_volume<P: AsRef<[Rational]>>(points: &[P]) -> Result<Rational> {
    let Some(first) = points.first() else {
        return invalid("simplex needs at least one point");
    };
    let n = first.as_ref().len();
    if points.len() != n + 1 {
        return invalid(format!("a simplex in dimension {n} needs {} points, got {}", n + 1, points.len()));
    }
    if points.iter().any(|p| p.as_ref().len() != n) {
        return invalid("simplex points have mismatched dimensions");
    }
    let base = first.as_ref();
    let rows = points[1..]
        .iter()
        .map(|p| p.as_ref().iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    Ok(determinant(rows).abs() / factorial(n))
}

/// Decides `x ∈ conv(generators) + R_+^n` exactly.
pub fn cone_point_member<G: AsRef<[Rational]>>(x: &[Rational], generators: &[G]) -> Result<bool> {
    if generators.is_empty() {
        return invalid("membership test needs at least one generator");
    }
    let n = x.len();
    if generators.iter().any(|g| g.as_ref().len() != n) {
        return invalid("point and generators have different dimensions");
    }
    // dominating a single generator settles it without an LP
    if generators
        .iter()
        .any(|g| g.as_ref().iter().zip(x).all(|(a, b)| a <= b))
    {
        return Ok(true);
    }
    // sum_j lambda_j g_j + s = x, sum_j lambda_j = 1, lambda, s >= 0
    let l = generators.len();
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<Rational> = generators.iter().map(|g| g.as_ref()[i].clone()).collect();
        row.extend((0..n).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        a.push(row);
    }
    let mut simplex_row = vec![Rational::one(); l];
    simplex_row.extend(std::iter::repeat_n(Rational::zero(), n));
    a.push(simplex_row);
    let mut b = x.to_vec();
    b.push(Rational::one());
    Ok(lp::is_feasible(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&c| int(c)).collect()).collect()
    }

    fn a_star() -> Vec<Vec<Rational>> {
        pts(&[&[3, 0], &[0, 3], &[1, 1]])
    }

    #[test]
    fn simplex_volume_examples() {
        assert_eq!(simplex_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap(), rat(1, 2));
        assert_eq!(simplex_volume(&pts(&[&[0, 0], &[3, 0], &[1, 1]])).unwrap(), rat(3, 2));
        assert_eq!(simplex_volume(&pts(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap(), int(0));
        assert_eq!(
            simplex_volume(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(),
            rat(1, 6)
        );
    }

    #[test]
    fn simplex_volume_dimension_mismatch() {
        assert!(simplex_volume(&pts(&[&[0, 0], &[1, 0, 0], &[0, 1]])).is_err());
        assert!(simplex_volume(&pts(&[&[0, 0], &[1, 0]])).is_err());
    }

    #[test]
    fn membership_examples() {
        let x: Vec<Rational> = vec![int(1), int(1)];
        assert!(cone_point_member(&x, &pts(&[&[2, 0], &[0, 2]])).unwrap());
        assert!(!cone_point_member(&[int(1), int(0)], &a_star()).unwrap());
        assert!(cone_point_member(&[int(5), int(5)], &a_star()).unwrap());
        // just below the boundary segment from (1,1) to (3,0)
        assert!(!cone_point_member(&[int(2), rat(1, 2) - rat(1, 1000)], &a_star()).unwrap());
        assert!(cone_point_member(&[int(2), rat(1, 2)], &a_star()).unwrap());
    }

    #[test]
    fn membership_errors() {
        let empty: Vec<Vec<Rational>> = vec![];
        assert!(cone_point_member(&[int(1)], &empty).is_err());
        assert!(cone_point_member(&[int(1), int(1), int(1)], &a_star()).is_err());
    }

    #[test]
    fn exponent_vector_validation() {
        assert!(ExponentVector::new(vec![int(1), int(-1)]).is_err());
        let v = ExponentVector::from_ints(&[0, 3, 0]);
        assert_eq!(v.pure_power_axis(), Some(1));
        assert_eq!(ExponentVector::from_ints(&[1, 1]).pure_power_axis(), None);
        assert_eq!(v.to_string(), "(0, 3, 0)");
    }
}
