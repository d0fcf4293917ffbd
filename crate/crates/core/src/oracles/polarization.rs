use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::ideal::PrimaryMonomialIdeal;
use crate::rational::{int, Rational};

/// Multiplies a coefficient vector (constant term first) by `(x - root)`.
fn times_linear(poly: &[Rational], root: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

/// Coefficients of the interpolating polynomial through `(k, values[k])`.
fn interpolate_at_integers(values: &[Rational]) -> Vec<Rational> {
    let m = values.len();
    let mut coeffs = vec![Rational::zero(); m];
    for (t, v) in values.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut scale = Rational::one();
        for s in 0..m {
            if s != t {
                basis = times_linear(&basis, &int(s as i64));
                scale *= int(t as i64 - s as i64);
            }
        }
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += v * b / &scale;
        }
    }
    coeffs
}

/// `e_{n-1}(J, I)` from the mixed-volume expansion of
/// `T(1, t) = n! covolume(Γ_I + t Γ_J) = Σ_i C(n, i) e_i t^i`, sampled at
/// `t = 0, ..., n`.
pub fn mixed_multiplicity_polarization(j: &PrimaryMonomialIdeal, i: &PrimaryMonomialIdeal) -> Result<Rational> {
    let n = i.dimension();
    if j.dimension() != n {
        return invalid("ideals live in different dimensions");
    }
    let gi = i.weight().polyhedron();
    let gj = j.weight().polyhedron();
    let mut values = Vec::with_capacity(n + 1);
    for t in 0..=n {
        let sum = if t == 0 { gi.clone() } else { gi.minkowski_sum(&gj.scaled(&int(t as i64))?)? };
        values.push(sum.normalized_covolume()?);
    }
    let coeffs = interpolate_at_integers(&values);
    Ok(&coeffs[1] / int(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_polynomial() {
        // 2 + 3t - t^3
        let values: Vec<Rational> = (0..4).map(|t| int(2 + 3 * t - t * t * t)).collect();
        assert_eq!(interpolate_at_integers(&values), vec![int(2), int(3), int(0), int(-1)]);
    }

    #[test]
    fn polarization_examples() {
        let a_star = PrimaryMonomialIdeal::from_ints(&[&[3, 0], &[0, 3], &[1, 1]]).unwrap();
        let j = PrimaryMonomialIdeal::from_ints(&[&[2, 0], &[0, 2], &[1, 1]]).unwrap();
        assert_eq!(mixed_multiplicity_polarization(&j, &a_star).unwrap(), int(4));
        let m = PrimaryMonomialIdeal::maximal(3);
        assert_eq!(mixed_multiplicity_polarization(&m, &m).unwrap(), int(1));
        assert_eq!(mixed_multiplicity_polarization(&a_star, &a_star).unwrap(), int(6));
        assert!(mixed_multiplicity_polarization(&m, &a_star).is_err());
    }
}
