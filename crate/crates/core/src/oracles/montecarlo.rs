use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::geometry::cone_point_member;
use crate::newton::NewtonPolyhedron;
use crate::rational::{to_f64, Rational};

/// Samples per independent ChaCha stream.
const CHUNK: u64 = 256;
/// Sample coordinates are dyadic: `m_k (2u + 1) / 2^(GRID_BITS + 1)`.
const GRID_BITS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|value - exact| <= k · standard_error`.
    pub fn within(&self, exact: f64, k: f64) -> bool {
        (self.value - exact).abs() <= k * self.standard_error
    }
}

/// Uniform sampling of the box `Π [0, m_k]`, counting points outside `Γ+`
/// with the exact membership test. Stream `c` of the generator keyed on
/// `seed` produces chunk `c`, so the estimate does not depend on thread
/// scheduling.
pub fn covolume_monte_carlo(p: &NewtonPolyhedron, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples < 1000 {
        return invalid("Monte Carlo covolume needs at least 1000 samples");
    }
    let mut sides = Vec::with_capacity(p.dimension());
    for (k, c) in p.axis_intercepts().iter().enumerate() {
        match c.finite() {
            Some(c) => sides.push(c.clone()),
            None => return Err(Error::NotPrimary(format!("polyhedron does not meet axis {}", k + 1))),
        }
    }
    let box_volume: f64 = sides.iter().map(to_f64).product();
    let denom = Rational::from_integer(num_bigint::BigInt::from(1u64 << (GRID_BITS + 1)));
    let vertices = p.vertices();

    let chunks = samples.div_ceil(CHUNK);
    let outside: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut miss = 0u64;
            for _ in 0..count {
                let x: Vec<Rational> = sides
                    .iter()
                    .map(|m| {
                        let u: u64 = rng.random_range(0..(1u64 << GRID_BITS));
                        m * Rational::from_integer((2 * u + 1).into()) / &denom
                    })
                    .collect();
                if !cone_point_member(&x, vertices).expect("dimensions agree") {
                    miss += 1;
                }
            }
            miss
        })
        .sum();

    let n = samples as f64;
    let frac = outside as f64 / n;
    let sd = (frac * (1.0 - frac) * n / (n - 1.0)).sqrt();
    Ok(McEstimate { value: box_volume * frac, standard_error: box_volume * sd / n.sqrt(), samples, seed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_per_seed() {
        let p = NewtonPolyhedron::from_ints(&[&[3, 0], &[0, 3], &[1, 1]]).unwrap();
        let a = covolume_monte_carlo(&p, 2000, 7).unwrap();
        let b = covolume_monte_carlo(&p, 2000, 7).unwrap();
        assert_eq!(a, b);
        let c = covolume_monte_carlo(&p, 2000, 8).unwrap();
        assert_ne!(a.value, c.value);
    }

    #[test]
    fn preconditions() {
        let p = NewtonPolyhedron::from_ints(&[&[3, 0], &[0, 3]]).unwrap();
        assert!(covolume_monte_carlo(&p, 999, 0).is_err());
        let open = NewtonPolyhedron::from_ints(&[&[2, 0], &[1, 1]]).unwrap();
        assert!(matches!(covolume_monte_carlo(&open, 1000, 0), Err(Error::NotPrimary(_))));
    }
}
