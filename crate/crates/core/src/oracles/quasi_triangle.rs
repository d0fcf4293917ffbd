use std::f64::consts::{LN_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of sampling `φ_a(y - x) <= K + max(φ_a(x), φ_a(y))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiTriangleReport {
    pub constant: f64,
    pub samples: u64,
    /// Largest `φ(y - x) - K - max(φ(x), φ(y))` seen.
    pub max_violation: f64,
    pub passed: bool,
}

/// Rounding allowance on the violation.
const SLACK: f64 = 1e-12;

type Complex = (f64, f64);

/// `φ_a(z) = max_k a_k^{-1} log|z_k|`.
fn phi(a: &[f64], z: &[Complex]) -> f64 {
    a.iter()
        .zip(z)
        .map(|(ak, (re, im))| re.hypot(*im).ln() / ak)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `φ_a(y - x) - K - max(φ_a(x), φ_a(y))` for one pair of points.
pub fn quasi_triangle_violation(a: &[f64], constant: f64, x: &[Complex], y: &[Complex]) -> f64 {
    let diff: Vec<Complex> = x.iter().zip(y).map(|(p, q)| (q.0 - p.0, q.1 - p.1)).collect();
    phi(a, &diff) - constant - phi(a, x).max(phi(a, y))
}

/// Checks the quasi-triangle inequality with `K = log 2 / min_k a_k`.
pub fn quasi_triangle_check(a: &[f64], samples: u64, seed: u64) -> QuasiTriangleReport {
    let min_a = a.iter().cloned().fold(f64::INFINITY, f64::min);
    quasi_triangle_check_with_constant(a, LN_2 / min_a, samples, seed)
}

/// Samples pairs in the unit polydisk (uniform on each disk factor).
pub fn quasi_triangle_check_with_constant(a: &[f64], constant: f64, samples: u64, seed: u64) -> QuasiTriangleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = |rng: &mut ChaCha8Rng| -> Vec<Complex> {
        (0..a.len())
            .map(|_| {
                let r = rng.random::<f64>().sqrt();
                let theta = TAU * rng.random::<f64>();
                (r * theta.cos(), r * theta.sin())
            })
            .collect()
    };
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..samples {
        let x = point(&mut rng);
        let y = point(&mut rng);
        let v = quasi_triangle_violation(a, constant, &x, &y);
        if !v.is_nan() {
            worst = worst.max(v);
        }
    }
    QuasiTriangleReport { constant, samples, max_violation: worst, passed: worst <= SLACK }
}
