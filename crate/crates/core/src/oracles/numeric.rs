//! Floating-point evaluations of the liminf definitions.

use crate::lelong::{HomogeneousPsh, MonomialWeight};
use crate::rational::to_f64;

/// Zero grid coordinates are replaced by this, which pushes the sampled
/// point of the level set far out along the recession cone.
const RECESSION_EPS: f64 = 1e-9;

fn exponents(u: &HomogeneousPsh) -> Vec<Vec<f64>> {
    u.generators().iter().map(|g| g.iter().map(to_f64).collect()).collect()
}

/// `max_j <β_j, t>` in floating point.
fn eval(gens: &[Vec<f64>], t: &[f64]) -> f64 {
    gens.iter()
        .map(|g| g.iter().zip(t).map(|(b, x)| b * x).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `f_u(r a) / r`, which for homogeneous `u` is exactly the directional
/// Lelong number `ν_u(0, a)` up to rounding.
pub fn directional_lelong_numeric(u: &HomogeneousPsh, a: &[f64], r: f64) -> f64 {
    let t: Vec<f64> = a.iter().map(|x| r * x).collect();
    eval(&exponents(u), &t) / r
}

/// Calls `f` on every point of `{d >= 0, Σ d = 1}` with coordinates in
/// `(1/depth) Z`.
fn for_each_grid_direction(n: usize, depth: usize, mut f: impl FnMut(&[f64])) {
    let mut parts = vec![0usize; n];
    fn rec(k: usize, left: usize, parts: &mut Vec<usize>, depth: usize, f: &mut dyn FnMut(&[f64])) {
        let n = parts.len();
        if k == n - 1 {
            parts[k] = left;
            let d: Vec<f64> = parts
                .iter()
                .map(|&i| if i == 0 { RECESSION_EPS } else { i as f64 / depth as f64 })
                .collect();
            f(&d);
            return;
        }
        for i in 0..=left {
            parts[k] = i;
            rec(k + 1, left - i, parts, depth, f);
        }
    }
    rec(0, depth, &mut parts, depth, &mut f);
}

/// Minimum of `u/φ` over sampled points of the level set `{f_φ = -1}`.
/// Each grid direction `d` is rescaled to `t = -d / min_j <α_j, d>`. Grids
/// whose depths divide one another are nested, so the estimate decreases
/// monotonically toward the relative type along such a sequence.
pub fn relative_type_numeric(u: &HomogeneousPsh, phi: &MonomialWeight, grid_depth: usize) -> f64 {
    let gu = exponents(u);
    let gphi = exponents(phi.as_psh());
    let mut best = f64::INFINITY;
    for_each_grid_direction(u.dimension(), grid_depth.max(1), |d| {
        let neg: Vec<f64> = d.iter().map(|x| -x).collect();
        let scale = -eval(&gphi, &neg);
        if scale <= 0.0 {
            return;
        }
        let t: Vec<f64> = neg.iter().map(|x| x / scale).collect();
        let ratio = -eval(&gu, &t);
        best = best.min(ratio);
    });
    best
}

/// Supremum of `f_φ(t) / max_k t_k` over sampled `t` with `max_k t_k = -1`.
pub fn lojasiewicz_numeric(phi: &MonomialWeight, grid_depth: usize) -> f64 {
    let g = exponents(phi.as_psh());
    let mut best = f64::NEG_INFINITY;
    for_each_grid_direction(phi.dimension(), grid_depth.max(1), |d| {
        // map the simplex point to a point of {max t = -1}: t_k = -1 / d_k * min d
        let lo = d.iter().cloned().fold(f64::INFINITY, f64::min);
        let t: Vec<f64> = d.iter().map(|x| -x / lo).collect();
        let top = t.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        best = best.max(eval(&g, &t) / top);
    });
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psh(g: &[&[i64]]) -> HomogeneousPsh {
        HomogeneousPsh::from_ints(g).unwrap()
    }

    fn phi_star() -> MonomialWeight {
        MonomialWeight::from_ints(&[&[3, 0], &[0, 3], &[1, 1]]).unwrap()
    }

    #[test]
    fn directional_examples() {
        assert!((directional_lelong_numeric(&psh(&[&[1, 1]]), &[1.0, 2.0], -1e3) - 3.0).abs() < 1e-9);
        assert!((directional_lelong_numeric(phi_star().as_psh(), &[1.0, 1.0], -1e3) - 2.0).abs() < 1e-9);
        assert!((directional_lelong_numeric(&psh(&[&[2, 0], &[0, 2]]), &[1.0, 1.0], -1e2) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn relative_type_examples() {
        let phi = phi_star();
        assert!((relative_type_numeric(&psh(&[&[2, 0]]), &phi, 600) - 2.0 / 3.0).abs() < 1e-3);
        assert!((relative_type_numeric(phi.as_psh(), &phi, 50) - 1.0).abs() < 1e-9);
        assert!((relative_type_numeric(&psh(&[&[1, 0]]), &phi, 600) - 1.0 / 3.0).abs() < 1e-3);
    }

    #[test]
    fn lojasiewicz_examples() {
        assert!((lojasiewicz_numeric(&phi_star(), 100) - 3.0).abs() < 1e-6);
        let m = MonomialWeight::maximal_ideal(3).unwrap();
        assert!((lojasiewicz_numeric(&m, 20) - 1.0).abs() < 1e-9);
    }
}
