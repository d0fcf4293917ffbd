use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::geometry::dot;
use crate::lelong::MonomialWeight;
use crate::rational::Rational;

/// Unique solution of a square system, if the matrix is nonsingular.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        rhs.swap(p, col);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
                let delta = &f * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Some(rhs)
}

/// Vertices of `L = {t <= 0 : <α, t> <= -1 for every generator α}` by
/// brute force over all `n`-subsets of tight constraints. Sorted.
pub fn level_set_extreme_points(phi: &MonomialWeight) -> Vec<Vec<Rational>> {
    let n = phi.dimension();
    // constraints <c, t> <= b
    let mut cons: Vec<(Vec<Rational>, Rational)> = phi
        .as_psh()
        .generators()
        .iter()
        .map(|g| (g.to_vec(), -Rational::one()))
        .collect();
    for k in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[k] = Rational::one();
        cons.push((c, Rational::zero()));
    }
    let mut found = BTreeSet::new();
    let m = cons.len();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let mat = idx.iter().map(|&i| cons[i].0.clone()).collect();
        let rhs = idx.iter().map(|&i| cons[i].1.clone()).collect();
        if let Some(t) = solve(mat, rhs) {
            if cons.iter().all(|(c, b)| dot(c, &t) <= *b) {
                found.insert(t);
            }
        }
        let Some(i) = (0..n).rev().find(|&i| idx[i] != i + m - n) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
    found.into_iter().collect()
}
