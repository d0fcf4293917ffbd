//! Dense two-phase simplex over exact rationals with Bland's anti-cycling
//! rule. Problems here have at most a few dozen columns, so a dense tableau
//! is the right shape.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    // reduced costs and minus the objective value
    reduced: Vec<Rational>,
    reduced_rhs: Rational,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for k in 0..self.rows.len() {
            if k == row || self.rows[k][col].is_zero() {
                continue;
            }
            let f = self.rows[k][col].clone();
            for (x, y) in self.rows[k].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[k] -= &f * &pivot_rhs;
        }
        if !self.reduced[col].is_zero() {
            let f = self.reduced[col].clone();
            for (x, y) in self.reduced.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.reduced_rhs -= &f * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Runs primal simplex on columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| self.reduced[j].is_negative());
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }

    fn set_costs(&mut self, cost: &[Rational]) {
        let width = self.reduced.len();
        self.reduced = (0..width)
            .map(|j| cost.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        self.reduced_rhs = Rational::zero();
        for i in 0..self.rows.len() {
            let cb = cost.get(self.basis[i]).cloned().unwrap_or_else(Rational::zero);
            if cb.is_zero() {
                continue;
            }
            for (x, y) in self.reduced.iter_mut().zip(&self.rows[i]) {
                *x -= &cb * y;
            }
            self.reduced_rhs -= &cb * &self.rhs[i];
        }
    }
}

/// Minimizes `cost · x` subject to `a x = b`, `x >= 0`.
pub fn minimize(a: &[Vec<Rational>], b: &[Rational], cost: &[Rational]) -> LpOutcome {
    let m = a.len();
    let nvar = cost.len();
    debug_assert!(a.iter().all(|r| r.len() == nvar));
    debug_assert_eq!(b.len(), m);

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<Rational> = row
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
        rows.push(r);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let width = nvar + m;
    let mut tab = Tableau {
        rows,
        rhs,
        basis: (nvar..width).collect(),
        reduced: vec![Rational::zero(); width],
        reduced_rhs: Rational::zero(),
    };

    // phase 1: minimize the sum of artificials
    let phase1: Vec<Rational> = (0..width)
        .map(|j| if j >= nvar { Rational::from_integer(1.into()) } else { Rational::zero() })
        .collect();
    tab.set_costs(&phase1);
    tab.optimize(nvar);
    if !tab.reduced_rhs.is_zero() {
        return LpOutcome::Infeasible;
    }

    // drive artificials out of the basis; rows where that fails are redundant
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= nvar {
            match (0..nvar).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => {
                    tab.pivot(i, j);
                    i += 1;
                }
                None => {
                    tab.rows.remove(i);
                    tab.rhs.remove(i);
                    tab.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    tab.set_costs(cost);
    if !tab.optimize(nvar) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); nvar];
    for (row, &col) in tab.basis.iter().enumerate() {
        if col < nvar {
            point[col] = tab.rhs[row].clone();
        }
    }
    LpOutcome::Optimal { value: -tab.reduced_rhs, point }
}

/// Whether `a x = b`, `x >= 0` has a solution.
pub fn is_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let nvar = a.first().map_or(0, |r| r.len());
    !matches!(minimize(a, b, &vec![Rational::zero(); nvar]), LpOutcome::Infeasible)
}
