//! Brute-force hyperplane and triangulation helpers for small point sets.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::dot;
use crate::rational::{primitive_integer_vector, Rational};

/// Nonzero solution of `rows · x = 0` when the solution space is a line.
fn null_line(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); ncols];
    x[free] = Rational::from_integer(1.into());
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = -rows[i][free].clone();
    }
    Some(x)
}

/// Hyperplane `<w, x> = h` through `d` points of `R^d`, with `w` the
/// primitive integer normal. `None` when the points are affinely dependent.
pub fn hyperplane_through<P: AsRef<[Rational]>>(points: &[P]) -> Option<(Vec<Rational>, Rational)> {
    let d = points.first()?.as_ref().len();
    if points.len() != d {
        return None;
    }
    let base = points[0].as_ref();
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.as_ref().iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let w = if d == 1 {
        vec![Rational::from_integer(1.into())]
    } else {
        null_line(rows, d)?
    };
    let w: Vec<Rational> = primitive_integer_vector(&w)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let h = dot(&w, base);
    Some((w, h))
}

/// Calls `f` on every `k`-subset of `0..n`, in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Pulling triangulation of the convex hull of a full-dimensional point set
/// in `R^d`. Each simplex is returned as `d + 1` indices into `points`.
pub fn triangulate<P: AsRef<[Rational]>>(points: &[P]) -> Vec<Vec<usize>> {
    let pts: Vec<&[Rational]> = points.iter().map(AsRef::as_ref).collect();
    let idx: Vec<usize> = (0..pts.len()).collect();
    let mut out = Vec::new();
    triangulate_into(&pts, &idx, &mut out);
    out
}

fn triangulate_into(pts: &[&[Rational]], labels: &[usize], out: &mut Vec<Vec<usize>>) {
    let Some(d) = pts.first().map(|p| p.len()) else {
        return;
    };
    if d == 0 {
        return;
    }
    // the lexicographic minimum is always a vertex of the hull
    let apex = (0..pts.len()).min_by(|&a, &b| pts[a].cmp(pts[b])).unwrap();
    if d == 1 {
        let top = (0..pts.len()).max_by(|&a, &b| pts[a].cmp(pts[b])).unwrap();
        if pts[top] != pts[apex] {
            out.push(vec![labels[apex], labels[top]]);
        }
        return;
    }

    let mut facets: Vec<BTreeSet<usize>> = Vec::new();
    for_each_subset(pts.len(), d, |subset| {
        if facets.iter().any(|f| subset.iter().all(|i| f.contains(i))) {
            return;
        }
        let chosen: Vec<&[Rational]> = subset.iter().map(|&i| pts[i]).collect();
        let Some((w, h)) = hyperplane_through(&chosen) else {
            return;
        };
        let mut above = false;
        let mut below = false;
        let mut on = BTreeSet::new();
        for (i, p) in pts.iter().enumerate() {
            let s = dot(&w, p) - &h;
            if s.is_positive() {
                above = true;
            } else if s.is_negative() {
                below = true;
            } else {
                on.insert(i);
            }
        }
        if !(above && below) && (above || below) {
            facets.push(on);
        }
    });

    for facet in facets {
        if facet.contains(&apex) {
            continue;
        }
        let members: Vec<usize> = facet.into_iter().collect();
        let chosen: Vec<&[Rational]> = members.iter().map(|&i| pts[i]).collect();
        // affine isomorphism of the facet hyperplane onto R^{d-1}: drop a
        // coordinate along which the normal is nonzero
        let (w, _) = hyperplane_through(&chosen[..d]).unwrap_or_else(|| {
            let mut found = None;
            for_each_subset(chosen.len(), d, |s| {
                if found.is_none() {
                    let sub: Vec<&[Rational]> = s.iter().map(|&i| chosen[i]).collect();
                    found = hyperplane_through(&sub);
                }
            });
            found.expect("facet spans a hyperplane")
        });
        let drop = (0..d).rev().find(|&k| !w[k].is_zero()).unwrap();
        let projected: Vec<Vec<Rational>> = chosen
            .iter()
            .map(|p| p.iter().enumerate().filter(|(k, _)| *k != drop).map(|(_, c)| c.clone()).collect())
            .collect();
        let proj_refs: Vec<&[Rational]> = projected.iter().map(Vec::as_slice).collect();
        let sub_labels: Vec<usize> = members.iter().map(|&i| labels[i]).collect();
        let mut sub = Vec::new();
        triangulate_into(&proj_refs, &sub_labels, &mut sub);
        for mut simplex in sub {
            simplex.push(labels[apex]);
            out.push(simplex);
        }
    }
}
