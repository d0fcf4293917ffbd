//! Newton polyhedra `conv(A) + R_+^n`: vertices, compact facets, axis
//! intercepts, covolume and Minkowski sums.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::geometry::hull::{for_each_subset, hyperplane_through, triangulate};
use crate::geometry::lp::{self, LpOutcome};
use crate::geometry::{cone_point_member, dot, simplex_volume, ExponentVector, MAX_DIMENSION};
use crate::rational::{factorial, Rational};

/// Where the polyhedron meets a coordinate axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intercept {
    Finite(Rational),
    Infinite,
}

impl Intercept {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Intercept::Finite(c) => Some(c),
            Intercept::Infinite => None,
        }
    }
}

/// A bounded facet `{<w, x> = h}` of the polyhedron. The normal is the
/// primitive integer vector on its ray and is strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactFacet {
    pub normal: Vec<Rational>,
    pub support: Rational,
    /// Indices into [`NewtonPolyhedron::vertices`], ascending.
    pub vertices: Vec<usize>,
    /// `Vol(conv({0} ∪ F))`.
    pub cone_volume: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dimension: usize,
    generators: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
    facets: Vec<CompactFacet>,
    intercepts: Vec<Intercept>,
}

impl NewtonPolyhedron {
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return invalid("Newton polyhedron needs at least one generator");
        };
        let n = first.dim();
        if !(1..=MAX_DIMENSION).contains(&n) {
            return invalid(format!("dimension {n} outside the supported range 1..={MAX_DIMENSION}"));
        }
        if generators.iter().any(|g| g.dim() != n) {
            return invalid("generators have mismatched dimensions");
        }
        let vertices = reduce_to_vertices(&generators)?;
        let facets = compact_facets(n, &vertices);
        let intercepts = (0..n).map(|k| axis_intercept(&vertices, k)).collect();
        Ok(Self { dimension: n, generators, vertices, facets, intercepts })
    }

    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        Self::new(generators.iter().map(|g| ExponentVector::from_ints(g)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Inclusion-minimal generator subset with the same polyhedron, sorted
    /// lexicographically.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// Compact facets sorted by normal.
    pub fn compact_facets(&self) -> &[CompactFacet] {
        &self.facets
    }

    pub fn axis_intercepts(&self) -> &[Intercept] {
        &self.intercepts
    }

    /// Whether the polyhedron meets every coordinate axis, i.e. the
    /// complement in the orthant is bounded.
    pub fn is_primary(&self) -> bool {
        self.intercepts.iter().all(|c| c.finite().is_some())
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        cone_point_member(x, &self.vertices)
    }

    /// `Vol(R_+^n \ Γ+)`, summed over the cones from the origin over each
    /// compact facet.
    pub fn covolume(&self) -> Result<Rational> {
        if let Some(k) = self.intercepts.iter().position(|c| c.finite().is_none()) {
            return Err(Error::NotPrimary(format!("polyhedron does not meet axis {}", k + 1)));
        }
        Ok(self.facets.iter().map(|f| &f.cone_volume).sum())
    }

    /// `n!` times the covolume.
    pub fn normalized_covolume(&self) -> Result<Rational> {
        Ok(self.covolume()? * factorial(self.dimension))
    }

    /// `min_j <α_j, w>` over the generators.
    pub fn support_min(&self, w: &[Rational]) -> Result<Rational> {
        if w.len() != self.dimension {
            return invalid("direction and polyhedron have different dimensions");
        }
        if w.iter().any(Signed::is_negative) {
            return invalid("support direction must be nonnegative");
        }
        Ok(self
            .generators
            .iter()
            .map(|g| dot(g, w))
            .min()
            .expect("nonempty generator set"))
    }

    /// `Γ(P) + Γ(Q)`, built from all pairwise sums of vertices.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return invalid("Minkowski summands have different dimensions");
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                sums.push(p.sum(q));
            }
        }
        Self::new(sums)
    }

    /// `c · Γ` for `c >= 0`.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        if c.is_negative() {
            return invalid("scale factor must be nonnegative");
        }
        Self::new(self.vertices.iter().map(|v| v.scaled(c)).collect())
    }
}

fn reduce_to_vertices(generators: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    let mut pts: Vec<ExponentVector> = generators.to_vec();
    pts.sort();
    pts.dedup();
    let mut i = 0;
    while i < pts.len() {
        if pts.len() > 1 {
            let others: Vec<&ExponentVector> =
                pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
            let others: Vec<&[Rational]> = others.iter().map(|p| p.coords()).collect();
            if cone_point_member(&pts[i], &others)? {
                pts.remove(i);
                continue;
            }
        }
        i += 1;
    }
    Ok(pts)
}

fn compact_facets(n: usize, vertices: &[ExponentVector]) -> Vec<CompactFacet> {
    let mut by_normal: BTreeMap<Vec<Rational>, (Rational, Vec<usize>)> = BTreeMap::new();
    for_each_subset(vertices.len(), n, |subset| {
        let chosen: Vec<&[Rational]> = subset.iter().map(|&i| vertices[i].coords()).collect();
        let Some((mut w, mut h)) = hyperplane_through(&chosen) else {
            return;
        };
        if by_normal.contains_key(&w) {
            return;
        }
        let mut sides: Vec<Rational> = vertices.iter().map(|v| dot(&w, v) - &h).collect();
        let above = sides.iter().any(Signed::is_positive);
        let below = sides.iter().any(Signed::is_negative);
        let flip = match (above, below) {
            (true, true) => return,
            (false, true) => true,
            (true, false) => false,
            // every vertex on the hyperplane: orient the normal positively
            (false, false) => w.iter().any(Signed::is_negative),
        };
        if flip {
            w.iter_mut().for_each(|x| *x = -x.clone());
            h = -h;
            sides.iter_mut().for_each(|x| *x = -x.clone());
        }
        if !w.iter().all(Signed::is_positive) || !h.is_positive() {
            return;
        }
        let incident = (0..vertices.len()).filter(|&i| sides[i].is_zero()).collect();
        by_normal.insert(w, (h, incident));
    });

    by_normal
        .into_iter()
        .map(|(normal, (support, incident))| {
            let cone_volume = facet_cone_volume(n, vertices, &incident);
            CompactFacet { normal, support, vertices: incident, cone_volume }
        })
        .collect()
}

/// Triangulates the facet from one of its vertices (after dropping the last
/// coordinate, an affine isomorphism since the normal is positive) and cones
/// each piece from the origin.
fn facet_cone_volume(n: usize, vertices: &[ExponentVector], incident: &[usize]) -> Rational {
    let facet: Vec<&ExponentVector> = incident.iter().map(|&i| &vertices[i]).collect();
    let origin = ExponentVector::zero(n);
    if n == 1 {
        return simplex_volume(&[origin.coords(), facet[0].coords()]).expect("valid simplex");
    }
    let projected: Vec<&[Rational]> = facet.iter().map(|v| &v.coords()[..n - 1]).collect();
    triangulate(&projected)
        .into_iter()
        .map(|simplex| {
            let mut pts: Vec<&[Rational]> = vec![origin.coords()];
            pts.extend(simplex.iter().map(|&i| facet[i].coords()));
            simplex_volume(&pts).expect("valid simplex")
        })
        .sum()
}

/// `min { c >= 0 : c e_k ∈ Γ+ }` by exact LP over
/// `sum_j λ_j α_j + s - c e_k = 0`, `sum_j λ_j = 1`.
fn axis_intercept(vertices: &[ExponentVector], k: usize) -> Intercept {
    let n = vertices[0].dim();
    let l = vertices.len();
    let width = l + n + 1;
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![Rational::zero(); width];
        for (j, v) in vertices.iter().enumerate() {
            row[j] = v[i].clone();
        }
        row[l + i] = Rational::one();
        if i == k {
            row[width - 1] = -Rational::one();
        }
        a.push(row);
    }
    let mut simplex_row = vec![Rational::zero(); width];
    simplex_row[..l].iter_mut().for_each(|x| *x = Rational::one());
    a.push(simplex_row);
    let mut b = vec![Rational::zero(); n];
    b.push(Rational::one());
    let mut cost = vec![Rational::zero(); width];
    cost[width - 1] = Rational::one();
    match lp::minimize(&a, &b, &cost) {
        LpOutcome::Optimal { value, .. } => Intercept::Finite(value),
        LpOutcome::Infeasible | LpOutcome::Unbounded => Intercept::Infinite,
    }
}
