//! Residual masses, the representing measure on the extreme points of the
//! level set, generalized Lelong numbers and relative types for
//! homogeneous (monomial) data.
//!
//! In logarithmic coordinates `t_k = log|z_k| <= 0` a monomial function
//! `u = max_j log|z^{β_j}|` becomes the support-type function
//! `f_u(t) = max_j <β_j, t>`. Everything below is phrased through the
//! Newton polyhedron of the exponents.
//!
//! The measure: every compact facet `F` of `Γ_φ` with inner normal `w` and
//! support value `h` gives one extreme point `-w/h` of
//! `L = {t <= 0 : f_φ(t) <= -1}`, carrying mass `n! Vol(conv({0} ∪ F))`.

use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::geometry::{dot, ExponentVector};
use crate::newton::NewtonPolyhedron;
use crate::rational::{Extended, Rational};

/// A homogeneous plurisubharmonic function `max_j log|z^{β_j}|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPsh {
    polyhedron: NewtonPolyhedron,
}

impl HomogeneousPsh {
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        Ok(Self { polyhedron: NewtonPolyhedron::new(generators)? })
    }

    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        Ok(Self { polyhedron: NewtonPolyhedron::from_ints(generators)? })
    }

    /// The single-term function `log|z^β|`.
    pub fn monomial(exponent: ExponentVector) -> Result<Self> {
        Self::new(vec![exponent])
    }

    pub fn dimension(&self) -> usize {
        self.polyhedron.dimension()
    }

    pub fn generators(&self) -> &[ExponentVector] {
        self.polyhedron.generators()
    }

    pub fn polyhedron(&self) -> &NewtonPolyhedron {
        &self.polyhedron
    }

    /// Pointwise maximum `max(u, v)`: the union of the generator sets.
    pub fn max_with(&self, other: &Self) -> Result<Self> {
        if self.dimension() != other.dimension() {
            return invalid("functions have different dimensions");
        }
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(other.generators());
        Self::new(gens)
    }

    /// `f_u(t) = max_j <β_j, t>` for `t` in the closed negative orthant,
    /// with `0 · (-inf) = 0`.
    pub fn evaluate(&self, t: &[Extended]) -> Result<Extended> {
        if t.len() != self.dimension() {
            return invalid("evaluation point has the wrong dimension");
        }
        if t.iter().any(|x| x.finite().is_some_and(Signed::is_positive)) {
            return invalid("evaluation point must be nonpositive");
        }
        let value = self
            .generators()
            .iter()
            .map(|beta| {
                let mut acc = Rational::zero();
                for (b, x) in beta.iter().zip(t) {
                    if b.is_zero() {
                        continue;
                    }
                    match x {
                        Extended::NegInfinity => return Extended::NegInfinity,
                        Extended::Finite(x) => acc += b * x,
                    }
                }
                Extended::Finite(acc)
            })
            .max()
            .expect("nonempty generator set");
        Ok(value)
    }

    /// Kiselman's directional Lelong number `ν_u(0, a) = min_j <β_j, a>`.
    pub fn directional_lelong(&self, a: &[Rational]) -> Result<Rational> {
        if a.len() != self.dimension() {
            return invalid("direction has the wrong dimension");
        }
        if !a.iter().all(Signed::is_positive) {
            return invalid("direction must be strictly positive");
        }
        self.polyhedron.support_min(a)
    }

    // atoms have strictly positive -t, so no validation is needed here
    fn directional_at(&self, neg_t: &[Rational]) -> Rational {
        self.generators()
            .iter()
            .map(|b| dot(b, neg_t))
            .min()
            .expect("nonempty generator set")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LelongAtom {
    /// Extreme point `t_v` of the level set; strictly negative coordinates.
    pub vertex: Vec<Rational>,
    pub mass: Rational,
}

impl LelongAtom {
    /// `-t_v`, the direction along which the atom evaluates Lelong numbers.
    pub fn direction(&self) -> Vec<Rational> {
        self.vertex.iter().map(|x| -x.clone()).collect()
    }
}

/// Finite atomic measure on the extreme points of `{f_φ <= -1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LelongMeasure {
    atoms: Vec<LelongAtom>,
    total_mass: Rational,
}

impl LelongMeasure {
    pub fn atoms(&self) -> &[LelongAtom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> &Rational {
        &self.total_mass
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// A homogeneous weight with an isolated pole at the origin: every axis
/// carries a pure-power generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialWeight {
    psh: HomogeneousPsh,
    residual_mass: Rational,
    measure: LelongMeasure,
}

impl MonomialWeight {
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        Self::from_psh(HomogeneousPsh::new(generators)?)
    }

    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        Self::from_psh(HomogeneousPsh::from_ints(generators)?)
    }

    pub fn from_psh(psh: HomogeneousPsh) -> Result<Self> {
        let n = psh.dimension();
        for k in 0..n {
            if !psh.generators().iter().any(|g| g.pure_power_axis() == Some(k)) {
                return Err(Error::NotPrimary(format!("no pure power of z_{} among the generators", k + 1)));
            }
        }
        let poly = psh.polyhedron();
        let residual_mass = poly.normalized_covolume()?;
        if !residual_mass.is_positive() {
            return Err(Error::NotPrimary("weight has no pole at the origin".into()));
        }
        let scale = crate::rational::factorial(n);
        let atoms: Vec<LelongAtom> = poly
            .compact_facets()
            .iter()
            .map(|f| LelongAtom {
                vertex: f.normal.iter().map(|w| -(w / &f.support)).collect(),
                mass: &f.cone_volume * &scale,
            })
            .collect();
        let total_mass = atoms.iter().map(|a| &a.mass).sum();
        let measure = LelongMeasure { atoms, total_mass };
        Ok(Self { psh, residual_mass, measure })
    }

    /// The maximal-ideal weight `log|z|` in dimension `n`.
    pub fn maximal_ideal(n: usize) -> Result<Self> {
        Self::new((0..n).map(|k| ExponentVector::axis(n, k, Rational::one())).collect())
    }

    pub fn dimension(&self) -> usize {
        self.psh.dimension()
    }

    pub fn as_psh(&self) -> &HomogeneousPsh {
        &self.psh
    }

    pub fn polyhedron(&self) -> &NewtonPolyhedron {
        self.psh.polyhedron()
    }

    /// `τ_φ = (dd^c φ)^n({0}) = n! · covolume(Γ_φ)`.
    pub fn residual_mass(&self) -> &Rational {
        &self.residual_mass
    }

    pub fn lelong_measure(&self) -> &LelongMeasure {
        &self.measure
    }

    /// `a_k = ν̃(log|z_k|, φ)`: the direction of the simplicial weight that
    /// governs the extremal function for `φ`.
    pub fn extremal_direction(&self) -> DirectionalWeight {
        let n = self.dimension();
        let a = (0..n)
            .map(|k| {
                let nu: Rational =
                    self.measure.atoms.iter().map(|at| &at.mass * -at.vertex[k].clone()).sum();
                nu / &self.residual_mass
            })
            .collect();
        DirectionalWeight::new(a).expect("extremal direction is strictly positive")
    }

    /// Simplicial (single compact facet).
    pub fn is_flat(&self) -> bool {
        self.measure.len() == 1
    }

    /// Finite probe family used to certify non-flatness: every vertex of
    /// `Γ_φ` rescaled to normalized Lelong number 1, then the axis exponents.
    pub fn probe_family(&self) -> Vec<ExponentVector> {
        let n = self.dimension();
        let mut probes = Vec::new();
        for v in self.polyhedron().vertices() {
            let u = HomogeneousPsh::monomial(v.clone()).expect("vertex is a valid exponent");
            let nu = normalized_lelong(&u, self).expect("same dimension");
            if nu.is_positive() {
                probes.push(v.scaled(&nu.recip()));
            }
        }
        probes.extend((0..n).map(|k| ExponentVector::axis(n, k, Rational::one())));
        probes
    }

    /// First probe `u` with `ν̃(u, φ) > σ(u, φ)`, if any.
    pub fn flatness_witness(&self) -> Option<ExponentVector> {
        self.probe_family().into_iter().find(|p| {
            let u = HomogeneousPsh::monomial(p.clone()).expect("probe is a valid exponent");
            normalized_lelong(&u, self).expect("same dimension")
                > relative_type(&u, self).expect("same dimension")
        })
    }

    /// `L_φ = limsup φ / log|z|`, which for a monomial weight is the largest
    /// axis intercept of `Γ_φ`.
    pub fn lojasiewicz_exponent(&self) -> Rational {
        self.polyhedron()
            .axis_intercepts()
            .iter()
            .map(|c| c.finite().expect("weights meet every axis").clone())
            .max()
            .expect("positive dimension")
    }
}

/// The simplicial weight `max_k a_k^{-1} log|z_k|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionalWeight {
    a: Vec<Rational>,
    weight: MonomialWeight,
}

impl DirectionalWeight {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return invalid("direction must have at least one coordinate");
        }
        if !a.iter().all(Signed::is_positive) {
            return invalid("direction must be strictly positive");
        }
        let n = a.len();
        let weight =
            MonomialWeight::new(a.iter().enumerate().map(|(k, ak)| ExponentVector::axis(n, k, ak.recip())).collect())?;
        Ok(Self { a, weight })
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn weight(&self) -> &MonomialWeight {
        &self.weight
    }

    pub fn into_weight(self) -> MonomialWeight {
        self.weight
    }
}

fn check_dims(u: &HomogeneousPsh, phi: &MonomialWeight) -> Result<()> {
    if u.dimension() != phi.dimension() {
        return invalid(format!(
            "function has dimension {} but the weight has dimension {}",
            u.dimension(),
            phi.dimension()
        ));
    }
    Ok(())
}

/// `ν(u, φ) = Σ_v γ_v ν_u(0, -t_v)`.
pub fn generalized_lelong(u: &HomogeneousPsh, phi: &MonomialWeight) -> Result<Rational> {
    check_dims(u, phi)?;
    Ok(phi
        .measure
        .atoms
        .iter()
        .map(|at| &at.mass * u.directional_at(&at.direction()))
        .sum())
}

/// `ν̃(u, φ) = ν(u, φ) / τ_φ`.
pub fn normalized_lelong(u: &HomogeneousPsh, phi: &MonomialWeight) -> Result<Rational> {
    Ok(generalized_lelong(u, phi)? / phi.residual_mass())
}

/// `σ(u, φ) = liminf u/φ`, the minimum of `<β_j, -t_v>` over generators and
/// extreme points of the level set.
pub fn relative_type(u: &HomogeneousPsh, phi: &MonomialWeight) -> Result<Rational> {
    check_dims(u, phi)?;
    Ok(phi
        .measure
        .atoms
        .iter()
        .map(|at| u.directional_at(&at.direction()))
        .min()
        .expect("a weight has at least one atom"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn phi_star() -> MonomialWeight {
        MonomialWeight::from_ints(&[&[3, 0], &[0, 3], &[1, 1]]).unwrap()
    }

    fn psh(g: &[&[i64]]) -> HomogeneousPsh {
        HomogeneousPsh::from_ints(g).unwrap()
    }

    fn fin(v: &[i64]) -> Vec<Extended> {
        v.iter().map(|&x| Extended::Finite(int(x))).collect()
    }

    #[test]
    fn residual_mass_examples() {
        assert_eq!(phi_star().residual_mass(), &int(6));
        for n in 2..=5 {
            assert_eq!(MonomialWeight::maximal_ideal(n).unwrap().residual_mass(), &int(1));
        }
        let d = DirectionalWeight::new(vec![int(1), int(2)]).unwrap();
        assert_eq!(d.weight().residual_mass(), &rat(1, 2));
    }

    #[test]
    fn weight_validation() {
        assert!(matches!(MonomialWeight::from_ints(&[&[2, 0], &[1, 1]]), Err(Error::NotPrimary(_))));
        assert!(matches!(MonomialWeight::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]), Err(Error::NotPrimary(_))));
        assert!(DirectionalWeight::new(vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn directional_lelong_examples() {
        assert_eq!(psh(&[&[1, 1]]).directional_lelong(&[int(1), int(2)]).unwrap(), int(3));
        assert_eq!(phi_star().as_psh().directional_lelong(&[int(1), int(1)]).unwrap(), int(2));
        assert_eq!(psh(&[&[2, 0], &[0, 2]]).directional_lelong(&[int(1), int(1)]).unwrap(), int(2));
        assert!(psh(&[&[1, 1]]).directional_lelong(&[int(1), int(0)]).is_err());
        assert!(psh(&[&[1, 1]]).directional_lelong(&[int(1)]).is_err());
    }

    #[test]
    fn measure_examples() {
        let m = phi_star();
        let atoms = m.lelong_measure().atoms();
        assert_eq!(atoms.len(), 2);
        assert_eq!(atoms[0].vertex, vec![rat(-1, 3), rat(-2, 3)]);
        assert_eq!(atoms[0].mass, int(3));
        assert_eq!(atoms[1].vertex, vec![rat(-2, 3), rat(-1, 3)]);
        assert_eq!(atoms[1].mass, int(3));
        assert_eq!(m.lelong_measure().total_mass(), &int(6));

        let m3 = MonomialWeight::maximal_ideal(3).unwrap();
        assert_eq!(m3.lelong_measure().atoms(), &[LelongAtom { vertex: vec![int(-1); 3], mass: int(1) }]);

        let d = DirectionalWeight::new(vec![rat(1, 2), int(3), rat(5, 4)]).unwrap();
        let atoms = d.weight().lelong_measure().atoms();
        assert_eq!(atoms.len(), 1);
        assert_eq!(atoms[0].vertex, vec![rat(-1, 2), int(-3), rat(-5, 4)]);
        assert_eq!(atoms[0].mass, rat(8, 15));
    }

    #[test]
    fn generalized_lelong_examples() {
        let phi = phi_star();
        assert_eq!(generalized_lelong(&psh(&[&[1, 0]]), &phi).unwrap(), int(3));
        let u = psh(&[&[2, 0], &[0, 2]]);
        assert_eq!(generalized_lelong(&u, &phi).unwrap(), int(4));
        assert_eq!(normalized_lelong(&u, &phi).unwrap(), rat(2, 3));
        let u = psh(&[&[2, 0]]);
        assert_eq!(generalized_lelong(&u, &phi).unwrap(), int(6));
        assert_eq!(normalized_lelong(&u, &phi).unwrap(), int(1));
        assert_eq!(generalized_lelong(phi.as_psh(), &phi).unwrap(), int(6));
        assert!(generalized_lelong(&psh(&[&[1, 0, 0]]), &phi).is_err());
    }

    #[test]
    fn relative_type_examples() {
        let phi = phi_star();
        assert_eq!(relative_type(&psh(&[&[2, 0]]), &phi).unwrap(), rat(2, 3));
        assert_eq!(relative_type(phi.as_psh(), &phi).unwrap(), int(1));
        let m = MonomialWeight::maximal_ideal(2).unwrap();
        assert_eq!(relative_type(&psh(&[&[1, 2]]), &m).unwrap(), int(3));
        assert_eq!(relative_type(&psh(&[&[1, 0]]), &phi).unwrap(), rat(1, 3));
    }

    #[test]
    fn extremal_direction_examples() {
        assert_eq!(phi_star().extremal_direction().a(), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(MonomialWeight::maximal_ideal(4).unwrap().extremal_direction().a(), vec![int(1); 4].as_slice());
        let a = vec![rat(2, 3), int(5), rat(1, 7)];
        let d = DirectionalWeight::new(a.clone()).unwrap();
        assert_eq!(d.weight().extremal_direction().a(), a.as_slice());
    }

    #[test]
    fn flatness_examples() {
        assert!(DirectionalWeight::new(vec![int(3), rat(1, 2)]).unwrap().weight().is_flat());
        assert!(MonomialWeight::maximal_ideal(3).unwrap().is_flat());
        let phi = phi_star();
        assert!(!phi.is_flat());
        let w = phi.flatness_witness().expect("witness");
        let u = HomogeneousPsh::monomial(w).unwrap();
        assert!(normalized_lelong(&u, &phi).unwrap() > relative_type(&u, &phi).unwrap());
        assert!(MonomialWeight::maximal_ideal(2).unwrap().flatness_witness().is_none());
    }

    #[test]
    fn lojasiewicz_examples() {
        assert_eq!(phi_star().lojasiewicz_exponent(), int(3));
        assert_eq!(MonomialWeight::maximal_ideal(3).unwrap().lojasiewicz_exponent(), int(1));
        let d = DirectionalWeight::new(vec![int(1), int(2)]).unwrap();
        assert_eq!(d.weight().lojasiewicz_exponent(), int(1));
    }

    #[test]
    fn evaluate_examples() {
        let phi = phi_star();
        assert_eq!(phi.as_psh().evaluate(&fin(&[-1, -10])).unwrap(), Extended::Finite(int(-3)));
        let t = vec![Extended::Finite(int(-1)), Extended::NegInfinity];
        assert_eq!(phi.as_psh().evaluate(&t).unwrap(), Extended::Finite(int(-3)));
        assert_eq!(phi.as_psh().evaluate(&fin(&[0, 0])).unwrap(), Extended::Finite(int(0)));
        let all_inf = vec![Extended::NegInfinity; 2];
        assert_eq!(phi.as_psh().evaluate(&all_inf).unwrap(), Extended::NegInfinity);
        assert!(phi.as_psh().evaluate(&fin(&[1, -1])).is_err());
    }
}
