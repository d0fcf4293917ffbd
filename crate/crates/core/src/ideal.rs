//! Monomial ideals: Samuel and mixed multiplicities, minimal multiplicity
//! and the containment exponents `p_k` for `e_{n-1}(J, I) >= p`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{invalid, Result};
use crate::geometry::ExponentVector;
use crate::lelong::{generalized_lelong, HomogeneousPsh, MonomialWeight};
use crate::rational::{ceil, Rational};

/// An ideal generated by monomials with nonnegative integer exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<ExponentVector>,
    psh: HomogeneousPsh,
}

impl MonomialIdeal {
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        if generators.iter().any(|g| !g.is_integral()) {
            return invalid("monomial ideal exponents must be integers");
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        let psh = HomogeneousPsh::new(generators.clone())?;
        Ok(Self { generators, psh })
    }

    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        Self::new(generators.iter().map(|g| ExponentVector::from_ints(g)).collect())
    }

    /// The maximal ideal `(z_1, ..., z_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::new((0..n).map(|k| ExponentVector::axis(n, k, Rational::one())).collect())
            .expect("valid dimension")
    }

    /// The principal ideal `(z_k)`.
    pub fn coordinate(n: usize, k: usize) -> Self {
        Self::new(vec![ExponentVector::axis(n, k, Rational::one())]).expect("valid dimension")
    }

    pub fn dimension(&self) -> usize {
        self.psh.dimension()
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// `log|f|` for a generic combination `f` of the generators.
    pub fn as_psh(&self) -> &HomogeneousPsh {
        &self.psh
    }

    /// Adds generators, producing a larger ideal.
    pub fn enlarged(&self, extra: &[ExponentVector]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Self::new(gens)
    }

    /// `min_j |β_j|_1`: the smallest order of vanishing of a member.
    pub fn minimal_multiplicity(&self) -> BigInt {
        self.generators
            .iter()
            .map(|g| g.l1_norm().to_integer())
            .min()
            .expect("nonempty generator set")
    }
}

/// A monomial ideal containing a pure power of every variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryMonomialIdeal {
    ideal: MonomialIdeal,
    weight: MonomialWeight,
}

impl PrimaryMonomialIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        let weight = MonomialWeight::from_psh(ideal.as_psh().clone())?;
        Ok(Self { ideal, weight })
    }

    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        Self::new(MonomialIdeal::from_ints(generators)?)
    }

    pub fn maximal(n: usize) -> Self {
        Self::new(MonomialIdeal::maximal(n)).expect("maximal ideal is primary")
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `max_j log|g_j|`.
    pub fn weight(&self) -> &MonomialWeight {
        &self.weight
    }

    pub fn dimension(&self) -> usize {
        self.ideal.dimension()
    }

    /// `e(I) = τ_φ`.
    pub fn samuel_multiplicity(&self) -> Rational {
        let e = self.weight.residual_mass().clone();
        assert!(e.is_integer() && e.is_positive(), "Samuel multiplicity {e} is not a positive integer");
        e
    }

    /// `e_k(I) = e_{n-1}((z_k), I)` for every `k`.
    pub fn axis_multiplicities(&self) -> Vec<Rational> {
        let n = self.dimension();
        (0..n)
            .map(|k| mixed_multiplicity(&MonomialIdeal::coordinate(n, k), self).expect("same dimension"))
            .collect()
    }

    /// `p_k = min { q ∈ Z_+ : p/q <= e_k(I) } = ceil(p / e_k(I))`.
    pub fn containment_exponents(&self, p: u64) -> Result<Vec<u64>> {
        if p < 1 {
            return invalid("p must be a positive integer");
        }
        let p = Rational::from_integer(BigInt::from(p));
        Ok(self
            .axis_multiplicities()
            .iter()
            .map(|e| ceil(&(&p / e)).to_u64().expect("p_k <= p"))
            .collect())
    }
}

/// `e_{n-1}(J, I) = ν(log|f|, φ_I)` via the representing measure.
pub fn mixed_multiplicity(j: &MonomialIdeal, i: &PrimaryMonomialIdeal) -> Result<Rational> {
    if j.dimension() != i.dimension() {
        return invalid("ideals live in different dimensions");
    }
    let e = generalized_lelong(j.as_psh(), i.weight())?;
    assert!(e.is_integer(), "mixed multiplicity {e} is not an integer");
    Ok(e)
}

/// Per-generator outcome of [`closure_containment_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorContainment {
    pub exponent: ExponentVector,
    /// `Σ_k β_k e_k(I) >= p`.
    pub axis_bound: bool,
    /// `Σ_k β_k / p_k >= 1`: `z^β` lies in the integral closure of `(z_k^{p_k})`.
    pub closure_member: bool,
    /// `β_k >= p_k` for some `k`: `z^β ∈ (z_k^{p_k})` literally.
    pub literal_member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub p: u64,
    pub mixed_multiplicity: Rational,
    pub axis_multiplicities: Vec<Rational>,
    pub exponents: Vec<u64>,
    /// `e_{n-1}(J, I) >= p`.
    pub hypothesis: bool,
    pub generators: Vec<GeneratorContainment>,
}

impl ContainmentReport {
    pub fn all_axis_bound(&self) -> bool {
        self.generators.iter().all(|g| g.axis_bound)
    }

    pub fn all_closure(&self) -> bool {
        self.generators.iter().all(|g| g.closure_member)
    }

    pub fn all_literal(&self) -> bool {
        self.generators.iter().all(|g| g.literal_member)
    }

    /// Hypothesis holds, closure membership holds, literal membership fails.
    pub fn literal_discrepancy(&self) -> bool {
        self.hypothesis && self.all_closure() && !self.all_literal()
    }
}

/// Evaluates the containment conclusion for `e_{n-1}(J, I) >= p` at three
/// strengths for every generator of `J`.
pub fn closure_containment_check(
    j: &MonomialIdeal,
    i: &PrimaryMonomialIdeal,
    p: u64,
) -> Result<ContainmentReport> {
    if p < 1 {
        return invalid("p must be a positive integer");
    }
    let e = mixed_multiplicity(j, i)?;
    let axis = i.axis_multiplicities();
    let exponents = i.containment_exponents(p)?;
    let p_rat = Rational::from_integer(BigInt::from(p));
    let generators = j
        .generators()
        .iter()
        .map(|beta| {
            let bound: Rational = beta.iter().zip(&axis).map(|(b, ek)| b * ek).sum();
            let closure: Rational = beta
                .iter()
                .zip(&exponents)
                .map(|(b, &pk)| b / Rational::from_integer(BigInt::from(pk)))
                .sum();
            let literal = beta
                .iter()
                .zip(&exponents)
                .any(|(b, &pk)| *b >= Rational::from_integer(BigInt::from(pk)));
            GeneratorContainment {
                exponent: beta.clone(),
                axis_bound: bound >= p_rat,
                closure_member: closure >= Rational::one(),
                literal_member: literal,
            }
        })
        .collect();
    Ok(ContainmentReport {
        p,
        hypothesis: e >= p_rat,
        mixed_multiplicity: e,
        axis_multiplicities: axis,
        exponents,
        generators,
    })
}
