#![allow(dead_code)]

use lelong::rational::rat;
use lelong::{ExponentVector, HomogeneousPsh, MonomialIdeal, MonomialWeight, PrimaryMonomialIdeal, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_nonzero(rng: &mut ChaCha8Rng, n: usize, max: i64) -> ExponentVector {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.random_range(0..=max)).collect();
        if v.iter().any(|&c| c > 0) {
            return ExponentVector::from_ints(&v);
        }
    }
}

/// Pure powers on every axis plus up to `extra` random monomials, entries <= 12.
pub fn random_primary_exponents(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Vec<ExponentVector> {
    let powers: Vec<i64> = (0..n).map(|_| rng.random_range(1..=12)).collect();
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|k| {
            let mut v = vec![0; n];
            v[k] = powers[k];
            ExponentVector::from_ints(&v)
        })
        .collect();
    // Mixed monomials inside the box of pure powers are the ones that can shape Γ.
    let count = rng.random_range(0..=extra);
    for _ in 0..count {
        let v: Vec<i64> = powers.iter().map(|&c| rng.random_range(0..=c)).collect();
        if v.iter().any(|&c| c > 0) {
            gens.push(ExponentVector::from_ints(&v));
        }
    }
    gens
}

pub fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> MonomialWeight {
    MonomialWeight::new(random_primary_exponents(rng, n, 4)).expect("primary by construction")
}

pub fn random_primary_ideal(rng: &mut ChaCha8Rng, n: usize) -> PrimaryMonomialIdeal {
    PrimaryMonomialIdeal::new(MonomialIdeal::new(random_primary_exponents(rng, n, 3)).unwrap()).unwrap()
}

pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max: i64) -> MonomialIdeal {
    let count = rng.random_range(1..=3);
    MonomialIdeal::new((0..count).map(|_| random_nonzero(rng, n, max)).collect()).unwrap()
}

pub fn random_psh(rng: &mut ChaCha8Rng, n: usize) -> HomogeneousPsh {
    let count = rng.random_range(1..=3);
    HomogeneousPsh::new((0..count).map(|_| random_nonzero(rng, n, 8)).collect()).unwrap()
}

pub fn random_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.random_range(1..=7), rng.random_range(1..=5))).collect()
}

pub fn phi_star() -> MonomialWeight {
    MonomialWeight::from_ints(&[&[3, 0], &[1, 1], &[0, 3]]).unwrap()
}

pub fn report(criterion: u32, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}
