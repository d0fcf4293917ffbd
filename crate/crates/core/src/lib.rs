//! Exact invariants of monomial plurisubharmonic singularities.
//!
//! A monomial weight `φ = max_j log|z^{α_j}|` is described entirely by its
//! Newton polyhedron `Γ = conv{α_j} + R_+^n`. This crate computes, in exact
//! rational arithmetic, the residual Monge–Ampère mass `τ_φ`, the atomic
//! measure on the extreme points of the level set `{f_φ <= -1}` that
//! represents generalized Lelong numbers, relative types, the extremal
//! simplicial direction, flatness, Łojasiewicz exponents, and the
//! corresponding monomial-ideal multiplicities. Floating-point and
//! brute-force cross-checks live in [`oracles`].

pub mod cli;
pub mod error;
pub mod geometry;
pub mod ideal;
pub mod lelong;
pub mod newton;
pub mod oracles;
pub mod rational;

pub use error::{Error, Result};
pub use geometry::{cone_point_member, simplex_volume, ExponentVector};
pub use ideal::{ContainmentReport, MonomialIdeal, PrimaryMonomialIdeal};
pub use lelong::{DirectionalWeight, HomogeneousPsh, LelongAtom, LelongMeasure, MonomialWeight};
pub use newton::{CompactFacet, Intercept, NewtonPolyhedron};
pub use rational::{Extended, Rational};
