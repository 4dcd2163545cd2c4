//! Exact combinatorial data of compact complex manifolds carrying maximal
//! compact torus actions.
//!
//! An object is a triple `(Δ, 𝔥, G)`: a nonsingular fan `Δ` in the Lie algebra
//! `ℝ^m` of the standard torus `G = (S¹)^m` and a complex subspace `𝔥 ⊂ ℂ^m`.
//! [`triple::Triple::validate`] decides whether such a triple describes a
//! manifold; the other modules compute derived invariants, morphisms and the
//! moment-angle lifting construction. Everything is exact: scalars live in
//! `ℚ(i)` and lattice computations use arbitrary-precision integers.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod category;
pub mod constructions;
pub mod exact;
pub mod oracle;
pub mod polyhedral;
pub mod triple;

pub use category::{Morphism, MorphismReport, PrincipalResult};
pub use constructions::{AdmissibilityReport, LiftResult};
pub use exact::{GaussianRational, Rational};
pub use polyhedral::{Fan, FanReport, RationalFan, SimplicialComplex};
pub use triple::{Triple, ValidationReport};
