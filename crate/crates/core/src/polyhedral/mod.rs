//! Simplicial rational cones and fans: membership, unimodularity, the fan
//! property via separating functionals, and completeness via wall counting.

pub mod complex;
pub mod cone;
pub mod fan;
pub mod fourier_motzkin;

use alloc::string::String;

pub use complex::{Simplex, SimplicialComplex};
pub use cone::{Cone, Membership};
pub use fan::{show, Fan, FanDefect, FanReport, RationalFan};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedralError {
    #[error("malformed fan: {0}")]
    Shape(String),
    #[error("cone rays do not extend to a lattice basis")]
    NotUnimodular,
    #[error("index set {0} is not a cone of the fan")]
    NotInFan(String),
    #[error("fan axioms fail: {0}")]
    PrereqFailed(String),
}
