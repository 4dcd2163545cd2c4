//! Example triples, fan joins, the moment-angle lift and the moment-angle
//! admissibility test.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::category::Morphism;
use crate::exact::matrix::{to_rational, vectors_rank};
use crate::exact::{
    imag_part, real_part, to_qvector, GVector, GaussMatrix, GaussianRational, IntMatrix, Matrix, QVector, Rational,
    RationalMatrix, ZVector,
};
use crate::polyhedral::cone::dot;
use crate::polyhedral::{Fan, RationalFan, Simplex, SimplicialComplex};
use crate::triple::{Triple, TripleError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("alpha tilde must not be real")]
    RealAlphaTilde,
    #[error("periods are linearly dependent over the reals")]
    DegenerateLattice,
    #[error("fan is not complete")]
    NotComplete,
    #[error("not a fan: {0}")]
    NotAFan(String),
    #[error("input triple is invalid: {0}")]
    InvalidTriple(String),
    #[error("m - dim G = {m} - {rank} is odd")]
    ParityViolation { m: usize, rank: usize },
    #[error("size violation: {0}")]
    SizeViolation(String),
    #[error("postcondition failed: {0}")]
    Postcondition(&'static str),
    #[error(transparent)]
    Triple(#[from] TripleError),
}

fn unit(m: usize, i: usize) -> ZVector {
    (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// Calabi-Eckmann structure on `S^{2k-1} × S^{2(m-k)-1}`; `k = m - 1` gives a Hopf manifold.
///
/// Only indices that occur as vertices of `Σ` carry rays, so a block of size one
/// contributes no ray.
pub fn make_calabi_eckmann(k: usize, m: usize, alpha_tilde: GaussianRational) -> Result<Triple, ConstructionError> {
    if k == 0 || k >= m {
        return Err(ConstructionError::InvalidParameters(format!("need 1 <= k < m, got k = {k}, m = {m}")));
    }
    if alpha_tilde.is_real() {
        return Err(ConstructionError::RealAlphaTilde);
    }
    let first: Vec<usize> = if k >= 2 { (0..k).collect() } else { vec![] };
    let second: Vec<usize> = if m - k >= 2 { (k..m).collect() } else { vec![] };
    let rays: Vec<ZVector> = first.iter().chain(&second).map(|&i| unit(m, i)).collect();
    let drop_one = |block: core::ops::Range<usize>| -> Vec<Simplex> {
        if block.is_empty() {
            return vec![vec![]];
        }
        block.clone().map(|skip| block.clone().filter(|&v| v != skip).collect()).collect()
    };
    let (a, b) = (first.len(), second.len());
    let mut maximal = Vec::new();
    for i in drop_one(0..a) {
        for j in drop_one(a..a + b) {
            maximal.push(i.iter().chain(&j).copied().collect());
        }
    }
    let fan = Fan::from_maximal(m, rays, maximal).map_err(TripleError::from)?;
    let w = (0..m).map(|i| if i < k { GaussianRational::one() } else { alpha_tilde.clone() }).collect();
    Ok(Triple::new(fan, vec![w])?)
}

/// `ℂ^n` modulo the lattice spanned by the columns of `periods`.
pub fn make_torus(n: usize, periods: &GaussMatrix) -> Result<Triple, ConstructionError> {
    if periods.rows() != n || periods.cols() != 2 * n {
        return Err(ConstructionError::InvalidParameters(format!(
            "period matrix is {}x{}, expected {n}x{}",
            periods.rows(),
            periods.cols(),
            2 * n
        )));
    }
    let real = RationalMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n { periods[(i, j)].re.clone() } else { periods[(i - n, j)].im.clone() }
    });
    if real.rank() < 2 * n {
        return Err(ConstructionError::DegenerateLattice);
    }
    Ok(Triple::new(Fan::origin(2 * n), periods.kernel_basis())?)
}

/// A complete nonsingular fan with `𝔥 = 0`.
pub fn make_complete_toric(fan: Fan) -> Result<Triple, ConstructionError> {
    let report = fan.validate();
    if !report.is_fan() {
        return Err(ConstructionError::NotAFan(report.first_failure.unwrap_or_default()));
    }
    if !report.complete {
        return Err(ConstructionError::NotComplete);
    }
    Ok(Triple::new(fan, vec![])?)
}

pub fn join_fans(a: &Fan, b: &Fan) -> Fan {
    a.join(b)
}

pub fn p1_fan() -> Fan {
    Fan::from_maximal(1, vec![vec![BigInt::one()], vec![-BigInt::one()]], [vec![0], vec![1]]).expect("P1 fan")
}

pub fn p2_fan() -> Fan {
    let rays = [[1, 0], [0, 1], [-1, -1]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Fan::from_maximal(2, rays, [vec![0, 1], vec![1, 2], vec![0, 2]]).expect("P2 fan")
}

pub mod gallery {
    //! Named example triples.

    use super::*;

    pub fn torus() -> Triple {
        let periods = Matrix::from_rows(2, &[vec![GaussianRational::one(), GaussianRational::i()]]);
        make_torus(1, &periods).expect("square torus")
    }

    pub fn hopf(n: usize) -> Triple {
        make_calabi_eckmann(n, n + 1, GaussianRational::i()).expect("Hopf manifold")
    }

    pub fn calabi_eckmann(k: usize, m: usize) -> Triple {
        make_calabi_eckmann(k, m, GaussianRational::i()).expect("Calabi-Eckmann manifold")
    }

    pub fn p1() -> Triple {
        make_complete_toric(p1_fan()).expect("P1")
    }

    pub fn p1xp1() -> Triple {
        make_complete_toric(join_fans(&p1_fan(), &p1_fan())).expect("P1 x P1")
    }

    pub fn p2() -> Triple {
        make_complete_toric(p2_fan()).expect("P2")
    }

    /// `ℙ¹` times the square elliptic curve.
    pub fn p1_times_elliptic() -> Triple {
        let fan = join_fans(&p1_fan(), &Fan::origin(2));
        let w = vec![GaussianRational::zero(), GaussianRational::one(), GaussianRational::i()];
        Triple::new(fan, vec![w]).expect("P1 x elliptic curve")
    }

    pub fn all() -> Vec<(&'static str, Triple)> {
        vec![
            ("torus", torus()),
            ("hopf_2", hopf(2)),
            ("hopf_3", hopf(3)),
            ("calabi_eckmann_2_4", calabi_eckmann(2, 4)),
            ("calabi_eckmann_2_5", calabi_eckmann(2, 5)),
            ("p1", p1()),
            ("p1xp1", p1xp1()),
            ("p2", p2()),
            ("p1_times_elliptic", p1_times_elliptic()),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    pub lifted: Triple,
    /// `f: ℤ^m → ℤ^{m_G}` from the lifted triple to the input.
    pub alpha: Morphism,
    /// Indices `k..m` (zero-based), which carry no ray of the lifted fan.
    pub ghost_vertices: Vec<usize>,
}

/// Realises `X(Δ)/H` as a quotient of a moment-angle complex on `m` vertices.
pub fn moment_angle_lift(t: &Triple, m: usize) -> Result<LiftResult, ConstructionError> {
    let report = t.validate();
    if let Some(v) = report.first_failure() {
        return Err(ConstructionError::InvalidTriple(format!("{} fails", v.condition)));
    }
    let rays = t.fan().rays();
    let k = rays.len();
    let rank = t.torus_rank();
    if m < k || m < rank {
        return Err(ConstructionError::SizeViolation(format!("m = {m} is below k = {k} or dim G = {rank}")));
    }
    if (m - rank) % 2 == 1 {
        return Err(ConstructionError::ParityViolation { m, rank });
    }
    let ray_rank = t.fan().ray_rank();
    if m - k < rank - ray_rank {
        return Err(ConstructionError::SizeViolation(format!(
            "{} free columns cannot complete rays of rank {ray_rank} to rank {rank}",
            m - k
        )));
    }

    let mut columns: Vec<ZVector> = rays.to_vec();
    let mut current = ray_rank;
    for j in 0..rank {
        if current == rank {
            break;
        }
        let mut trial = columns.clone();
        trial.push(unit(rank, j));
        let r = vectors_rank(rank, &trial.iter().map(|c| to_qvector(c)).collect::<Vec<_>>());
        if r > current {
            columns = trial;
            current = r;
        }
    }
    columns.resize(m, vec![BigInt::zero(); rank]);
    let f: IntMatrix = Matrix::from_cols(rank, &columns);
    let fq = to_rational(&f);

    let preimage = |b: &QVector| fq.solve(b).expect("f is surjective").x;
    let combine = |u: &QVector, v: &QVector| -> GVector {
        u.iter().zip(v).map(|(a, b)| GaussianRational::new(a.clone(), b.clone())).collect()
    };
    let mut h_lifted: Vec<GVector> =
        t.h_basis().iter().map(|w| combine(&preimage(&real_part(w)), &preimage(&imag_part(w)))).collect();
    let kernel = fq.kernel_basis();
    for pair in kernel.chunks(2) {
        h_lifted.push(combine(&pair[0], &pair[1]));
    }

    let lifted_rays = (0..k).map(|i| unit(m, i)).collect();
    let lifted_fan = Fan::new(m, lifted_rays, t.fan().complex().clone()).map_err(TripleError::from)?;
    let lifted = Triple::new(lifted_fan, h_lifted)?;
    let alpha = Morphism::new(lifted.clone(), t.clone(), f).expect("f has shape dim G x m");

    if !lifted.validate().is_valid() {
        return Err(ConstructionError::Postcondition("lifted triple is valid"));
    }
    if !alpha.validate().is_valid() {
        return Err(ConstructionError::Postcondition("alpha is a morphism"));
    }
    if !alpha.principal_bundle_check().is_principal {
        return Err(ConstructionError::Postcondition("alpha is a principal bundle"));
    }
    if !spans_equal(rank, &alpha.h_images(), t.h_basis()) {
        return Err(ConstructionError::Postcondition("alpha maps h' onto h"));
    }
    Ok(LiftResult { lifted, alpha, ghost_vertices: (k..m).collect() })
}

/// Equality of complex spans.
pub fn spans_equal(dim: usize, a: &[GVector], b: &[GVector]) -> bool {
    let ra = vectors_rank(dim, a);
    let rb = vectors_rank(dim, b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && vectors_rank(dim, &both) == ra
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub parity_ok: bool,
    pub realization_complete: bool,
    pub underlying_matches: bool,
    pub ghost_vertices: Vec<usize>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.parity_ok && self.realization_complete && self.underlying_matches
    }
}

/// Whether `𝒵_Σ` carries the complex structure realised by `rays` in `ℝ^d`.
///
/// `sigma` lives on vertices `0..m`; `rays` are listed for the vertices that
/// occur in `sigma`, in increasing order.
pub fn moment_angle_admissibility(
    sigma: &SimplicialComplex,
    m: usize,
    d: usize,
    rays: &[ZVector],
) -> Result<AdmissibilityReport, ConstructionError> {
    let vertices: Vec<usize> = sigma.vertices().into_iter().collect();
    if let Some(&v) = vertices.iter().find(|&&v| v >= m) {
        return Err(ConstructionError::InvalidParameters(format!("vertex {} exceeds m = {m}", v + 1)));
    }
    if vertices.len() != rays.len() {
        return Err(ConstructionError::InvalidParameters(format!(
            "{} rays given for {} vertices",
            rays.len(),
            vertices.len()
        )));
    }
    if let Some(i) = rays.iter().position(|r| r.len() != d) {
        return Err(ConstructionError::InvalidParameters(format!("ray {} does not have length {d}", i + 1)));
    }
    let position = |v: usize| vertices.binary_search(&v).expect("vertex of sigma");
    let complex = sigma.relabel(position);
    let qrays: Vec<QVector> = rays.iter().map(|r| to_qvector(r)).collect();
    let fan = RationalFan::new(d, qrays.clone(), complex.clone()).expect("shapes checked");

    let independent = fan.dependent_cone().is_none() && qrays.iter().all(|r| r.iter().any(|x| !x.is_zero()));
    let distinct = (0..qrays.len()).all(|a| (a + 1..qrays.len()).all(|b| !same_direction(d, &qrays[a], &qrays[b])));
    Ok(AdmissibilityReport {
        parity_ok: (m + d).is_multiple_of(2),
        realization_complete: fan.is_complete(d).unwrap_or(false),
        underlying_matches: sigma.is_closed() && independent && distinct,
        ghost_vertices: (0..m).filter(|v| vertices.binary_search(v).is_err()).collect(),
    })
}

fn same_direction(d: usize, a: &[Rational], b: &[Rational]) -> bool {
    vectors_rank(d, &[a.to_vec(), b.to_vec()]) == 1 && dot(a, b).is_positive()
}
