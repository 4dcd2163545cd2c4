use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::complex::{SimplicialComplex, Simplex};
use super::cone::{self, Cone, Membership};
use super::PolyhedralError;
use crate::exact::{lattice, matrix::vectors_rank, to_qvector, QVector, Rational, ZVector};

/// A simplicial fan whose rays are arbitrary nonzero rational vectors.
///
/// This is the carrier for image fans such as `q(Δ)`, where rays have no
/// preferred lattice. Cone `I` is `pos(rays[i] | i ∈ I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFan {
    dim: usize,
    rays: Vec<QVector>,
    complex: SimplicialComplex,
}

/// Why a rational fan fails to be a simplicial fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanDefect {
    NotClosed { face: Simplex, missing: Simplex },
    ZeroRay(usize),
    RayNotInComplex(usize),
    DependentCone(Simplex),
    Overlap(Simplex, Simplex),
}

impl core::fmt::Display for FanDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FanDefect::NotClosed { face, missing } => {
                write!(f, "face {} lacks subface {}", show(face), show(missing))
            }
            FanDefect::ZeroRay(i) => write!(f, "ray {} is zero", i + 1),
            FanDefect::RayNotInComplex(i) => write!(f, "ray {} is not a 1-cone", i + 1),
            FanDefect::DependentCone(s) => write!(f, "rays of cone {} are linearly dependent", show(s)),
            FanDefect::Overlap(a, b) => {
                write!(f, "cones {} and {} do not meet in a common face", show(a), show(b))
            }
        }
    }
}

/// One-based rendering of an index set, e.g. `{1,3}`.
pub fn show(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(|i| format!("{}", i + 1)).collect();
    format!("{{{}}}", inner.join(","))
}

impl RationalFan {
    pub fn new(dim: usize, rays: Vec<QVector>, complex: SimplicialComplex) -> Result<Self, PolyhedralError> {
        check_shape(dim, rays.iter().map(Vec::len), rays.len(), &complex)?;
        Ok(RationalFan { dim, rays, complex })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[QVector] {
        &self.rays
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn generators(&self, cone: &[usize]) -> Vec<QVector> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn cone_membership(&self, cone: &[usize], x: &[Rational]) -> Membership {
        cone::membership(self.dim, &self.generators(cone), x)
    }

    pub fn separating_functional(&self, i: &[usize], j: &[usize]) -> Option<QVector> {
        cone::separating_functional(self.dim, &self.rays, i, j)
    }

    pub fn ray_rank(&self) -> usize {
        vectors_rank(self.dim, &self.rays)
    }

    /// First maximal cone with linearly dependent rays.
    pub fn dependent_cone(&self) -> Option<Simplex> {
        self.complex
            .maximal_faces()
            .into_iter()
            .find(|s| vectors_rank(self.dim, &self.generators(s)) < s.len())
    }

    /// First pair of maximal cones, in lexicographic order, admitting no
    /// separating functional. Faces inherit the property from their cofaces.
    pub fn overlapping_pair(&self) -> Option<(Simplex, Simplex)> {
        let maximal = self.complex.maximal_faces();
        for (a, i) in maximal.iter().enumerate() {
            for j in &maximal[a + 1..] {
                if self.separating_functional(i, j).is_none() {
                    return Some((i.clone(), j.clone()));
                }
            }
        }
        None
    }

    /// First reason this is not a simplicial fan, if any.
    pub fn defect(&self) -> Option<FanDefect> {
        if let Some((face, missing)) = self.complex.missing_subface() {
            return Some(FanDefect::NotClosed { face, missing });
        }
        if let Some(i) = self.rays.iter().position(|r| r.iter().all(Zero::is_zero)) {
            return Some(FanDefect::ZeroRay(i));
        }
        if let Some(i) = (0..self.rays.len()).find(|&i| !self.complex.contains(&[i])) {
            return Some(FanDefect::RayNotInComplex(i));
        }
        if let Some(s) = self.dependent_cone() {
            return Some(FanDefect::DependentCone(s));
        }
        self.overlapping_pair().map(|(a, b)| FanDefect::Overlap(a, b))
    }

    /// Completeness in a `d`-dimensional space, decided combinatorially.
    ///
    /// * `d = 0`: only the zero cone.
    /// * `d = 1`: two rays pointing in opposite directions.
    /// * `d ≥ 2`: the rays span `d` dimensions, the complex is pure of face size
    ///   `d`, every wall (face of size `d − 1`) lies in exactly two maximal
    ///   faces and the maximal faces are connected through walls.
    ///
    /// Requires the fan to be well formed ([`RationalFan::defect`] is `None`).
    pub fn is_complete(&self, d: usize) -> Result<bool, PolyhedralError> {
        if let Some(defect) = self.defect() {
            return Err(PolyhedralError::PrereqFailed(format!("{defect}")));
        }
        Ok(self.complete_unchecked(d))
    }

    pub(crate) fn complete_unchecked(&self, d: usize) -> bool {
        if self.ray_rank() != d {
            return false;
        }
        match d {
            0 => self.complex.is_empty(),
            1 => {
                let vertices: Vec<usize> = self.complex.vertices().into_iter().collect();
                vertices.iter().any(|&a| {
                    vertices.iter().any(|&b| {
                        // dependent pair with a negative ratio
                        let ra = &self.rays[a];
                        let rb = &self.rays[b];
                        vectors_rank(self.dim, &[ra.clone(), rb.clone()]) == 1
                            && cone::dot(ra, rb).is_negative()
                    })
                })
            }
            _ => {
                self.complex.pure_dim() == Some(d)
                    && self.complex.wall_violation(d).is_none()
                    && self.complex.top_faces_connected(d)
                    && !self.complex.faces_of_size(d).is_empty()
            }
        }
    }

    /// The unique cone whose relative interior contains `v`, if any.
    pub fn locate(&self, v: &[Rational]) -> Option<Simplex> {
        for top in self.complex.maximal_faces() {
            if let Some(support) = self.cone_membership(&top, v).support() {
                let face: Simplex = support.into_iter().map(|k| top[k]).collect();
                return Some(face);
            }
        }
        None
    }
}

fn check_shape(
    dim: usize,
    mut lengths: impl Iterator<Item = usize>,
    ray_count: usize,
    complex: &SimplicialComplex,
) -> Result<(), PolyhedralError> {
    if let Some(bad) = lengths.position(|l| l != dim) {
        return Err(PolyhedralError::Shape(format!("ray {} does not have length {dim}", bad + 1)));
    }
    if let Some(v) = complex.vertices().into_iter().find(|&v| v >= ray_count) {
        return Err(PolyhedralError::Shape(format!("simplex vertex {} exceeds ray count {ray_count}", v + 1)));
    }
    Ok(())
}

/// A fan of simplicial cones spanned by primitive lattice vectors in `ℤ^m`.
///
/// Construction only checks shapes; [`Fan::validate`] checks the fan axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient_rank: usize,
    rays: Vec<ZVector>,
    complex: SimplicialComplex,
}

/// Outcome of [`Fan::validate`]. Every check runs; `first_failure` describes
/// the first one that failed, in field order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    pub is_simplicial_complex: bool,
    pub rays_primitive: bool,
    pub rays_distinct: bool,
    /// Every ray index is a vertex of the complex.
    pub rays_are_cones: bool,
    pub nonsingular: bool,
    pub fan_property: bool,
    pub overlap: Option<(Simplex, Simplex)>,
    pub pure_dim: Option<usize>,
    pub wall_condition: bool,
    /// Complete in the ambient space; only evaluated when the fan axioms hold.
    pub complete: bool,
    pub first_failure: Option<String>,
}

impl FanReport {
    /// The axioms of a nonsingular fan (completeness not required).
    pub fn is_fan(&self) -> bool {
        self.is_simplicial_complex
            && self.rays_primitive
            && self.rays_distinct
            && self.rays_are_cones
            && self.nonsingular
            && self.fan_property
    }
}

impl Fan {
    pub fn new(ambient_rank: usize, rays: Vec<ZVector>, complex: SimplicialComplex) -> Result<Self, PolyhedralError> {
        check_shape(ambient_rank, rays.iter().map(Vec::len), rays.len(), &complex)?;
        Ok(Fan { ambient_rank, rays, complex })
    }

    /// Fan with the downward closure of `maximal` as its complex.
    pub fn from_maximal(
        ambient_rank: usize,
        rays: Vec<ZVector>,
        maximal: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self, PolyhedralError> {
        Fan::new(ambient_rank, rays, SimplicialComplex::from_maximal(maximal))
    }

    /// The fan `{0}` in `ℝ^m`.
    pub fn origin(ambient_rank: usize) -> Self {
        Fan { ambient_rank, rays: Vec::new(), complex: SimplicialComplex::empty() }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[ZVector] {
        &self.rays
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn to_rational(&self) -> RationalFan {
        RationalFan {
            dim: self.ambient_rank,
            rays: self.rays.iter().map(|r| to_qvector(r)).collect(),
            complex: self.complex.clone(),
        }
    }

    pub fn cone(&self, indices: &[usize]) -> Result<Cone<'_>, PolyhedralError> {
        if !self.complex.contains(indices) {
            return Err(PolyhedralError::NotInFan(show(indices)));
        }
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        Ok(Cone { dim: self.ambient_rank, rays: &self.rays, indices })
    }

    pub fn ray_rank(&self) -> usize {
        self.to_rational().ray_rank()
    }

    pub fn validate(&self) -> FanReport {
        let rational = self.to_rational();
        let mut failures: Vec<String> = Vec::new();

        let missing = self.complex.missing_subface();
        if let Some((face, sub)) = &missing {
            failures.push(format!("not a simplicial complex: {} lacks {}", show(face), show(sub)));
        }
        let bad_ray = self.rays.iter().position(|r| !lattice::is_primitive(r));
        if let Some(i) = bad_ray {
            failures.push(format!("ray {} is not primitive", i + 1));
        }
        let duplicate = (0..self.rays.len())
            .flat_map(|a| (a + 1..self.rays.len()).map(move |b| (a, b)))
            .find(|&(a, b)| self.rays[a] == self.rays[b]);
        if let Some((a, b)) = duplicate {
            failures.push(format!("rays {} and {} coincide", a + 1, b + 1));
        }
        let orphan = (0..self.rays.len()).find(|&i| !self.complex.contains(&[i]));
        if let Some(i) = orphan {
            failures.push(format!("ray {} is not a 1-cone", i + 1));
        }
        let singular = self
            .complex
            .maximal_faces()
            .into_iter()
            .find(|s| !cone::is_unimodular(self.ambient_rank, &self.cone_generators(s)));
        if let Some(s) = &singular {
            failures.push(format!("cone {} is not unimodular", show(s)));
        }
        // separation needs independent rays per cone
        let independent = rational.dependent_cone().is_none();
        let overlap = if independent { rational.overlapping_pair() } else { None };
        let fan_property = independent && overlap.is_none();
        if let Some((a, b)) = &overlap {
            failures.push(format!("cones {} and {} overlap", show(a), show(b)));
        }

        let pure_dim = self.complex.pure_dim();
        let wall_condition = pure_dim.is_some_and(|d| self.complex.wall_violation(d).is_none());
        let mut report = FanReport {
            is_simplicial_complex: missing.is_none(),
            rays_primitive: bad_ray.is_none(),
            rays_distinct: duplicate.is_none(),
            rays_are_cones: orphan.is_none(),
            nonsingular: singular.is_none(),
            fan_property,
            overlap,
            pure_dim,
            wall_condition,
            complete: false,
            first_failure: failures.into_iter().next(),
        };
        report.complete = report.is_fan() && rational.complete_unchecked(self.ambient_rank);
        report
    }

    fn cone_generators(&self, s: &[usize]) -> Vec<ZVector> {
        s.iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// See [`RationalFan::is_complete`]; additionally requires the integral fan axioms.
    pub fn is_complete(&self, d: usize) -> Result<bool, PolyhedralError> {
        let report = self.validate();
        if !report.is_fan() {
            return Err(PolyhedralError::PrereqFailed(report.first_failure.unwrap_or_default()));
        }
        Ok(self.to_rational().complete_unchecked(d))
    }

    /// Block-diagonal join: rays of `other` are embedded after this fan's coordinates.
    pub fn join(&self, other: &Fan) -> Fan {
        let m = self.ambient_rank + other.ambient_rank;
        let mut rays = Vec::with_capacity(self.rays.len() + other.rays.len());
        for r in &self.rays {
            let mut v = r.clone();
            v.resize(m, Zero::zero());
            rays.push(v);
        }
        for r in &other.rays {
            let mut v = alloc::vec![Zero::zero(); self.ambient_rank];
            v.extend(r.iter().cloned());
            rays.push(v);
        }
        Fan { ambient_rank: m, rays, complex: self.complex.join(&other.complex, self.rays.len()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::cone::int_vec;
    use alloc::vec;

    fn p1() -> Fan {
        Fan::from_maximal(1, vec![int_vec(&[1]), int_vec(&[-1])], [vec![0], vec![1]]).unwrap()
    }

    fn calabi_eckmann_fan() -> Fan {
        let rays = (0..4).map(|i| (0..4).map(|j| if i == j { 1 } else { 0 }).collect::<Vec<i64>>());
        Fan::from_maximal(4, rays.map(|r| int_vec(&r)).collect(), [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
            .unwrap()
    }

    #[test]
    fn calabi_eckmann_fan_is_a_fan_but_not_complete() {
        let report = calabi_eckmann_fan().validate();
        assert!(report.is_fan(), "{report:?}");
        assert_eq!(report.pure_dim, Some(2));
        assert!(report.wall_condition);
        assert!(!report.complete);
        assert_eq!(calabi_eckmann_fan().is_complete(2), Ok(false));
    }

    #[test]
    fn overlap_is_reported_with_its_pair() {
        let fan = Fan::from_maximal(2, vec![int_vec(&[1, 0]), int_vec(&[0, 1]), int_vec(&[1, 1])], [vec![0, 1], vec![2]])
            .unwrap();
        let report = fan.validate();
        assert!(!report.fan_property);
        assert_eq!(report.overlap, Some((vec![0, 1], vec![2])));
        assert!(fan.is_complete(2).is_err());
    }

    #[test]
    fn origin_fan() {
        let report = Fan::origin(3).validate();
        assert!(report.is_fan());
        assert!(!report.complete);
        assert_eq!(Fan::origin(0).is_complete(0), Ok(true));
        assert_eq!(Fan::origin(2).is_complete(0), Ok(true));
        assert_eq!(Fan::origin(2).is_complete(2), Ok(false));
    }

    #[test]
    fn projective_line() {
        assert_eq!(p1().is_complete(1), Ok(true));
        let half = Fan::from_maximal(1, vec![int_vec(&[1])], [vec![0]]).unwrap();
        assert_eq!(half.is_complete(1), Ok(false));
        assert!(p1().validate().complete);
    }

    #[test]
    fn join_of_projective_lines_is_complete() {
        let sq = p1().join(&p1());
        assert_eq!(sq.rays().len(), 4);
        assert_eq!(sq.complex().faces_of_size(2).len(), 4);
        assert_eq!(sq.is_complete(2), Ok(true));
        assert_eq!(p1().join(&Fan::origin(2)).ambient_rank(), 3);
        assert_eq!(Fan::origin(1).join(&Fan::origin(2)), Fan::origin(3));
    }

    #[test]
    fn validation_failures() {
        let unclosed = Fan::new(2, vec![int_vec(&[1, 0]), int_vec(&[0, 1])], SimplicialComplex::new([vec![0, 1]])).unwrap();
        let r = unclosed.validate();
        assert!(!r.is_simplicial_complex);
        assert!(!r.rays_are_cones);

        let fat = Fan::from_maximal(1, vec![int_vec(&[2])], [vec![0]]).unwrap();
        let r = fat.validate();
        assert!(!r.rays_primitive);
        assert!(!r.nonsingular);

        let singular = Fan::from_maximal(2, vec![int_vec(&[1, 0]), int_vec(&[1, 2])], [vec![0, 1]]).unwrap();
        assert!(!singular.validate().nonsingular);

        let twice = Fan::from_maximal(1, vec![int_vec(&[1]), int_vec(&[1])], [vec![0], vec![1]]).unwrap();
        let r = twice.validate();
        assert!(!r.rays_distinct);
        assert!(!r.fan_property);
    }

    #[test]
    fn shape_errors() {
        assert!(Fan::new(2, vec![int_vec(&[1])], SimplicialComplex::empty()).is_err());
        assert!(Fan::from_maximal(1, vec![int_vec(&[1])], [vec![1]]).is_err());
    }

    #[test]
    fn locate_in_quadrants() {
        let sq = p1().join(&p1()).to_rational();
        let q = |a: i64, b: i64| vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())];
        assert_eq!(sq.locate(&q(0, 0)), Some(vec![]));
        assert_eq!(sq.locate(&q(3, -1)), Some(vec![0, 3]));
        assert_eq!(sq.locate(&q(0, 5)), Some(vec![2]));
    }

    #[test]
    fn cone_access() {
        let sq = p1().join(&p1());
        let c = sq.cone(&[2, 0]).unwrap();
        assert_eq!(c.indices(), &[0, 2]);
        assert!(c.is_unimodular());
        assert!(sq.cone(&[0, 1]).is_err());
    }
}
