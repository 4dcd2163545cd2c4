//! Triples `(Δ, 𝔥, G)`: validation, the quotient fan, orbit strata, HERT
//! invariants, the Kähler obstruction and the bundle decomposition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exact::lattice::{saturation_split, unimodular_inverse};
use crate::exact::matrix::vectors_rank;
use crate::exact::{
    real_projection_basis, to_gvector, to_qvector, GVector, GaussianRational, IntMatrix, QVector, Rational,
    RationalMatrix, ZVector,
};
use crate::polyhedral::{show, Fan, FanReport, PolyhedralError, RationalFan, Simplex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("malformed triple: {0}")]
    Shape(String),
    #[error("h basis is linearly dependent")]
    DependentBasis,
    #[error("h has dimension {h} but the torus rank is only {m}")]
    TooLarge { h: usize, m: usize },
    #[error("p restricted to h is not injective")]
    Condition1Failed,
    #[error("{0} is not an orbit stratum")]
    InvalidStratum(String),
    #[error("Kähler obstruction: dim f = {dim_f} but 2n - m = {required}")]
    ObstructionFails { dim_f: usize, required: usize },
    #[error(transparent)]
    Polyhedral(#[from] PolyhedralError),
}

/// A nonsingular fan `Δ` in `ℝ^m` together with a basis of `𝔥 ⊂ ℂ^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    fan: Fan,
    h_basis: Vec<GVector>,
}

impl Triple {
    /// Checks vector lengths, linear independence of the basis and `2n ≥ m`.
    /// Fan axioms and the quotient conditions are left to [`Triple::validate`].
    pub fn new(fan: Fan, h_basis: Vec<GVector>) -> Result<Self, TripleError> {
        let m = fan.ambient_rank();
        if let Some(i) = h_basis.iter().position(|w| w.len() != m) {
            return Err(TripleError::Shape(format!("h basis vector {} does not have length {m}", i + 1)));
        }
        if vectors_rank(m, &h_basis) < h_basis.len() {
            return Err(TripleError::DependentBasis);
        }
        if 2 * h_basis.len() > m {
            return Err(TripleError::TooLarge { h: h_basis.len(), m });
        }
        Ok(Triple { fan, h_basis })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn h_basis(&self) -> &[GVector] {
        &self.h_basis
    }

    pub fn torus_rank(&self) -> usize {
        self.fan.ambient_rank()
    }

    /// `n = m - dim 𝔥`.
    pub fn complex_dim(&self) -> usize {
        self.torus_rank() - self.h_basis.len()
    }

    /// `2n - m`, the dimension of maximal cones and of the quotient.
    pub fn quotient_dim(&self) -> usize {
        self.torus_rank() - 2 * self.h_basis.len()
    }

    pub fn real_projection_basis(&self) -> Vec<QVector> {
        real_projection_basis(self.torus_rank(), &self.h_basis)
    }

    pub fn condition_1(&self) -> bool {
        self.real_projection_basis().len() == 2 * self.h_basis.len()
    }

    pub fn quotient_fan(&self) -> Result<QuotientFan, TripleError> {
        let m = self.torus_rank();
        let basis = self.real_projection_basis();
        if basis.len() != 2 * self.h_basis.len() {
            return Err(TripleError::Condition1Failed);
        }
        let echelon = RationalMatrix::from_rows(m, &basis).rref();
        // row for each free column j: e_j - Σ_p r_p[j] e_p kills every basis row r_p
        let mut rows = Vec::new();
        for j in (0..m).filter(|j| !echelon.pivots.contains(j)) {
            let mut row = alloc::vec![Rational::zero(); m];
            row[j] = Rational::from_integer(1.into());
            for (r, &p) in echelon.pivots.iter().enumerate() {
                row[p] = -echelon.reduced[(r, j)].clone();
            }
            rows.push(row);
        }
        let projection = RationalMatrix::from_rows(m, &rows);
        let rays = self.fan.rays().iter().map(|r| projection.mul_vec(&to_qvector(r))).collect();
        let fan = RationalFan::new(rows.len(), rays, self.fan.complex().clone())?;
        Ok(QuotientFan { quotient_dim: rows.len(), projection, fan })
    }

    pub fn validate(&self) -> ValidationReport {
        let fan_report = self.fan.validate();
        let d = self.quotient_dim();
        let mut verdicts = Vec::new();
        let mut warnings = Vec::new();

        verdicts.push(Verdict::new(FAN, fan_report.is_fan(), fan_report.first_failure.clone()));
        let projection_dim = self.real_projection_basis().len();
        let c1 = projection_dim == 2 * self.h_basis.len();
        let c1_witness = (!c1).then(|| format!("dim p(h) = {projection_dim}, expected {}", 2 * self.h_basis.len()));
        verdicts.push(Verdict::new(CONDITION_1, c1, c1_witness));

        let quotient = if c1 && fan_report.is_simplicial_complex { self.quotient_fan().ok() } else { None };
        match &quotient {
            None => {
                let reason = if c1 { "fan is not a simplicial complex" } else { "condition_1 fails" };
                for name in [CONE_INDEPENDENCE, CONE_INJECTIVITY, QUOTIENT_FAN_PROPERTY, QUOTIENT_COMPLETE] {
                    verdicts.push(Verdict::new(name, false, Some(format!("not evaluated: {reason}"))));
                }
            }
            Some(q) => {
                let dependent = q.fan.dependent_cone();
                let independent = dependent.is_none();
                verdicts.push(Verdict::new(
                    CONE_INDEPENDENCE,
                    independent,
                    dependent.map(|s| format!("images of the rays of {} are dependent", show(&s))),
                ));

                for (a, b) in q.ray_collisions() {
                    warnings.push(format!("rays {} and {} have the same image direction", a + 1, b + 1));
                }
                let collision = q.cone_collision();
                verdicts.push(Verdict::new(
                    CONE_INJECTIVITY,
                    collision.is_none(),
                    collision.map(|(a, b)| format!("cones {} and {} have the same image", show(&a), show(&b))),
                ));

                let overlap = if independent { q.fan.overlapping_pair() } else { None };
                let fan_property = independent && overlap.is_none();
                let witness = match overlap {
                    Some((a, b)) => Some(format!("image cones {} and {} overlap", show(&a), show(&b))),
                    None if !independent => Some("not evaluated: dependent image cone".to_string()),
                    None => None,
                };
                verdicts.push(Verdict::new(QUOTIENT_FAN_PROPERTY, fan_property, witness));

                let complete = fan_property && q.fan.complete_unchecked(d);
                let witness = (!complete).then(|| format!("q(Δ) is not a complete fan in dimension {d}"));
                verdicts.push(Verdict::new(QUOTIENT_COMPLETE, complete, witness));
            }
        }
        ValidationReport { verdicts, warnings, fan: fan_report, quotient_dim: d }
    }

    /// The stratum `I` with `v ∈ C_I⁰`, or `None` when `v ∉ |Δ|`.
    pub fn orbit_limit(&self, v: &[Rational]) -> Option<Simplex> {
        assert_eq!(v.len(), self.torus_rank(), "direction must have the torus rank as length");
        self.fan.to_rational().locate(v)
    }

    pub fn hert(&self, stratum: &[usize]) -> Result<Hert, TripleError> {
        let d = self.quotient_dim();
        if !self.fan.complex().contains(stratum) || stratum.len() > d {
            return Err(TripleError::InvalidStratum(show(stratum)));
        }
        let e = stratum.len();
        Ok(Hert { h: 0, e, r: d - e, t: self.torus_rank() - e })
    }

    /// Simplices of size `2n - m`, the minimal orbits.
    pub fn minimal_orbits(&self) -> Vec<Simplex> {
        self.fan.complex().faces_of_size(self.quotient_dim())
    }

    pub fn kaehler_obstruction(&self) -> KaehlerReport {
        let dim_f = self.fan.ray_rank();
        let required = self.quotient_dim();
        KaehlerReport { passes: dim_f == required, dim_f, required }
    }

    pub fn product_decomposition(&self) -> Result<Decomposition, TripleError> {
        let k = self.kaehler_obstruction();
        if !k.passes {
            return Err(TripleError::ObstructionFails { dim_f: k.dim_f, required: k.required });
        }
        let m = self.torus_rank();
        let (splitting, r) = saturation_split(m, self.fan.rays());
        let inverse = unimodular_inverse(&splitting).expect("splitting matrix is unimodular");
        let fiber_rays: Vec<ZVector> = self
            .fan
            .rays()
            .iter()
            .map(|ray| {
                let coords = inverse.mul_vec(ray);
                debug_assert!(coords[r..].iter().all(Zero::is_zero));
                coords[..r].to_vec()
            })
            .collect();
        let fiber_fan = Fan::new(r, fiber_rays, self.fan.complex().clone())?;
        let inverse_c = inverse.map(|x| GaussianRational::from(x.clone()));
        let base_h_basis = self.h_basis.iter().map(|w| inverse_c.mul_vec(w)[r..].to_vec()).collect();
        Ok(Decomposition { fiber_fan, base_rank: m - r, base_h_basis, splitting })
    }
}

const FAN: &str = "fan";
const CONDITION_1: &str = "condition_1";
const CONE_INDEPENDENCE: &str = "cone_independence";
const CONE_INJECTIVITY: &str = "cone_injectivity";
const QUOTIENT_FAN_PROPERTY: &str = "quotient_fan_property";
const QUOTIENT_COMPLETE: &str = "quotient_complete";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub condition: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    fn new(condition: &'static str, holds: bool, witness: Option<String>) -> Self {
        Verdict { condition, holds, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// In order: `fan`, `condition_1`, `cone_independence`, `cone_injectivity`,
    /// `quotient_fan_property`, `quotient_complete`.
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<String>,
    pub fan: FanReport,
    pub quotient_dim: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, condition: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.condition == condition)
    }

    pub fn holds(&self, condition: &str) -> bool {
        self.verdict(condition).is_some_and(|v| v.holds)
    }

    pub fn condition_1(&self) -> bool {
        self.holds(CONDITION_1)
    }

    /// All conditions on `q(Δ)`.
    pub fn condition_2(&self) -> bool {
        [CONE_INDEPENDENCE, CONE_INJECTIVITY, QUOTIENT_FAN_PROPERTY, QUOTIENT_COMPLETE]
            .iter()
            .all(|c| self.holds(c))
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.holds)
    }
}

/// `q(Δ)` in the coordinates of the echelon complement of `p(𝔥)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFan {
    pub quotient_dim: usize,
    pub projection: RationalMatrix,
    pub fan: RationalFan,
}

impl QuotientFan {
    fn directions(&self) -> Vec<QVector> {
        self.fan.rays().iter().map(|r| direction(r)).collect()
    }

    /// Pairs of rays whose images are positive multiples of each other.
    pub fn ray_collisions(&self) -> Vec<(usize, usize)> {
        let dirs = self.directions();
        let mut out = Vec::new();
        for a in 0..dirs.len() {
            for b in a + 1..dirs.len() {
                if dirs[a] == dirs[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Two distinct simplices with the same image cone.
    pub fn cone_collision(&self) -> Option<(Simplex, Simplex)> {
        let dirs = self.directions();
        let mut seen: BTreeMap<Vec<QVector>, Simplex> = BTreeMap::new();
        for s in self.fan.complex().faces() {
            let mut key: Vec<QVector> = s.iter().map(|&i| dirs[i].clone()).collect();
            key.sort();
            key.dedup();
            if let Some(prev) = seen.get(&key) {
                return Some((prev.clone(), s.clone()));
            }
            seen.insert(key, s.clone());
        }
        None
    }
}

/// Scales so the first nonzero entry is `±1`.
fn direction(v: &[Rational]) -> QVector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.abs();
            v.iter().map(|x| x / &lead).collect()
        }
        None => v.to_vec(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hert {
    pub h: usize,
    pub e: usize,
    pub r: usize,
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KaehlerReport {
    pub passes: bool,
    pub dim_f: usize,
    pub required: usize,
}

/// `Δ` split along `𝔣 = span(rays)` and a complementary sublattice `𝔢`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `Δ` in the Hermite basis of `𝔣 ∩ ℤ^m`.
    pub fiber_fan: Fan,
    pub base_rank: usize,
    /// `p_{𝔢^ℂ}(𝔥)` in the complement coordinates.
    pub base_h_basis: Vec<GVector>,
    /// Unimodular; its first `dim 𝔣` columns span `𝔣 ∩ ℤ^m`, the rest span `𝔢`.
    pub splitting: IntMatrix,
}

impl Decomposition {
    /// The join of the fiber fan with the origin fan of the base, mapped back
    /// to `ℤ^m` through the splitting.
    pub fn recombine(&self) -> Fan {
        let joined = self.fiber_fan.join(&Fan::origin(self.base_rank));
        let rays = joined.rays().iter().map(|r| self.splitting.mul_vec(r)).collect();
        Fan::new(joined.ambient_rank(), rays, joined.complex().clone()).expect("shape preserved")
    }

    /// `p_{𝔢^ℂ}(𝔥)` embedded back into `ℂ^m`.
    pub fn base_h_embedded(&self) -> Vec<GVector> {
        let r = self.fiber_fan.ambient_rank();
        let split = self.splitting.map(|x| GaussianRational::from(x.clone()));
        self.base_h_basis
            .iter()
            .map(|w| {
                let mut full = to_gvector(&alloc::vec![Rational::zero(); r]);
                full.extend(w.iter().cloned());
                split.mul_vec(&full)
            })
            .collect()
    }
}
