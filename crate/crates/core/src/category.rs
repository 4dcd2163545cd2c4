//! Morphisms between triples: validation, composition, isomorphisms and the
//! principal-bundle criterion.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::lattice::{determinant, is_primitive, snf};
use crate::exact::matrix::vectors_rank;
use crate::exact::{to_qvector, GVector, GaussianRational, IntMatrix, ZVector};
use crate::polyhedral::{show, Simplex};
use crate::triple::Triple;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CategoryError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// An integral `m₂ × m₁` matrix `A = (dα)₁` between two triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Triple,
    target: Triple,
    matrix: IntMatrix,
}

impl Morphism {
    pub fn new(source: Triple, target: Triple, matrix: IntMatrix) -> Result<Self, CategoryError> {
        let (rows, cols) = (target.torus_rank(), source.torus_rank());
        if matrix.rows() != rows || matrix.cols() != cols {
            return Err(CategoryError::ShapeMismatch(format!(
                "matrix is {}x{}, expected {rows}x{cols}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn identity(t: Triple) -> Self {
        let matrix = IntMatrix::identity(t.torus_rank());
        Morphism { source: t.clone(), target: t, matrix }
    }

    pub fn source(&self) -> &Triple {
        &self.source
    }

    pub fn target(&self) -> &Triple {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    fn ray_images(&self) -> Vec<ZVector> {
        self.source.fan().rays().iter().map(|r| self.matrix.mul_vec(r)).collect()
    }

    fn complexified(&self) -> crate::exact::GaussMatrix {
        self.matrix.map(|x| GaussianRational::from(x.clone()))
    }

    /// `A^ℂ` applied to the basis of `𝔥₁`.
    pub fn h_images(&self) -> Vec<GVector> {
        let a = self.complexified();
        self.source.h_basis().iter().map(|w| a.mul_vec(w)).collect()
    }

    /// Cone containment for every maximal cone of `Δ₁`, and `A^ℂ 𝔥₁ ⊆ 𝔥₂`.
    pub fn validate(&self) -> MorphismReport {
        let images = self.ray_images();
        let target = self.target.fan();
        let target_rational = target.to_rational();
        let mut candidates: Vec<Simplex> = target.complex().faces().cloned().collect();
        candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        let mut cone_witness = None;
        for cone in self.source.fan().complex().maximal_faces() {
            let pts: Vec<_> = cone.iter().map(|&i| to_qvector(&images[i])).collect();
            let contained = candidates
                .iter()
                .any(|j| pts.iter().all(|p| target_rational.cone_membership(j, p).is_inside()));
            if !contained {
                cone_witness = Some(format!("image of cone {} lies in no cone of the target", show(&cone)));
                break;
            }
        }

        let target_h = self.target.h_basis();
        let m2 = self.target.torus_rank();
        let base_rank = vectors_rank(m2, target_h);
        let mut h_witness = None;
        for (i, image) in self.h_images().into_iter().enumerate() {
            let mut span = target_h.to_vec();
            span.push(image);
            if vectors_rank(m2, &span) > base_rank {
                h_witness = Some(format!("image of h basis vector {} is not in the target h", i + 1));
                break;
            }
        }
        MorphismReport {
            fan_morphism: cone_witness.is_none(),
            fan_witness: cone_witness,
            h_contained: h_witness.is_none(),
            h_witness,
        }
    }

    /// `|det A| = 1`, a ray bijection carrying `Σ₁` onto `Σ₂`, and `A^ℂ 𝔥₁ = 𝔥₂`.
    pub fn is_isomorphism(&self) -> bool {
        let m = self.source.torus_rank();
        if m != self.target.torus_rank() || !determinant(&self.matrix).magnitude().is_one() {
            return false;
        }
        let Some(map) = self.ray_map() else { return false };
        let target_rays = self.target.fan().rays().len();
        if map.len() != target_rays {
            return false;
        }
        let relabeled = self.source.fan().complex().relabel(|v| map[v]);
        if &relabeled != self.target.fan().complex() {
            return false;
        }
        self.validate().h_contained && self.source.h_basis().len() == self.target.h_basis().len()
    }

    /// Index of the target ray equal to each image, if every image is a target
    /// ray and the assignment is injective.
    fn ray_map(&self) -> Option<Vec<usize>> {
        let index: BTreeMap<&ZVector, usize> =
            self.target.fan().rays().iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut map = Vec::new();
        for image in self.ray_images() {
            let &j = index.get(&image)?;
            if map.contains(&j) {
                return None;
            }
            map.push(j);
        }
        Some(map)
    }

    pub fn principal_bundle_check(&self) -> PrincipalResult {
        let images = self.ray_images();
        let target_rays = self.target.fan().rays();
        let images_primitive = images.iter().all(|v| is_primitive(v));
        let rays_bijective = self.ray_map().is_some_and(|map| map.len() == target_rays.len());
        let smith = snf(&self.matrix);
        let rank = smith.rank();
        let surjective = rank == self.target.torus_rank();
        let kernel_component_divisors = smith.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        PrincipalResult {
            is_principal: images_primitive && rays_bijective && surjective,
            kernel_dim: self.source.torus_rank() - rank,
            kernel_component_divisors,
            rays_bijective,
            images_primitive,
            surjective,
        }
    }
}

/// `g ∘ f`; requires `g.source = f.target`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism, CategoryError> {
    if g.source != f.target {
        return Err(CategoryError::ShapeMismatch("source of the second morphism is not the target of the first".into()));
    }
    Ok(Morphism { source: f.source.clone(), target: g.target.clone(), matrix: g.matrix.mul(&f.matrix) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub fan_morphism: bool,
    pub fan_witness: Option<String>,
    pub h_contained: bool,
    pub h_witness: Option<String>,
}

impl MorphismReport {
    pub fn is_valid(&self) -> bool {
        self.fan_morphism && self.h_contained
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalResult {
    pub is_principal: bool,
    pub kernel_dim: usize,
    /// Invariant factors of `A` greater than one.
    pub kernel_component_divisors: Vec<BigInt>,
    pub rays_bijective: bool,
    pub images_primitive: bool,
    pub surjective: bool,
}
