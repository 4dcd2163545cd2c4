//! Simplicial cones `pos(v₁, …, v_r)` with linearly independent generators.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::complex::{difference, intersection, Simplex};
use super::fourier_motzkin::{find_point, Inequality};
use super::PolyhedralError;
use crate::exact::{lattice, to_qvector, IntMatrix, Matrix, QVector, Rational, RationalMatrix, ZVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `x = Σ aᵢ vᵢ` with all `aᵢ ≥ 0`; `relative_interior` when all `aᵢ > 0`.
    Inside { coefficients: QVector, relative_interior: bool },
    Outside,
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }

    /// Positions of the strictly positive coefficients.
    pub fn support(&self) -> Option<Vec<usize>> {
        match self {
            Membership::Inside { coefficients, .. } => {
                Some(coefficients.iter().enumerate().filter(|(_, a)| a.is_positive()).map(|(i, _)| i).collect())
            }
            Membership::Outside => None,
        }
    }
}

/// Membership of `x ∈ ℚ^dim` in the cone spanned by independent `generators`.
pub fn membership(dim: usize, generators: &[QVector], x: &[Rational]) -> Membership {
    assert_eq!(x.len(), dim, "point has wrong dimension");
    let m = Matrix::from_cols(dim, generators);
    match m.solve(x) {
        Ok(sol) => {
            debug_assert!(sol.unique, "cone generators must be linearly independent");
            if sol.x.iter().any(Signed::is_negative) {
                Membership::Outside
            } else {
                let relative_interior = sol.x.iter().all(Signed::is_positive);
                Membership::Inside { coefficients: sol.x, relative_interior }
            }
        }
        Err(_) => Membership::Outside,
    }
}

/// Whether integer generators extend to a ℤ-basis: every invariant factor of the
/// generator matrix equals one (and there is one per generator).
pub fn is_unimodular(dim: usize, generators: &[ZVector]) -> bool {
    if generators.is_empty() {
        return true;
    }
    let smith = lattice::snf(&Matrix::from_cols(dim, generators));
    let factors = smith.invariant_factors();
    factors.len() == generators.len() && factors.iter().all(One::is_one)
}

/// Dual functionals `αᵢ` with `⟨αᵢ, vⱼ⟩ = δᵢⱼ`, extended to `ℚ^dim` by vanishing
/// on the standard basis vectors of the non-pivot columns of the generators' echelon form.
pub fn dual_basis(dim: usize, generators: &[ZVector]) -> Result<Vec<QVector>, PolyhedralError> {
    if !is_unimodular(dim, generators) {
        return Err(PolyhedralError::NotUnimodular);
    }
    let rows: Vec<QVector> = generators.iter().map(|g| to_qvector(g)).collect();
    let echelon = RationalMatrix::from_rows(dim, &rows).rref();
    let mut cols = rows.clone();
    for j in (0..dim).filter(|j| !echelon.pivots.contains(j)) {
        let mut e = alloc::vec![Rational::zero(); dim];
        e[j] = Rational::one();
        cols.push(e);
    }
    let basis = Matrix::from_cols(dim, &cols);
    let inverse = basis.inverse().expect("generators plus echelon complement form a basis");
    Ok((0..generators.len()).map(|i| inverse.row(i).to_vec()).collect())
}

/// Looks for `ξ` with `⟨ξ, rᵢ⟩ = 0` on `I ∩ J`, `> 0` on `I ∖ J`, `< 0` on `J ∖ I`.
///
/// Strict inequalities are homogenized to `≥ 1` and `≤ -1` (the solution set
/// is a cone) and the system is solved exactly on the null space of the shared
/// rays. Existence certifies `C_I ∩ C_J = C_{I∩J}`.
pub fn separating_functional(dim: usize, rays: &[QVector], i: &[usize], j: &[usize]) -> Option<QVector> {
    let shared = intersection(i, j);
    let only_i = difference(i, j);
    let only_j = difference(j, i);
    if only_i.is_empty() && only_j.is_empty() {
        return Some(alloc::vec![Rational::zero(); dim]);
    }
    let shared_rows: Vec<QVector> = shared.iter().map(|&s| rays[s].clone()).collect();
    // ξ = Σ y_t n_t over a basis n_t of the annihilator of the shared rays
    let null = RationalMatrix::from_rows(dim, &shared_rows).kernel_basis();
    let restrict = |ray: &QVector| -> QVector { null.iter().map(|n| dot(n, ray)).collect() };
    let mut system = Vec::with_capacity(only_i.len() + only_j.len());
    for &a in &only_i {
        system.push(Inequality::new(restrict(&rays[a]), Rational::one()));
    }
    for &b in &only_j {
        let coeffs = restrict(&rays[b]).into_iter().map(|c| -c).collect();
        system.push(Inequality::new(coeffs, Rational::one()));
    }
    let y = find_point(null.len(), &system)?;
    let mut xi = alloc::vec![Rational::zero(); dim];
    for (coef, n) in y.iter().zip(&null) {
        for (x, v) in xi.iter_mut().zip(n) {
            *x += coef * v;
        }
    }
    Some(xi)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// A cone `C_I` of an integral fan.
#[derive(Clone, Debug)]
pub struct Cone<'a> {
    pub(super) dim: usize,
    pub(super) rays: &'a [ZVector],
    pub(super) indices: Simplex,
}

impl<'a> Cone<'a> {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn generators(&self) -> Vec<ZVector> {
        self.indices.iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// Generators as columns of a `dim × |I|` integer matrix.
    pub fn ray_matrix(&self) -> IntMatrix {
        Matrix::from_cols(self.dim, &self.generators())
    }

    /// Coefficients are listed in the order of [`Cone::indices`].
    pub fn membership(&self, x: &[Rational]) -> Membership {
        let gens: Vec<QVector> = self.indices.iter().map(|&i| to_qvector(&self.rays[i])).collect();
        membership(self.dim, &gens, x)
    }

    pub fn is_unimodular(&self) -> bool {
        is_unimodular(self.dim, &self.generators())
    }

    pub fn dual_basis(&self) -> Result<Vec<QVector>, PolyhedralError> {
        dual_basis(self.dim, &self.generators())
    }
}

pub fn int_vec(xs: &[i64]) -> ZVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rational};
    use alloc::vec;

    fn qv(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn membership_examples() {
        let gens = [qv(&[1, 0]), qv(&[0, 1])];
        assert_eq!(
            membership(2, &gens, &qv(&[2, 3])),
            Membership::Inside { coefficients: qv(&[2, 3]), relative_interior: true }
        );
        let gens = [qv(&[1, 0]), qv(&[1, 2])];
        assert_eq!(
            membership(2, &gens, &qv(&[1, 1])),
            Membership::Inside { coefficients: vec![rational(1, 2), rational(1, 2)], relative_interior: true }
        );
        assert_eq!(membership(2, &[qv(&[1, 0])], &qv(&[-1, 0])), Membership::Outside);
        assert_eq!(membership(2, &[qv(&[1, 0])], &qv(&[1, 1])), Membership::Outside);
        let boundary = membership(2, &gens, &qv(&[2, 0]));
        assert_eq!(boundary.support(), Some(vec![0]));
    }

    #[test]
    fn membership_in_the_zero_cone() {
        assert_eq!(
            membership(2, &[], &qv(&[0, 0])),
            Membership::Inside { coefficients: vec![], relative_interior: true }
        );
        assert_eq!(membership(2, &[], &qv(&[0, 1])), Membership::Outside);
    }

    #[test]
    fn unimodularity() {
        assert!(is_unimodular(2, &[int_vec(&[1, 0]), int_vec(&[1, 1])]));
        assert!(!is_unimodular(2, &[int_vec(&[1, 0]), int_vec(&[1, 2])]));
        assert!(!is_unimodular(1, &[int_vec(&[2])]));
        assert!(!is_unimodular(2, &[int_vec(&[1, 0]), int_vec(&[2, 0])]));
        assert!(is_unimodular(3, &[int_vec(&[1, 1, 0])]));
    }

    #[test]
    fn dual_basis_examples() {
        assert_eq!(dual_basis(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])]).unwrap(), vec![qv(&[1, 0]), qv(&[0, 1])]);
        assert_eq!(dual_basis(2, &[int_vec(&[1, 0]), int_vec(&[1, 1])]).unwrap(), vec![qv(&[1, -1]), qv(&[0, 1])]);
        assert_eq!(dual_basis(2, &[int_vec(&[1, 0]), int_vec(&[1, 2])]), Err(PolyhedralError::NotUnimodular));
        // extended by zero on the echelon complement e₃
        assert_eq!(dual_basis(3, &[int_vec(&[1, 1, 0])]).unwrap(), vec![qv(&[1, 0, 0])]);
    }

    #[test]
    fn separation_examples() {
        let rays = [qv(&[1, 0]), qv(&[0, 1]), qv(&[1, 1])];
        assert_eq!(separating_functional(2, &rays, &[0], &[1]), Some(qv(&[1, -1])));
        assert_eq!(separating_functional(2, &rays, &[0, 1], &[0, 1]), Some(qv(&[0, 0])));
        assert_eq!(separating_functional(2, &rays, &[0, 1], &[2]), None);
        // shared ray, opposite sides
        let rays = [qv(&[1, 0]), qv(&[0, 1]), qv(&[0, -1])];
        let xi = separating_functional(2, &rays, &[0, 1], &[0, 2]).unwrap();
        assert!(dot(&xi, &rays[0]).is_zero());
        assert!(dot(&xi, &rays[1]).is_positive());
        assert!(dot(&xi, &rays[2]).is_negative());
    }
}
