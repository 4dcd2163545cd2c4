//! Exact arithmetic: rational and Gaussian-rational linear algebra, integer
//! lattice normal forms.

pub mod lattice;
pub mod matrix;
pub mod scalar;

use alloc::vec::Vec;

use num_bigint::BigInt;

pub use lattice::{hnf, snf, HermiteForm, SmithForm};
pub use matrix::{GaussMatrix, IntMatrix, Matrix, NoSolution, RationalMatrix, Solution};
pub use scalar::{Field, GaussianRational, Rational};

pub type QVector = Vec<Rational>;
pub type ZVector = Vec<BigInt>;
pub type GVector = Vec<GaussianRational>;

pub fn to_qvector(v: &[BigInt]) -> QVector {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub fn to_gvector(v: &[Rational]) -> GVector {
    v.iter().map(|x| GaussianRational::from_real(x.clone())).collect()
}

pub fn real_part(w: &[GaussianRational]) -> QVector {
    w.iter().map(|z| z.re.clone()).collect()
}

pub fn imag_part(w: &[GaussianRational]) -> QVector {
    w.iter().map(|z| z.im.clone()).collect()
}

/// Basis of `p(𝔥)`, where `p` takes real parts and `𝔥` is the complex span of `h_basis`.
///
/// The real span of `𝔥` is spanned by `{w, i·w}`, so `p(𝔥)` is spanned by
/// `Re(w)` and `Re(i·w) = -Im(w)`. The result is the canonical echelon basis.
pub fn real_projection_basis(dim: usize, h_basis: &[GVector]) -> Vec<QVector> {
    let mut spanning = Vec::with_capacity(2 * h_basis.len());
    for w in h_basis {
        assert_eq!(w.len(), dim, "h basis vectors must have the torus rank as length");
        spanning.push(real_part(w));
        spanning.push(w.iter().map(|z| z.mul_i().re).collect());
    }
    RationalMatrix::from_rows(dim, &spanning).row_space_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use scalar::int;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn projection_of_empty_subspace() {
        assert!(real_projection_basis(3, &[]).is_empty());
    }

    #[test]
    fn projection_of_calabi_eckmann_line() {
        let w = vec![g(1, 0), g(1, 0), g(0, 1), g(0, 1)];
        let basis = real_projection_basis(4, &[w]);
        assert_eq!(
            basis,
            vec![vec![int(1), int(1), int(0), int(0)], vec![int(0), int(0), int(1), int(1)]]
        );
    }

    #[test]
    fn projection_fills_the_plane() {
        let w = vec![g(0, 1), g(-1, 0)];
        assert_eq!(real_projection_basis(2, &[w]).len(), 2);
    }

    #[test]
    fn projection_of_real_line_collapses() {
        let w = vec![g(1, 0); 4];
        assert_eq!(real_projection_basis(4, &[w]).len(), 1);
    }
}
