//! Randomised and brute-force cross-checks for the exact fan algorithms.
//!
//! These are slow, independent routes to the same answers as
//! [`RationalFan::is_complete`] and the separating-functional test. All
//! randomness is seeded.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{QVector, Rational, RationalMatrix};
use crate::polyhedral::complex::{intersection, subsets};
use crate::polyhedral::{RationalFan, Simplex};

const COORD_RANGE: i64 = 1000;

/// Samples `samples` random directions and checks that each lies in some cone.
///
/// When `d` is the ambient dimension the directions are drawn from all of
/// `ℚ^dim`. Otherwise they are drawn from the span of the rays, and fans whose
/// rays span a space of dimension other than `d` are reported incomplete.
pub fn complete_by_sampling(fan: &RationalFan, d: usize, samples: usize, seed: u64) -> bool {
    let basis = if d == fan.dim() {
        (0..d)
            .map(|i| (0..d).map(|j| Rational::from_integer(i64::from(i == j).into())).collect())
            .collect()
    } else {
        let basis = RationalMatrix::from_rows(fan.dim(), fan.rays()).row_space_basis();
        if basis.len() != d {
            return false;
        }
        basis
    };
    if d == 0 {
        return fan.complex().is_empty();
    }
    let maximal = fan.complex().maximal_faces();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-COORD_RANGE..=COORD_RANGE)).collect();
        let x = combine(fan.dim(), &basis, &coeffs);
        maximal.iter().any(|s| fan.cone_membership(s, &x).is_inside())
    })
}

fn combine(dim: usize, vectors: &[QVector], coeffs: &[i64]) -> QVector {
    let mut x = alloc::vec![Rational::zero(); dim];
    for (v, &c) in vectors.iter().zip(coeffs) {
        let c = Rational::from_integer(c.into());
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += &c * vi;
        }
    }
    x
}

/// A point of `C_I ∩ C_J` outside `C_{I∩J}`, if one is found.
///
/// Random nonnegative combinations of each cone's generators are tested
/// against the other cone; then every 1-dimensional intersection of a face
/// span of `C_I` with a face span of `C_J` is examined. Since `C_I ∩ C_J` is a
/// pointed cone generated by such lines, the second pass is exhaustive.
/// Cones must have linearly independent generators.
pub fn overlap_witness(fan: &RationalFan, i: &[usize], j: &[usize], samples: usize, seed: u64) -> Option<QVector> {
    let shared = intersection(i, j);
    let escapes = |x: &QVector| {
        x.iter().any(|c| !c.is_zero())
            && fan.cone_membership(i, x).is_inside()
            && fan.cone_membership(j, x).is_inside()
            && !fan.cone_membership(&shared, x).is_inside()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        for cone in [i, j] {
            let coeffs: Vec<i64> = cone.iter().map(|_| rng.gen_range(0..=COORD_RANGE)).collect();
            let x = combine(fan.dim(), &fan.generators(cone), &coeffs);
            if escapes(&x) {
                return Some(x);
            }
        }
    }
    for a in subsets(i) {
        for b in subsets(j) {
            if let Some(x) = line_of_intersection(fan, &a, &b) {
                if escapes(&x) {
                    return Some(x);
                }
            }
        }
    }
    None
}

/// When `span(A) ∩ span(B)` is a line, a spanning vector with nonnegative
/// coordinates on both sides (up to sign), or `None`.
fn line_of_intersection(fan: &RationalFan, a: &[usize], b: &[usize]) -> Option<QVector> {
    let dim = fan.dim();
    let mut cols = fan.generators(a);
    cols.extend(fan.generators(b).into_iter().map(|v| v.into_iter().map(|x| -x).collect()));
    if cols.is_empty() {
        return None;
    }
    let kernel = crate::exact::Matrix::from_cols(dim, &cols).kernel_basis();
    if kernel.len() != 1 {
        return None;
    }
    let k = &kernel[0];
    let sign_ok = |positive: bool| k.iter().all(|c| if positive { !c.is_negative() } else { !c.is_positive() });
    let coeffs: QVector = if sign_ok(true) {
        k.clone()
    } else if sign_ok(false) {
        k.iter().map(|c| -c).collect()
    } else {
        return None;
    };
    Some(combine_rational(dim, &fan.generators(a), &coeffs[..a.len()]))
}

fn combine_rational(dim: usize, vectors: &[QVector], coeffs: &[Rational]) -> QVector {
    let mut x = alloc::vec![Rational::zero(); dim];
    for (v, c) in vectors.iter().zip(coeffs) {
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += c * vi;
        }
    }
    x
}

/// First pair of maximal cones (lexicographic order) with an overlap witness.
pub fn fan_overlap_by_oracle(fan: &RationalFan, samples: usize, seed: u64) -> Option<(Simplex, Simplex, QVector)> {
    let maximal = fan.complex().maximal_faces();
    for (n, a) in maximal.iter().enumerate() {
        for b in &maximal[n + 1..] {
            if let Some(x) = overlap_witness(fan, a, b, samples, seed) {
                return Some((a.clone(), b.clone(), x));
            }
        }
    }
    None
}
