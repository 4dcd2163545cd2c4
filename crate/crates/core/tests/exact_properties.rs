use maxtorus::exact::lattice::{determinant, is_unimodular_matrix};
use maxtorus::exact::matrix::to_rational;
use maxtorus::exact::{hnf, real_projection_basis, snf, GaussMatrix, GVector, GaussianRational, IntMatrix, Matrix, Rational, RationalMatrix};
use maxtorus::polyhedral::complex::subsets;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |xs| Matrix::new(r, c, xs.into_iter().map(BigInt::from).collect()))
    })
}

fn rational_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec((-4i64..=4, 1i64..=3), r * c)
            .prop_map(move |xs| Matrix::new(r, c, xs.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect()))
    })
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

/// Greatest common divisor of all `k × k` minors.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    let rows: Vec<usize> = (0..a.rows()).collect();
    let cols: Vec<usize> = (0..a.cols()).collect();
    let mut g = BigInt::zero();
    for r in subsets(&rows).filter(|s| s.len() == k) {
        for c in subsets(&cols).filter(|s| s.len() == k) {
            let minor: IntMatrix = Matrix::from_fn(k, k, |i, j| a[(r[i], c[j])].clone());
            g = g.gcd(&determinant(&minor));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_certified(a in int_matrix()) {
        let f = snf(&a);
        prop_assert!(is_unimodular_matrix(&f.u) && is_unimodular_matrix(&f.v));
        prop_assert_eq!(f.u.mul(&a).mul(&f.v), f.s.clone());
        for i in 0..f.s.rows() {
            for j in 0..f.s.cols() {
                prop_assert!(i == j || f.s[(i, j)].is_zero());
            }
        }
        let diag = f.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        let mut product = BigInt::from(1);
        for (k, d) in diag.iter().enumerate() {
            product *= d;
            prop_assert_eq!(&product, &determinantal_divisor(&a, k + 1));
        }
    }

    #[test]
    fn hermite_form_is_canonical(a in int_matrix()) {
        let f = hnf(&a);
        prop_assert!(is_unimodular_matrix(&f.u));
        prop_assert_eq!(f.u.mul(&a), f.h.clone());
        prop_assert_eq!(f.pivots.len(), to_rational(&a).rank());
        for (r, &c) in f.pivots.iter().enumerate() {
            prop_assert!(f.h[(r, c)].is_positive());
            prop_assert!((0..c).all(|j| f.h[(r, j)].is_zero()));
            prop_assert!((r + 1..f.h.rows()).all(|i| f.h[(i, c)].is_zero()));
            for i in 0..r {
                prop_assert!(!f.h[(i, c)].is_negative() && f.h[(i, c)] < f.h[(r, c)]);
            }
        }
        prop_assert!((f.pivots.len()..f.h.rows()).all(|i| f.h.row(i).iter().all(Zero::is_zero)));
        prop_assert_eq!(hnf(&f.h).h, f.h.clone());
    }

    #[test]
    fn rank_nullity_over_q(a in rational_matrix()) {
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), a.cols());
        for k in &kernel {
            prop_assert!(a.mul_vec(k).iter().all(Zero::is_zero));
        }
        if !kernel.is_empty() {
            prop_assert_eq!(Matrix::from_rows(a.cols(), &kernel).rank(), kernel.len());
        }
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn rank_nullity_over_gaussian_rationals(
        (r, c, xs) in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(gaussian(), r * c)))
    ) {
        let a: GaussMatrix = Matrix::new(r, c, xs);
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), c);
        for k in &kernel {
            prop_assert!(a.mul_vec(k).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn real_projection_detects_condition_1(
        (m, h) in (1usize..=6).prop_flat_map(|m| (Just(m), prop::collection::vec(prop::collection::vec(gaussian(), m), 0..=m / 2)))
    ) {
        let independent = h.is_empty() || Matrix::from_rows(m, &h).rank() == h.len();
        prop_assume!(independent);
        let basis = real_projection_basis(m, &h);
        prop_assert!(basis.len() <= 2 * h.len());
        // 𝔥 ∩ conj(𝔥) = 0 exactly when h and its conjugate are independent over ℂ
        let mut both: Vec<GVector> = h.clone();
        both.extend(h.iter().map(|w| w.iter().map(GaussianRational::conj).collect::<GVector>()));
        let transversal = both.is_empty() || Matrix::from_rows(m, &both).rank() == both.len();
        prop_assert_eq!(basis.len() == 2 * h.len(), transversal);
    }
}

#[test]
fn determinant_of_products() {
    let a: IntMatrix = Matrix::from_rows(2, &[vec![2.into(), 1.into()], vec![1.into(), 1.into()]]);
    let b: IntMatrix = Matrix::from_rows(2, &[vec![3.into(), 0.into()], vec![5.into(), (-2).into()]]);
    assert_eq!(determinant(&a.mul(&b)), determinant(&a) * determinant(&b));
}
