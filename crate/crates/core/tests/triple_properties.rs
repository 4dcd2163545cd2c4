mod common;

use common::faces_of;
use maxtorus::constructions::{gallery, make_calabi_eckmann};
use maxtorus::exact::{GaussianRational, Rational};
use maxtorus::oracle::{complete_by_sampling, fan_overlap_by_oracle};
use maxtorus::polyhedral::{Fan, Membership};
use maxtorus::Triple;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn valid_triples() -> Vec<(String, Triple)> {
    let mut out: Vec<(String, Triple)> = gallery::all().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    for m in 2..=6 {
        for k in 1..m {
            let alpha = GaussianRational::from_ints(k as i64 - 2, 1 + (m % 3) as i64);
            out.push((format!("calabi_eckmann({k},{m})"), make_calabi_eckmann(k, m, alpha).unwrap()));
        }
    }
    out
}

#[test]
fn valid_triples_have_complete_quotients() {
    for (name, t) in valid_triples() {
        let report = t.validate();
        assert!(report.is_valid(), "{name}: {:?}", report.first_failure());
        let q = t.quotient_fan().unwrap();
        let d = t.quotient_dim();
        assert_eq!(q.quotient_dim, d, "{name}");
        assert_eq!(q.fan.dim(), d, "{name}");
        assert_eq!(q.fan.overlapping_pair(), None, "{name}");
        assert!(q.fan.is_complete(d).unwrap(), "{name}");
        assert!(complete_by_sampling(&q.fan, d, 1000, 11), "{name}");
        assert_eq!(fan_overlap_by_oracle(&q.fan, 100, 5), None, "{name}");
        assert!(q.ray_collisions().is_empty(), "{name}");
        assert_eq!(q.cone_collision(), None, "{name}");
        assert_eq!(q.projection.rows(), d, "{name}");
    }
}

#[test]
fn hert_identities_on_every_stratum() {
    for (name, t) in valid_triples() {
        let (m, n, d) = (t.torus_rank(), t.complex_dim(), t.quotient_dim());
        let maximal = t.fan().complex().maximal_faces();
        let mut minimal = Vec::new();
        for s in faces_of(&maximal) {
            let h = t.hert(&s).unwrap_or_else(|e| panic!("{name} {s:?}: {e}"));
            assert_eq!(h.h, 0);
            assert_eq!(h.e + h.t, m, "{name} {s:?}");
            assert_eq!(h.r + h.t, 2 * n - 2 * h.e, "{name} {s:?}");
            assert_eq!(h.e, s.len());
            if h.r == 0 {
                assert_eq!(s.len(), d, "{name} {s:?}");
                assert!(maximal.contains(&s), "{name} {s:?}");
                minimal.push(s);
            }
        }
        minimal.sort();
        let mut expected = t.minimal_orbits();
        expected.sort();
        assert_eq!(minimal, expected, "{name}");
        assert!(t.hert(&(0..m + 1).collect::<Vec<_>>()).is_err());
    }
}

#[test]
fn orbit_limits_partition_the_support() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, t) in valid_triples() {
        let fan = t.fan().to_rational();
        let faces = faces_of(&fan.complex().maximal_faces());
        let m = t.torus_rank();
        for round in 0..500 {
            let v: Vec<Rational> = if round % 2 == 0 {
                // a point in the relative interior of a known face
                let face = &faces[rng.gen_range(0..faces.len())];
                let mut v = vec![Rational::zero(); m];
                for &i in face {
                    let c = Rational::from_integer(rng.gen_range(1i64..=9).into());
                    for (x, r) in v.iter_mut().zip(&fan.rays()[i]) {
                        *x += &c * r;
                    }
                }
                v
            } else {
                (0..m).map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into())).collect()
            };
            let hits: Vec<_> = faces
                .iter()
                .filter(|s| matches!(fan.cone_membership(s, &v), Membership::Inside { relative_interior: true, .. }))
                .cloned()
                .collect();
            assert!(hits.len() <= 1, "{name}: {v:?} in {hits:?}");
            assert_eq!(t.orbit_limit(&v), hits.first().cloned(), "{name}: {v:?}");
        }
    }
}

#[test]
fn kaehler_dimension_bound_and_decomposition() {
    for (name, t) in valid_triples() {
        let k = t.kaehler_obstruction();
        assert_eq!(k.required, t.quotient_dim());
        assert!(k.dim_f >= k.required, "{name}");
        match t.product_decomposition() {
            Err(_) => assert!(!k.passes, "{name}"),
            Ok(dec) => {
                assert!(k.passes, "{name}");
                let r = dec.fiber_fan.ambient_rank();
                assert_eq!(r, k.dim_f);
                assert_eq!(dec.base_rank, t.torus_rank() - r);
                assert!(dec.fiber_fan.validate().is_fan(), "{name}");
                assert!(dec.fiber_fan.is_complete(r).unwrap(), "{name}");
                assert_eq!(&dec.recombine(), t.fan(), "{name}");
                let base = Triple::new(Fan::origin(dec.base_rank), dec.base_h_basis.clone()).unwrap();
                assert!(base.validate().is_valid(), "{name}");
                assert_eq!(2 * dec.base_h_basis.len(), dec.base_rank, "{name}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn calabi_eckmann_family_is_valid(m in 2usize..=6, k_seed in 0usize..5, re in -4i64..=4, im in 1i64..=4, neg in any::<bool>()) {
        let k = 1 + k_seed % (m - 1);
        let alpha = GaussianRational::from_ints(re, if neg { -im } else { im });
        let t = make_calabi_eckmann(k, m, alpha).unwrap();
        let report = t.validate();
        prop_assert!(report.is_valid(), "{:?}", report.first_failure());
        prop_assert_eq!(t.complex_dim(), m - 1);
        prop_assert_eq!(t.quotient_dim(), m - 2);
        prop_assert_eq!(t.minimal_orbits().len(), k * (m - k));
    }
}
