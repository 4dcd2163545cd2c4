//! Curated fans shared by the property and acceptance tests.

#![allow(dead_code)]

use maxtorus::exact::{QVector, Rational, ZVector};
use maxtorus::polyhedral::complex::subsets;
use maxtorus::polyhedral::{Fan, RationalFan, Simplex, SimplicialComplex};
use num_bigint::BigInt;

pub fn zv(xs: &[i64]) -> ZVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn qv(xs: &[i64]) -> QVector {
    xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

pub fn unit(m: usize, i: usize) -> Vec<i64> {
    (0..m).map(|j| i64::from(i == j)).collect()
}

pub fn rfan(dim: usize, rays: &[Vec<i64>], maximal: &[Vec<usize>]) -> RationalFan {
    let complex = SimplicialComplex::from_maximal(maximal.iter().cloned());
    RationalFan::new(dim, rays.iter().map(|r| qv(r)).collect(), complex).expect("well-shaped fan")
}

pub fn zfan(dim: usize, rays: &[Vec<i64>], maximal: &[Vec<usize>]) -> Fan {
    Fan::from_maximal(dim, rays.iter().map(|r| zv(r)).collect(), maximal.iter().cloned()).expect("well-shaped fan")
}

/// Rays `e_1..e_d, -(e_1 + ... + e_d)`, every `d`-subset a cone.
pub fn projective_space(d: usize) -> (Vec<Vec<i64>>, Vec<Vec<usize>>) {
    let mut rays: Vec<Vec<i64>> = (0..d).map(|i| unit(d, i)).collect();
    rays.push(vec![-1; d]);
    let all: Vec<usize> = (0..=d).collect();
    let maximal = (0..=d).map(|skip| all.iter().copied().filter(|&v| v != skip).collect()).collect();
    (rays, maximal)
}

/// Rays `±e_i`, cones choosing one sign per coordinate.
pub fn cross_polytope(d: usize) -> (Vec<Vec<i64>>, Vec<Vec<usize>>) {
    let mut rays = Vec::new();
    for i in 0..d {
        rays.push(unit(d, i));
        rays.push(unit(d, i).into_iter().map(|x| -x).collect());
    }
    let maximal = (0..1usize << d).map(|mask| (0..d).map(|i| 2 * i + ((mask >> i) & 1)).collect()).collect();
    (rays, maximal)
}

pub fn join(a: &(Vec<Vec<i64>>, Vec<Vec<usize>>), b: &(Vec<Vec<i64>>, Vec<Vec<usize>>)) -> (Vec<Vec<i64>>, Vec<Vec<usize>>) {
    let (da, db) = (a.0.first().map_or(0, Vec::len), b.0.first().map_or(0, Vec::len));
    let mut rays: Vec<Vec<i64>> = a.0.iter().map(|r| r.iter().copied().chain(std::iter::repeat_n(0, db)).collect()).collect();
    rays.extend(b.0.iter().map(|r| std::iter::repeat_n(0, da).chain(r.iter().copied()).collect()));
    let offset = a.0.len();
    let mut maximal = Vec::new();
    for s in &a.1 {
        for t in &b.1 {
            maximal.push(s.iter().copied().chain(t.iter().map(|v| v + offset)).collect());
        }
    }
    (rays, maximal)
}

fn drop_cone(mut f: (Vec<Vec<i64>>, Vec<Vec<usize>>), k: usize) -> (Vec<Vec<i64>>, Vec<Vec<usize>>) {
    f.1.remove(k);
    f
}

pub struct CompletenessCase {
    pub name: &'static str,
    pub fan: RationalFan,
    pub d: usize,
    pub complete: bool,
}

/// Fans of dimension 0 to 4 with known completeness.
pub fn completeness_suite() -> Vec<CompletenessCase> {
    let case = |name, (rays, maximal): (Vec<Vec<i64>>, Vec<Vec<usize>>), d: usize, complete| CompletenessCase {
        name,
        fan: rfan(d, &rays, &maximal),
        d,
        complete,
    };
    let p1 = cross_polytope(1);
    let hexagon = (
        vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![-1, 0], vec![-1, -1], vec![0, -1]],
        (0..6).map(|i| { let mut s = vec![i, (i + 1) % 6]; s.sort(); s }).collect(),
    );
    let calabi_eckmann = (
        (0..4).map(|i| unit(4, i)).collect::<Vec<_>>(),
        vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
    );
    let mut out = vec![
        CompletenessCase { name: "origin in R^0", fan: rfan(0, &[], &[]), d: 0, complete: true },
        CompletenessCase { name: "origin in R^2", fan: rfan(2, &[], &[]), d: 2, complete: false },
        case("P1", p1.clone(), 1, true),
        case("half line", (vec![vec![1]], vec![vec![0]]), 1, false),
        case("P2", projective_space(2), 2, true),
        case("P1xP1", cross_polytope(2), 2, true),
        case("Hirzebruch F1", (vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]), 2, true),
        case("weighted P(1,1,2)", (vec![vec![1, 0], vec![0, 1], vec![-1, -2]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]), 2, true),
        case("hexagon", hexagon.clone(), 2, true),
        case("hexagon minus a cone", drop_cone(hexagon, 2), 2, false),
        case("P2 minus a cone", drop_cone(projective_space(2), 0), 2, false),
        case("P1xP1 minus a cone", drop_cone(cross_polytope(2), 3), 2, false),
        case("quadrant", (vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]), 2, false),
        case("opposite quadrants", (vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]], vec![vec![0, 1], vec![2, 3]]), 2, false),
        case("four half lines", (cross_polytope(2).0, (0..4).map(|i| vec![i]).collect()), 2, false),
        case("P3", projective_space(3), 3, true),
        case("P1^3", cross_polytope(3), 3, true),
        case("P2xP1", join(&projective_space(2), &p1), 3, true),
        case("P1^3 minus a cone", drop_cone(cross_polytope(3), 5), 3, false),
        case("P3 minus a cone", drop_cone(projective_space(3), 1), 3, false),
        case("octant", ((0..3).map(|i| unit(3, i)).collect(), vec![vec![0, 1, 2]]), 3, false),
        case("P4", projective_space(4), 4, true),
        case("P2xP2", join(&projective_space(2), &projective_space(2)), 4, true),
        case("P1^4", cross_polytope(4), 4, true),
        case("P4 minus a cone", drop_cone(projective_space(4), 2), 4, false),
        case("Calabi-Eckmann fan in R^4", calabi_eckmann.clone(), 4, false),
        case("P1 x half line", join(&p1, &(vec![vec![1]], vec![vec![0]])), 2, false),
    ];
    out.push(CompletenessCase { name: "Calabi-Eckmann fan at d = 2", fan: rfan(4, &calabi_eckmann.0, &calabi_eckmann.1), d: 2, complete: false });
    out
}

pub struct OverlapCase {
    pub name: &'static str,
    pub fan: RationalFan,
    pub fan_property: bool,
}

/// Candidates with linearly independent cones, with and without overlaps.
pub fn overlap_suite() -> Vec<OverlapCase> {
    let case = |name, dim: usize, rays: Vec<Vec<i64>>, maximal: Vec<Vec<usize>>, fan_property| OverlapCase {
        name,
        fan: rfan(dim, &rays, &maximal),
        fan_property,
    };
    let (e1, e2, e3) = (unit(3, 0), unit(3, 1), unit(3, 2));
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<i64>>();
    let sub = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<i64>>();
    let e12 = add(&e1, &e2);
    let p = |f: (Vec<Vec<i64>>, Vec<Vec<usize>>), dim, name| OverlapCase { name, fan: rfan(dim, &f.0, &f.1), fan_property: true };
    vec![
        case("cone contains a ray", 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![2]], false),
        case("subdivided quadrant", 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 2], vec![1, 2]], true),
        case("nested cones sharing a ray", 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![0, 1], vec![0, 2]], false),
        case("crossing cones", 2, vec![vec![1, 0], vec![0, 1], vec![1, 2], vec![2, 1]], vec![vec![0, 1], vec![2, 3]], false),
        case("touching at the origin", 2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]], vec![vec![0, 1], vec![2, 3]], true),
        case("two rays same direction", 1, vec![vec![1], vec![2]], vec![vec![0], vec![1]], false),
        case("opposite rays", 1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]], true),
        case("three adjacent sectors", 2, vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 3]], true),
        case("overlapping sectors", 2, vec![vec![1, 0], vec![-1, 1], vec![0, 1], vec![1, -2]], vec![vec![0, 1], vec![2, 3]], false),
        case("plane inside octant", 3, vec![e1.clone(), e2.clone(), e3.clone(), e12.clone()], vec![vec![0, 1, 2], vec![2, 3]], false),
        case("cones meeting along a line", 3, vec![e1.clone(), e2.clone(), e3.clone(), sub(&e12, &e3)], vec![vec![0, 1], vec![2, 3]], false),
        case("planes crossing in a line", 3, vec![e1.clone(), e2.clone(), add(&e12, &e3), sub(&e12, &e3)], vec![vec![0, 1], vec![2, 3]], false),
        case("disjoint planes", 3, vec![e1.clone(), e2.clone(), vec![-1, 0, 0], e3.clone()], vec![vec![0, 1], vec![2, 3]], true),
        case("plane and skew ray", 3, vec![e1.clone(), e2.clone(), vec![1, 1, 1]], vec![vec![0, 1], vec![2]], true),
        case("skew planes in R^4", 4, vec![unit(4, 0), unit(4, 1), vec![1, 0, 1, 0], vec![0, 1, -1, 0]], vec![vec![0, 1], vec![2, 3]], false),
        case("coordinate planes in R^4", 4, vec![unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3)], vec![vec![0, 1], vec![2, 3]], true),
        case("Calabi-Eckmann fan", 4, (0..4).map(|i| unit(4, i)).collect(), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]], true),
        p(projective_space(2), 2, "P2"),
        p(cross_polytope(2), 2, "P1xP1"),
        p(projective_space(3), 3, "P3"),
        p(cross_polytope(3), 3, "P1^3"),
        p(join(&projective_space(2), &cross_polytope(1)), 3, "P2xP1"),
        p(projective_space(4), 4, "P4"),
        case("P2 with a doubled cone", 2, vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]], vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3]], false),
    ]
}

/// All faces of the maximal simplices, used to enumerate strata.
pub fn faces_of(maximal: &[Simplex]) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = maximal.iter().flat_map(|s| subsets(s).collect::<Vec<_>>()).collect();
    out.sort();
    out.dedup();
    out
}
