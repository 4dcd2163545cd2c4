//! Integer lattice algorithms: Smith and Hermite normal forms, primitivity,
//! saturation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{to_rational, IntMatrix, Matrix};
use super::scalar::Rational;

/// `U · A · V = S` with `U`, `V` unimodular and `S` diagonal, `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// The nonzero invariant factors.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for j in 0..m.cols() {
        let v = &m[(target, j)] - factor * &m[(source, j)];
        m[(target, j)] = v;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for i in 0..m.rows() {
        let v = &m[(i, target)] - factor * &m[(i, source)];
        m[(i, target)] = v;
    }
}

fn negate_row(m: &mut IntMatrix, row: usize) {
    for j in 0..m.cols() {
        let v = -m[(row, j)].clone();
        m[(row, j)] = v;
    }
}

pub fn snf(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = &s[(i, j)];
                    if !e.is_zero() && best.is_none_or(|(bi, bj)| e.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = &s[(i, t)] / &s[(t, t)];
                if !q.is_zero() {
                    row_axpy(&mut s, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = &s[(t, j)] / &s[(t, t)];
                if !q.is_zero() {
                    col_axpy(&mut s, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: pull an offending row up so the next pass shrinks the pivot
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut s, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
    }
    SmithForm { u, s, v }
}

/// Row-style Hermite normal form `H = U · A`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub u: IntMatrix,
    pub h: IntMatrix,
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    /// The nonzero rows of `H`, a canonical basis of the row lattice.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.pivots.len()).map(|i| self.h.row(i).to_vec()).collect()
    }
}

/// Echelon form with positive pivots and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(a: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c over rows r.. until a single nonzero remains
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[(i, c)].is_zero() && best.is_none_or(|b| h[(i, c)].abs() < h[(b, c)].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                if !q.is_zero() {
                    row_axpy(&mut h, i, r, &q);
                    row_axpy(&mut u, i, r, &q);
                }
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { u, h, pivots }
}

pub fn determinant(m: &IntMatrix) -> BigInt {
    let d = to_rational(m).determinant();
    debug_assert!(d.is_integer());
    d.to_integer()
}

pub fn is_unimodular_matrix(m: &IntMatrix) -> bool {
    m.rows() == m.cols() && determinant(m).abs().is_one()
}

/// Inverse of a unimodular matrix, or `None` when `|det| ≠ 1`.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if !is_unimodular_matrix(m) {
        return None;
    }
    let inv = to_rational(m).inverse()?;
    Some(inv.map(Rational::to_integer))
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Nonzero with coprime entries.
pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_of(v).is_one()
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_of(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Splits `ℤ^m` along the saturation of the span of `vectors`.
///
/// Returns a unimodular `m × m` matrix whose first `r` columns are the Hermite
/// basis of `span(vectors) ∩ ℤ^m` and whose remaining columns span a complement.
pub fn saturation_split(m: usize, vectors: &[Vec<BigInt>]) -> (IntMatrix, usize) {
    let a = Matrix::from_cols(m, vectors);
    let smith = snf(&a);
    let r = smith.rank();
    let basis = unimodular_inverse(&smith.u).expect("SNF row transform is unimodular");
    let fiber: Vec<Vec<BigInt>> = (0..r).map(|j| basis.column(j)).collect();
    let canonical = hnf(&Matrix::from_rows(m, &fiber)).basis();
    let mut cols = canonical;
    cols.extend((r..m).map(|j| basis.column(j)));
    (Matrix::from_cols(m, &cols), r)
}
