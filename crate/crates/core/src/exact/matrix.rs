//! Dense row-major matrices with exact elimination over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{Field, GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<Rational>;
pub type GaussMatrix = Matrix<GaussianRational>;
pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    /// Panics if `data.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows × cols");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<T>]) -> Self {
        for c in cols {
            assert_eq!(c.len(), rows, "ragged columns");
        }
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T>
    where
        for<'a> &'a T: core::ops::Mul<&'a T, Output = T>,
    {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + &self[(i, k)] * &rhs[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T>
    where
        for<'a> &'a T: core::ops::Mul<&'a T, Output = T>,
    {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (k, x) in v.iter().enumerate() {
                    acc = acc + &self[(i, k)] * x;
                }
                acc
            })
            .collect()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field + fmt::Display> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub x: Vec<F>,
    /// False when the system is rank deficient; `x` is then the particular
    /// solution with every free variable set to zero.
    pub unique: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("right-hand side is not in the column space")]
pub struct NoSolution;

impl<F: Field + fmt::Display> Matrix<F> {
    /// Gauss-Jordan elimination, scanning columns left to right so pivots are
    /// the lexicographically earliest possible.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = F::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : Mx = 0}`: one vector per free column, in increasing
    /// column order, with a 1 in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `M x = b`. See [`Solution::unique`] for rank-deficient systems.
    pub fn solve(&self, b: &[F]) -> Result<Solution<F>, NoSolution> {
        assert_eq!(b.len(), self.rows, "right-hand side length must equal row count");
        let augmented = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { b[i].clone() }
        });
        let Echelon { reduced, pivots } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(NoSolution);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(row, self.cols)].clone();
        }
        Ok(Solution { x, unique: pivots.len() == self.cols })
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone() / pivot.clone();
                    for j in c..m.cols {
                        let v = m[(i, j)].clone() - factor.clone() * m[(c, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let Echelon { reduced, pivots } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
    }

    /// The nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<F>> {
        let e = self.rref();
        (0..e.pivots.len()).map(|i| e.reduced.row(i).to_vec()).collect()
    }
}

/// Rank of a list of vectors of common length `dim`.
pub fn vectors_rank<F: Field + fmt::Display>(dim: usize, vectors: &[Vec<F>]) -> usize {
    Matrix::from_rows(dim, vectors).rank()
}

pub fn to_rational(m: &IntMatrix) -> RationalMatrix {
    m.map(|x| Rational::from_integer(x.clone()))
}

pub fn to_gauss(m: &RationalMatrix) -> GaussMatrix {
    m.map(|x| GaussianRational::from_real(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rational};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let v: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(cols, &v)
    }

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(q(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(q(&[&[1, 1, 0, 0], &[0, 0, -1, -1]]).rank(), 2);
        assert_eq!(q(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(q(&[&[1, 0], &[0, 1]]).kernel_basis().is_empty());
        assert_eq!(q(&[&[1, -1, 0]]).kernel_basis(), vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])]);
        assert_eq!(q(&[&[1, 1], &[1, 1]]).kernel_basis(), vec![qv(&[-1, 1])]);
        // no rows: the kernel is everything
        assert_eq!(RationalMatrix::zeros(0, 2).kernel_basis(), vec![qv(&[1, 0]), qv(&[0, 1])]);
    }

    #[test]
    fn solve_examples() {
        let id = q(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.solve(&qv(&[2, 3])).unwrap(), Solution { x: qv(&[2, 3]), unique: true });

        // columns (1,0) and (1,2)
        let m = q(&[&[1, 1], &[0, 2]]);
        let s = m.solve(&qv(&[1, 1])).unwrap();
        assert_eq!(s.x, vec![rational(1, 2), rational(1, 2)]);
        assert!(s.unique);

        // columns (1,0) and (2,0)
        let m = q(&[&[1, 2], &[0, 0]]);
        assert_eq!(m.solve(&qv(&[0, 1])), Err(NoSolution));
        let s = m.solve(&qv(&[4, 0])).unwrap();
        assert_eq!(s.x, qv(&[4, 0]));
        assert!(!s.unique);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant(), int(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(q(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn gaussian_rank() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let m = GaussMatrix::from_rows(2, &[vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12), rows in 1usize..4) {
            let cols = 12 / rows.max(1);
            let cols = cols.min(4);
            let data: Vec<Rational> = entries.iter().take(rows * cols).map(|&x| int(x)).collect();
            let m = Matrix::new(rows, cols, data);
            let kernel = m.kernel_basis();
            prop_assert_eq!(kernel.len() + m.rank(), cols);
            for k in &kernel {
                prop_assert!(m.mul_vec(k).iter().all(|x| x.is_zero()));
            }
        }
    }
}
