//! Dense matrices generic over the scalar, with exact Gaussian elimination.
//!
//! Row reduction, nullspaces, ranks and inverses here are written for field
//! scalars and are exact over [`crate::Rational`].  Floating-point spectral
//! work lives in [`crate::numerics`] on top of `nalgebra`.

use crate::error::CoreError;
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// `(self + self^T) / 2`.
    pub fn symmetrized(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let half = T::from_ratio(1, 2);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            (self.at(i, j).clone() + self.at(j, i).clone()) * half.clone()
        })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
            }
            acc
        })
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k).clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - other.at(i, j).clone()
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).clone() * s.clone())
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| f(v)).collect(),
        }
    }

    pub fn to_f64(&self) -> Mat<f64> {
        self.map(|v| v.to_f64_lossy())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    ///
    /// Pivot selection takes the entry of largest absolute value in the
    /// current column, which is also a sensible strategy for rationals.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for i in r..self.rows {
                if !self.at(i, c).is_zero() {
                    match best {
                        None => best = Some(i),
                        Some(b) => {
                            if self.at(i, c).abs() > self.at(b, c).abs() {
                                best = Some(i);
                            }
                        }
                    }
                }
            }
            let Some(p) = best else { continue };
            self.swap_rows(r, p);
            let inv = T::one() / self.at(r, c).clone();
            for j in c..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).clone() - factor.clone() * self.at(r, j).clone();
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank via row reduction (exact for exact scalars).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace `{v : Mv = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (&pc, r) in pivots.iter().zip(0..) {
                v[pc] = -m.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::dims(
                format!("{0}x{0}", self.rows),
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Mat<T> = Mat::identity(n);
        for c in 0..n {
            let mut best = c;
            for i in c..n {
                if a.at(i, c).abs() > a.at(best, c).abs() {
                    best = i;
                }
            }
            if a.at(best, c).is_zero() {
                return Err(CoreError::SingularMatrix);
            }
            a.swap_rows(c, best);
            inv.swap_rows(c, best);
            let piv_inv = T::one() / a.at(c, c).clone();
            for j in 0..n {
                let v = a.at(c, j).clone() * piv_inv.clone();
                *a.at_mut(c, j) = v;
                let v = inv.at(c, j).clone() * piv_inv.clone();
                *inv.at_mut(c, j) = v;
            }
            for i in 0..n {
                if i != c && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for j in 0..n {
                        let v = a.at(i, j).clone() - f.clone() * a.at(c, j).clone();
                        *a.at_mut(i, j) = v;
                        let v = inv.at(i, j).clone() - f.clone() * inv.at(c, j).clone();
                        *inv.at_mut(i, j) = v;
                    }
                }
            }
        }
        Ok(inv)
    }
}

impl Mat<f64> {
    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| *self.at(i, j))
    }

    pub fn from_nalgebra(m: &nalgebra::DMatrix<f64>) -> Self {
        Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |a, v| a.max(v.abs()))
    }
}

/// Euclidean inner product of two equal-length slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    let mut acc = T::zero();
    for (u, v) in a.iter().zip(b) {
        acc = acc + u.clone() * v.clone();
    }
    acc
}

pub fn norm2(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

pub fn normalize(v: &[f64]) -> Vec<f64> {
    let n = norm2(v);
    if n == 0.0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / n).collect()
}

/// Projective distance between nonzero vectors: Euclidean distance between
/// the normalised representatives, minimised over the sign.
pub fn projective_distance(a: &[f64], b: &[f64]) -> f64 {
    let a = normalize(a);
    let b = normalize(b);
    let mut dp = 0.0;
    let mut dm = 0.0;
    for (u, v) in a.iter().zip(&b) {
        dp += (u - v) * (u - v);
        dm += (u + v) * (u + v);
    }
    dp.sqrt().min(dm.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn rref_rank_and_nullspace_exact() {
        // rank-2 matrix with a known 2-dimensional nullspace
        let m = Mat::from_rows(vec![
            vec![q(1, 1), q(2, 1), q(3, 1), q(4, 1)],
            vec![q(2, 1), q(4, 1), q(6, 1), q(8, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mv = m.matvec(v);
            assert!(mv.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_exact_roundtrip() {
        let m = Mat::from_rows(vec![
            vec![q(2, 1), q(1, 1), q(0, 1)],
            vec![q(1, 1), q(3, 1), q(1, 2)],
            vec![q(0, 1), q(1, 2), q(1, 1)],
        ]);
        let inv = m.inverse().unwrap();
        let prod = m.matmul(&inv);
        assert_eq!(prod, Mat::identity(3));
        let sing = Mat::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]);
        assert!(matches!(sing.inverse(), Err(CoreError::SingularMatrix)));
    }

    #[test]
    fn symmetrize_and_products() {
        let m = Mat::from_rows(vec![vec![q(0, 1), q(2, 1)], vec![q(0, 1), q(0, 1)]]);
        let s = m.symmetrized();
        assert_eq!(*s.at(0, 1), q(1, 1));
        assert_eq!(*s.at(1, 0), q(1, 1));
        assert!(s.is_symmetric());

        let v = s.matvec(&[q(1, 1), q(1, 1)]);
        assert_eq!(v, vec![q(1, 1), q(1, 1)]);
    }

    #[test]
    fn projective_distance_identifies_antipodes() {
        let a = [1.0, 0.0, 0.0];
        let b = [-1.0, 0.0, 0.0];
        assert!(projective_distance(&a, &b) < 1e-15);
        let c = [0.0, 1.0, 0.0];
        assert!(projective_distance(&a, &c) > 1.0);
    }
}
