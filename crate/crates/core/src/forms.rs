//! Quadratic forms on matrices, biquadratic forms, and the maps between them.
//!
//! A quadratic form `Phi(Z) = <Z, CZ>` on `n x m` matrices restricts to
//! rank-one matrices `Z = x (x) y` as a biquadratic form `F(x, y)`; the
//! restriction map `sigma` has the span of the `2x2` minors (the null
//! Lagrangians) as its kernel, and `tau` picks the symmetric representative
//! with `C_{ijkl} = C_{ilkj} = C_{kjil}`, a right inverse of `sigma`.
//!
//! A biquadratic is stored as that symmetric representative: one coefficient
//! per unordered index pair `{i,k}` of `x`-variables times unordered pair
//! `{j,l}` of `y`-variables (36 coefficients for `n = m = 3`).

use crate::error::CoreError;
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::ternary::TernaryForm;

/// Number of unordered index pairs `{a, c}` with `0 <= a <= c < n`.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Lexicographic list of unordered pairs `(a, c)` with `a <= c`.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(pair_count(n));
    for a in 0..n {
        for c in a..n {
            v.push((a, c));
        }
    }
    v
}

/// Index of the unordered pair `{a, c}` in `pair_list(n)`.
pub fn pair_index(n: usize, a: usize, c: usize) -> usize {
    let (a, c) = if a <= c { (a, c) } else { (c, a) };
    a * (2 * n - a + 1) / 2 + (c - a)
}

fn mult<T: Scalar>(a: usize, c: usize) -> T {
    if a == c {
        T::one()
    } else {
        T::from_int(2)
    }
}

/// Value of `d(x_a x_c)/d(x_t)` at `x`.
fn mono_d1<T: Scalar>(a: usize, c: usize, t: usize, x: &[T]) -> T {
    if a == c {
        if t == a {
            T::from_int(2) * x[a].clone()
        } else {
            T::zero()
        }
    } else if t == a {
        x[c].clone()
    } else if t == c {
        x[a].clone()
    } else {
        T::zero()
    }
}

/// Value of `d^2(x_a x_c)/d(x_s)d(x_t)`.
fn mono_d2<T: Scalar>(a: usize, c: usize, s: usize, t: usize) -> T {
    if a == c {
        if s == a && t == a {
            T::from_int(2)
        } else {
            T::zero()
        }
    } else if (s, t) == (a, c) || (s, t) == (c, a) {
        T::one()
    } else {
        T::zero()
    }
}

/// Biquadratic form `F(x, y)`, bihomogeneous of degree `(2, 2)`.
///
/// Coefficients are the canonical symmetric-representative tensor entries;
/// the coefficient of the monomial `x_a x_c y_b y_d` is the stored entry
/// times the pair multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Biquadratic<T> {
    n: usize,
    m: usize,
    coef: Vec<T>,
}

impl<T: Scalar> Biquadratic<T> {
    pub fn zero(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1);
        Biquadratic {
            n,
            m,
            coef: vec![T::zero(); pair_count(n) * pair_count(m)],
        }
    }

    /// Builds from canonical tensor entries, ordered as
    /// `pair_list(n) x pair_list(m)` row-major.
    pub fn from_tensor(n: usize, m: usize, coef: Vec<T>) -> Self {
        assert_eq!(coef.len(), pair_count(n) * pair_count(m));
        Biquadratic { n, m, coef }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn tensor(&self) -> &[T] {
        &self.coef
    }

    fn idx(&self, px: usize, py: usize) -> usize {
        px * pair_count(self.m) + py
    }

    /// Canonical tensor entry `C_{ijkl}` (indices unordered on each side).
    pub fn tensor_coeff(&self, i: usize, k: usize, j: usize, l: usize) -> T {
        self.coef[self.idx(pair_index(self.n, i, k), pair_index(self.m, j, l))].clone()
    }

    /// Coefficient of the monomial `x_i x_k y_j y_l`.
    pub fn monomial_coeff(&self, i: usize, k: usize, j: usize, l: usize) -> T {
        self.tensor_coeff(i, k, j, l) * mult::<T>(i, k) * mult::<T>(j, l)
    }

    /// Adds `v * x_i y_j x_k y_l` to the form (any index order).
    pub fn add_monomial(&mut self, i: usize, k: usize, j: usize, l: usize, v: T) {
        let id = self.idx(pair_index(self.n, i, k), pair_index(self.m, j, l));
        let scale = mult::<T>(i, k) * mult::<T>(j, l);
        self.coef[id] = self.coef[id].clone() + v / scale;
    }

    pub fn is_zero(&self) -> bool {
        self.coef.iter().all(|c| c.is_zero())
    }

    pub fn evaluate(&self, x: &[T], y: &[T]) -> T {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.m);
        let mut acc = T::zero();
        for (px, &(a, c)) in pair_list(self.n).iter().enumerate() {
            let vx = x[a].clone() * x[c].clone() * mult::<T>(a, c);
            if vx.is_zero() {
                continue;
            }
            for (py, &(b, d)) in pair_list(self.m).iter().enumerate() {
                let co = &self.coef[self.idx(px, py)];
                if co.is_zero() {
                    continue;
                }
                let vy = y[b].clone() * y[d].clone() * mult::<T>(b, d);
                acc = acc + co.clone() * vx.clone() * vy;
            }
        }
        acc
    }

    /// Gradient `(dF/dx, dF/dy)` as an `(n + m)`-vector.
    pub fn gradient(&self, x: &[T], y: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.m);
        let mut g = vec![T::zero(); self.n + self.m];
        for (px, &(a, c)) in pair_list(self.n).iter().enumerate() {
            for (py, &(b, d)) in pair_list(self.m).iter().enumerate() {
                let co = self.coef[self.idx(px, py)].clone()
                    * mult::<T>(a, c)
                    * mult::<T>(b, d);
                if co.is_zero() {
                    continue;
                }
                let vx = x[a].clone() * x[c].clone();
                let vy = y[b].clone() * y[d].clone();
                for t in 0..self.n {
                    let dx = mono_d1(a, c, t, x);
                    if !dx.is_zero() {
                        g[t] = g[t].clone() + co.clone() * dx * vy.clone();
                    }
                }
                for u in 0..self.m {
                    let dy = mono_d1(b, d, u, y);
                    if !dy.is_zero() {
                        g[self.n + u] = g[self.n + u].clone() + co.clone() * vx.clone() * dy;
                    }
                }
            }
        }
        g
    }

    /// Symmetric `(n + m) x (n + m)` Hessian.
    pub fn hessian(&self, x: &[T], y: &[T]) -> Mat<T> {
        assert_eq!(x.len(), self.n);
        assert_eq!(y.len(), self.m);
        let dim = self.n + self.m;
        let mut h: Mat<T> = Mat::zeros(dim, dim);
        for (px, &(a, c)) in pair_list(self.n).iter().enumerate() {
            for (py, &(b, d)) in pair_list(self.m).iter().enumerate() {
                let co = self.coef[self.idx(px, py)].clone()
                    * mult::<T>(a, c)
                    * mult::<T>(b, d);
                if co.is_zero() {
                    continue;
                }
                let vx = x[a].clone() * x[c].clone();
                let vy = y[b].clone() * y[d].clone();
                for s in 0..self.n {
                    for t in s..self.n {
                        let dd = mono_d2::<T>(a, c, s, t);
                        if !dd.is_zero() {
                            let v = co.clone() * dd * vy.clone();
                            *h.at_mut(s, t) = h.at(s, t).clone() + v.clone();
                            if s != t {
                                *h.at_mut(t, s) = h.at(t, s).clone() + v;
                            }
                        }
                    }
                }
                for u in 0..self.m {
                    for w in u..self.m {
                        let dd = mono_d2::<T>(b, d, u, w);
                        if !dd.is_zero() {
                            let v = co.clone() * dd * vx.clone();
                            let (s, t) = (self.n + u, self.n + w);
                            *h.at_mut(s, t) = h.at(s, t).clone() + v.clone();
                            if s != t {
                                *h.at_mut(t, s) = h.at(t, s).clone() + v;
                            }
                        }
                    }
                }
                for t in 0..self.n {
                    let dx = mono_d1(a, c, t, x);
                    if dx.is_zero() {
                        continue;
                    }
                    for u in 0..self.m {
                        let dy = mono_d1(b, d, u, y);
                        if !dy.is_zero() {
                            let v = co.clone() * dx.clone() * dy;
                            *h.at_mut(t, self.n + u) = h.at(t, self.n + u).clone() + v.clone();
                            *h.at_mut(self.n + u, t) = h.at(self.n + u, t).clone() + v;
                        }
                    }
                }
            }
        }
        h
    }

    /// The `x`-matrix `T(x)`: symmetric `m x m` pencil of quadratics in `x`
    /// with `y^T T(x) y = F(x, y)`.
    pub fn x_matrix(&self) -> QuadraticMatrixPencil<T> {
        let entries = (0..self.m * self.m)
            .map(|e| {
                let (j, l) = (e / self.m, e % self.m);
                QuadForm::new(Mat::from_fn(self.n, self.n, |i, k| {
                    self.tensor_coeff(i, k, j, l)
                }))
            })
            .collect();
        QuadraticMatrixPencil {
            size: self.m,
            nvars: self.n,
            entries,
        }
    }

    /// The `y`-matrix `S(y)`: symmetric `n x n` pencil of quadratics in `y`
    /// with `x^T S(y) x = F(x, y)`.
    pub fn y_matrix(&self) -> QuadraticMatrixPencil<T> {
        let entries = (0..self.n * self.n)
            .map(|e| {
                let (i, k) = (e / self.n, e % self.n);
                QuadForm::new(Mat::from_fn(self.m, self.m, |j, l| {
                    self.tensor_coeff(i, k, j, l)
                }))
            })
            .collect();
        QuadraticMatrixPencil {
            size: self.n,
            nvars: self.m,
            entries,
        }
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transposed(&self) -> Biquadratic<T> {
        let mut out = Biquadratic::zero(self.m, self.n);
        for (a, c) in pair_list(self.n) {
            for (b, d) in pair_list(self.m) {
                let v = self.tensor_coeff(a, c, b, d);
                let id = out.idx(pair_index(self.m, b, d), pair_index(self.n, a, c));
                out.coef[id] = v;
            }
        }
        out
    }

    /// `F(Ax, By)` for invertible changes of coordinates `A` (`n x n`) and
    /// `B` (`m x m`).
    pub fn compose_linear(&self, a_mat: &Mat<T>, b_mat: &Mat<T>) -> Biquadratic<T> {
        assert_eq!((a_mat.rows(), a_mat.cols()), (self.n, self.n));
        assert_eq!((b_mat.rows(), b_mat.cols()), (self.m, self.m));
        let mut out = Biquadratic::zero(self.n, self.m);
        for (a, c) in pair_list(self.n) {
            for (b, d) in pair_list(self.m) {
                let co = self.monomial_coeff(a, c, b, d);
                if co.is_zero() {
                    continue;
                }
                for s in 0..self.n {
                    let aa = a_mat.at(a, s).clone();
                    if aa.is_zero() {
                        continue;
                    }
                    for t in 0..self.n {
                        let ac = a_mat.at(c, t).clone();
                        if ac.is_zero() {
                            continue;
                        }
                        for u in 0..self.m {
                            let bb = b_mat.at(b, u).clone();
                            if bb.is_zero() {
                                continue;
                            }
                            for w in 0..self.m {
                                let bd = b_mat.at(d, w).clone();
                                if bd.is_zero() {
                                    continue;
                                }
                                out.add_monomial(
                                    s,
                                    t,
                                    u,
                                    w,
                                    co.clone() * aa.clone() * ac.clone() * bb.clone() * bd.clone(),
                                );
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: &T) -> Self {
        Biquadratic {
            n: self.n,
            m: self.m,
            coef: self.coef.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.m), (other.n, other.m));
        Biquadratic {
            n: self.n,
            m: self.m,
            coef: self
                .coef
                .iter()
                .zip(&other.coef)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.m), (other.n, other.m));
        Biquadratic {
            n: self.n,
            m: self.m,
            coef: self
                .coef
                .iter()
                .zip(&other.coef)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Biquadratic<U> {
        Biquadratic {
            n: self.n,
            m: self.m,
            coef: self.coef.iter().map(|c| f(c)).collect(),
        }
    }

    pub fn to_f64(&self) -> Biquadratic<f64> {
        self.map(|c| c.to_f64_lossy())
    }

    /// Largest tensor coefficient in absolute value, as `f64`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coef
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.to_f64_lossy().abs()))
    }

    /// The square `<x, My>^2` of a bilinear form.
    pub fn square_of_bilinear(m_mat: &Mat<T>) -> Biquadratic<T> {
        let (n, m) = (m_mat.rows(), m_mat.cols());
        let mut out = Biquadratic::zero(n, m);
        for i in 0..n {
            for j in 0..m {
                let mij = m_mat.at(i, j).clone();
                if mij.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for l in 0..m {
                        let mkl = m_mat.at(k, l).clone();
                        if !mkl.is_zero() {
                            out.add_monomial(i, k, j, l, mij.clone() * mkl);
                        }
                    }
                }
            }
        }
        out
    }

    /// Extracts `M` with `F = <x, My>^2`, or `None` when `F` is not a
    /// perfect square.  Exact for exact scalars.
    pub fn is_perfect_square(&self) -> Option<Mat<T>> {
        if self.is_zero() {
            return Some(Mat::zeros(self.n, self.m));
        }
        // pivot: the largest coefficient of a monomial x_a^2 y_b^2 (= M_ab^2)
        let mut pivot: Option<(usize, usize)> = None;
        for a in 0..self.n {
            for b in 0..self.m {
                let c = self.monomial_coeff(a, a, b, b);
                if c.is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((a, b)),
                    Some((pa, pb)) => {
                        if c.abs() > self.monomial_coeff(pa, pa, pb, pb).abs() {
                            pivot = Some((a, b));
                        }
                    }
                }
            }
        }
        let (a, b) = pivot?;
        let mab = self.monomial_coeff(a, a, b, b).try_sqrt()?;
        let two_mab = T::from_int(2) * mab.clone();
        let mut m_mat = Mat::zeros(self.n, self.m);
        *m_mat.at_mut(a, b) = mab.clone();
        for d in 0..self.m {
            if d != b {
                *m_mat.at_mut(a, d) = self.monomial_coeff(a, a, b, d) / two_mab.clone();
            }
        }
        for c in 0..self.n {
            if c != a {
                *m_mat.at_mut(c, b) = self.monomial_coeff(a, c, b, b) / two_mab.clone();
            }
        }
        for c in 0..self.n {
            if c == a {
                continue;
            }
            for d in 0..self.m {
                if d == b {
                    continue;
                }
                let cross = self.monomial_coeff(a, c, b, d)
                    - T::from_int(2) * m_mat.at(a, d).clone() * m_mat.at(c, b).clone();
                *m_mat.at_mut(c, d) = cross / two_mab.clone();
            }
        }
        if Biquadratic::square_of_bilinear(&m_mat) == *self {
            Some(m_mat)
        } else {
            None
        }
    }
}

/// Quadratic form in `nvars` variables, stored as a symmetric matrix `Q`
/// with value `x^T Q x`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadForm<T> {
    q: Mat<T>,
}

impl<T: Scalar> QuadForm<T> {
    pub fn new(q: Mat<T>) -> Self {
        debug_assert!(q.is_symmetric());
        QuadForm { q }
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.q
    }

    pub fn eval(&self, x: &[T]) -> T {
        let qx = self.q.matvec(x);
        crate::linalg::dot(x, &qx)
    }

    /// Coefficient of the monomial `x_a x_c`.
    pub fn monomial_coeff(&self, a: usize, c: usize) -> T {
        self.q.at(a, c).clone() * mult::<T>(a, c)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }
}

/// Symmetric matrix of quadratic forms, e.g. the `x`-matrix `T(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticMatrixPencil<T> {
    size: usize,
    nvars: usize,
    entries: Vec<QuadForm<T>>,
}

impl<T: Scalar> QuadraticMatrixPencil<T> {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, j: usize, l: usize) -> &QuadForm<T> {
        &self.entries[j * self.size + l]
    }

    /// Numeric matrix at the point `x`.
    pub fn eval_matrix(&self, x: &[T]) -> Mat<T> {
        Mat::from_fn(self.size, self.size, |j, l| self.entry(j, l).eval(x))
    }

    /// `y^T T(x) y`.
    pub fn apply(&self, x: &[T], y: &[T]) -> T {
        let m = self.eval_matrix(x);
        crate::linalg::dot(y, &m.matvec(y))
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> QuadraticMatrixPencil<U> {
        QuadraticMatrixPencil {
            size: self.size,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .map(|e| QuadForm { q: e.q.map(&mut f) })
                .collect(),
        }
    }

    pub fn to_f64(&self) -> QuadraticMatrixPencil<f64> {
        self.map(|c| c.to_f64_lossy())
    }

    /// Exact symbolic determinant of a `3 x 3` pencil: a ternary sextic.
    pub fn determinant3(&self) -> Result<TernaryForm<T>, CoreError> {
        if self.size != 3 || self.nvars != 3 {
            return Err(CoreError::dims(
                "3x3 pencil in 3 variables",
                format!("{0}x{0} pencil in {1} variables", self.size, self.nvars),
            ));
        }
        let e = |j: usize, l: usize| TernaryForm::from_quadform(&self.entry(j, l).q);
        let term = |a: TernaryForm<T>, b: TernaryForm<T>, c: TernaryForm<T>| a.mul(&b).mul(&c);
        let mut det = term(e(0, 0), e(1, 1), e(2, 2));
        det = det.add(&term(e(0, 1), e(1, 2), e(2, 0)));
        det = det.add(&term(e(0, 2), e(1, 0), e(2, 1)));
        det = det.sub(&term(e(0, 2), e(1, 1), e(2, 0)));
        det = det.sub(&term(e(0, 0), e(1, 2), e(2, 1)));
        det = det.sub(&term(e(0, 1), e(1, 0), e(2, 2)));
        Ok(det)
    }
}

/// Quadratic form `Phi(Z) = <Z, CZ>` on `n x m` matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixQuadForm<T> {
    n: usize,
    m: usize,
    c: Mat<T>,
}

impl<T: Scalar> MatrixQuadForm<T> {
    /// Builds the form from a coefficient matrix acting on vectorised
    /// (row-major) matrices; `c` is symmetrised.
    pub fn new(n: usize, m: usize, c: Mat<T>) -> Result<Self, CoreError> {
        if c.rows() != n * m || c.cols() != n * m {
            return Err(CoreError::dims(
                format!("{0}x{0}", n * m),
                format!("{}x{}", c.rows(), c.cols()),
            ));
        }
        Ok(MatrixQuadForm {
            n,
            m,
            c: c.symmetrized(),
        })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        MatrixQuadForm {
            n,
            m,
            c: Mat::zeros(n * m, n * m),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coefficient_matrix(&self) -> &Mat<T> {
        &self.c
    }

    fn vidx(&self, i: usize, j: usize) -> usize {
        i * self.m + j
    }

    /// `Phi(Z)`.
    pub fn apply(&self, z: &Mat<T>) -> T {
        assert_eq!((z.rows(), z.cols()), (self.n, self.m));
        let v: Vec<T> = z.data().to_vec();
        let cv = self.c.matvec(&v);
        crate::linalg::dot(&v, &cv)
    }

    /// Restriction to rank-one matrices: `sigma(Phi)(x, y) = Phi(x (x) y)`.
    pub fn sigma(&self) -> Biquadratic<T> {
        let mut out = Biquadratic::zero(self.n, self.m);
        for i in 0..self.n {
            for j in 0..self.m {
                for k in 0..self.n {
                    for l in 0..self.m {
                        let v = self.c.at(self.vidx(i, j), self.vidx(k, l)).clone();
                        if !v.is_zero() {
                            out.add_monomial(i, k, j, l, v);
                        }
                    }
                }
            }
        }
        out
    }

    /// True iff `sigma(Phi)` vanishes identically, i.e. `Phi` is a linear
    /// combination of `2x2` minors.
    pub fn is_null_lagrangian(&self) -> bool {
        self.sigma().is_zero()
    }

    pub fn scaled(&self, s: &T) -> Self {
        MatrixQuadForm {
            n: self.n,
            m: self.m,
            c: self.c.scale(s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.m), (other.n, other.m));
        MatrixQuadForm {
            n: self.n,
            m: self.m,
            c: self.c.add(&other.c),
        }
    }
}

/// The symmetric representative `tau(F)` with `sigma(tau(F)) = F`.
pub fn tau<T: Scalar>(f: &Biquadratic<T>) -> MatrixQuadForm<T> {
    let (n, m) = (f.n(), f.m());
    let c = Mat::from_fn(n * m, n * m, |r, s| {
        let (i, j) = (r / m, r % m);
        let (k, l) = (s / m, s % m);
        f.tensor_coeff(i, k, j, l)
    });
    MatrixQuadForm { n, m, c }
}

/// The restriction map; see [`MatrixQuadForm::sigma`].
pub fn sigma<T: Scalar>(phi: &MatrixQuadForm<T>) -> Biquadratic<T> {
    phi.sigma()
}

/// The `2x2` minor forms `Z_ij Z_kl - Z_il Z_kj` over row pairs `i < k` and
/// column pairs `j < l`, in lexicographic order.  Empty when `n < 2` or
/// `m < 2`.
pub fn minors_basis<T: Scalar>(n: usize, m: usize) -> Vec<MatrixQuadForm<T>> {
    let mut out = Vec::new();
    if n < 2 || m < 2 {
        return out;
    }
    let half = T::from_ratio(1, 2);
    for i in 0..n {
        for k in (i + 1)..n {
            for j in 0..m {
                for l in (j + 1)..m {
                    let mut c = Mat::zeros(n * m, n * m);
                    let id = |a: usize, b: usize| a * m + b;
                    *c.at_mut(id(i, j), id(k, l)) = half.clone();
                    *c.at_mut(id(k, l), id(i, j)) = half.clone();
                    *c.at_mut(id(i, l), id(k, j)) = -half.clone();
                    *c.at_mut(id(k, j), id(i, l)) = -half.clone();
                    out.push(MatrixQuadForm { n, m, c });
                }
            }
        }
    }
    out
}

/// Frobenius inner product `<A, B> = trace(A B^T)`.
pub fn frobenius_inner<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> T {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    crate::linalg::dot(a.data(), b.data())
}
