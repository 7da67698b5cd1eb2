//! Homogeneous polynomials in three variables over a generic scalar.
//!
//! Dense representation indexed by exponent pairs `(a, b)` with the third
//! exponent implied by homogeneity.  Degree six is the case of interest (the
//! determinant of an `x`-matrix pencil); products, exact linear changes of
//! coordinates and an exact polynomial square root are provided.

use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Homogeneous polynomial of fixed degree in variables `x, y, z`.
#[derive(Debug, Clone, PartialEq)]
pub struct TernaryForm<T> {
    degree: usize,
    coef: Vec<T>,
}

fn term_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

impl<T: Scalar> TernaryForm<T> {
    pub fn zero(degree: usize) -> Self {
        TernaryForm {
            degree,
            coef: vec![T::zero(); term_count(degree)],
        }
    }

    /// Coefficients ordered by `(a, b)` with `a` ascending then `b`
    /// ascending; the `z`-exponent is `degree - a - b`.
    pub fn from_coeffs(degree: usize, coef: Vec<T>) -> Self {
        assert_eq!(coef.len(), term_count(degree));
        TernaryForm { degree, coef }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        debug_assert!(a + b <= self.degree);
        a * (self.degree + 1) - a * (a.saturating_sub(1)) / 2 + b
    }

    /// Coefficient of `x^a y^b z^c`; requires `a + b + c = degree`.
    pub fn coeff(&self, a: usize, b: usize, c: usize) -> T {
        assert_eq!(a + b + c, self.degree);
        self.coef[self.idx(a, b)].clone()
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, c: usize, v: T) {
        assert_eq!(a + b + c, self.degree);
        let id = self.idx(a, b);
        self.coef[id] = v;
    }

    pub fn add_coeff(&mut self, a: usize, b: usize, v: T) {
        let id = self.idx(a, b);
        self.coef[id] = self.coef[id].clone() + v;
    }

    /// Iterator over `(a, b, c, coefficient)` of the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &T)> {
        let d = self.degree;
        (0..=d).flat_map(move |a| {
            (0..=(d - a)).filter_map(move |b| {
                let v = &self.coef[self.idx(a, b)];
                if v.is_zero() {
                    None
                } else {
                    Some((a, b, d - a - b, v))
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coef.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), 3);
        let d = self.degree;
        // power tables
        let pows = |v: &T| -> Vec<T> {
            let mut p = Vec::with_capacity(d + 1);
            p.push(T::one());
            for i in 1..=d {
                p.push(p[i - 1].clone() * v.clone());
            }
            p
        };
        let (px, py, pz) = (pows(&x[0]), pows(&x[1]), pows(&x[2]));
        let mut acc = T::zero();
        for a in 0..=d {
            for b in 0..=(d - a) {
                let co = &self.coef[self.idx(a, b)];
                if !co.is_zero() {
                    acc = acc + co.clone() * px[a].clone() * py[b].clone() * pz[d - a - b].clone();
                }
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `var` (0, 1 or 2).
    pub fn partial(&self, var: usize) -> TernaryForm<T> {
        assert!(var < 3);
        if self.degree == 0 {
            return TernaryForm::zero(0);
        }
        let mut out = TernaryForm::zero(self.degree - 1);
        for a in 0..=self.degree {
            for b in 0..=(self.degree - a) {
                let co = self.coef[self.idx(a, b)].clone();
                if co.is_zero() {
                    continue;
                }
                let c = self.degree - a - b;
                let (e, na, nb) = match var {
                    0 => (a, a.wrapping_sub(1), b),
                    1 => (b, a, b.wrapping_sub(1)),
                    _ => (c, a, b),
                };
                if e > 0 {
                    out.add_coeff(na, nb, co * T::from_int(e as i64));
                }
            }
        }
        out
    }

    pub fn gradient_at(&self, x: &[T]) -> Vec<T> {
        (0..3).map(|v| self.partial(v).eval(x)).collect()
    }

    pub fn hessian_at(&self, x: &[T]) -> Mat<T> {
        let parts: Vec<TernaryForm<T>> = (0..3).map(|v| self.partial(v)).collect();
        Mat::from_fn(3, 3, |i, j| parts[i].partial(j).eval(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        TernaryForm {
            degree: self.degree,
            coef: self
                .coef
                .iter()
                .zip(&other.coef)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        TernaryForm {
            degree: self.degree,
            coef: self
                .coef
                .iter()
                .zip(&other.coef)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scaled(&self, s: &T) -> Self {
        TernaryForm {
            degree: self.degree,
            coef: self.coef.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TernaryForm::zero(self.degree + other.degree);
        for (a1, b1, _, v1) in self.terms() {
            for (a2, b2, _, v2) in other.terms() {
                out.add_coeff(a1 + a2, b1 + b2, v1.clone() * v2.clone());
            }
        }
        out
    }

    /// Degree-2 form from a symmetric `3 x 3` matrix `Q` (value `x^T Q x`).
    pub fn from_quadform(q: &Mat<T>) -> Self {
        assert_eq!((q.rows(), q.cols()), (3, 3));
        let mut out = TernaryForm::zero(2);
        let exps = |v: usize| match v {
            0 => (1usize, 0usize),
            1 => (0, 1),
            _ => (0, 0),
        };
        for i in 0..3 {
            for j in 0..3 {
                let v = q.at(i, j).clone();
                if !v.is_zero() {
                    let (a1, b1) = exps(i);
                    let (a2, b2) = exps(j);
                    out.add_coeff(a1 + a2, b1 + b2, v);
                }
            }
        }
        out
    }

    /// `f(Ax)` for a linear change of coordinates `A` (`3 x 3`).
    pub fn compose_linear(&self, a_mat: &Mat<T>) -> Self {
        assert_eq!((a_mat.rows(), a_mat.cols()), (3, 3));
        let lin = |i: usize| -> TernaryForm<T> {
            let mut l = TernaryForm::zero(1);
            l.add_coeff(1, 0, a_mat.at(i, 0).clone());
            l.add_coeff(0, 1, a_mat.at(i, 1).clone());
            l.add_coeff(0, 0, a_mat.at(i, 2).clone());
            l
        };
        let (lx, ly, lz) = (lin(0), lin(1), lin(2));
        let mut out = TernaryForm::zero(self.degree);
        for (a, b, c, v) in self.terms() {
            let mut term = TernaryForm::zero(0);
            term.add_coeff(0, 0, v.clone());
            for _ in 0..a {
                term = term.mul(&lx);
            }
            for _ in 0..b {
                term = term.mul(&ly);
            }
            for _ in 0..c {
                term = term.mul(&lz);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> TernaryForm<U> {
        TernaryForm {
            degree: self.degree,
            coef: self.coef.iter().map(|c| f(c)).collect(),
        }
    }

    pub fn to_f64(&self) -> TernaryForm<f64> {
        self.map(|c| c.to_f64_lossy())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coef
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.to_f64_lossy().abs()))
    }

    /// Lexicographically largest exponent with nonzero coefficient.
    fn leading_exponent(&self) -> Option<(usize, usize, usize)> {
        let d = self.degree;
        for a in (0..=d).rev() {
            for b in (0..=(d - a)).rev() {
                if !self.coef[self.idx(a, b)].is_zero() {
                    return Some((a, b, d - a - b));
                }
            }
        }
        None
    }

    /// Exact polynomial square root: returns `c` with `self = c^2`, or
    /// `None`.  Uses leading-term division in lexicographic order.
    pub fn try_sqrt_form(&self) -> Option<TernaryForm<T>> {
        if self.degree % 2 != 0 {
            return None;
        }
        let h = self.degree / 2;
        if self.is_zero() {
            return Some(TernaryForm::zero(h));
        }
        let (la, lb, lc) = self.leading_exponent()?;
        if la % 2 != 0 || lb % 2 != 0 || lc % 2 != 0 {
            return None;
        }
        let lead = self.coeff(la, lb, lc).try_sqrt()?;
        let (ha, hb) = (la / 2, lb / 2);
        let mut root = TernaryForm::zero(h);
        root.add_coeff(ha, hb, lead.clone());
        let two_lead = T::from_int(2) * lead;
        // at most one new term per monomial of the root
        for _ in 0..=term_count(h) + term_count(self.degree) {
            let r = self.sub(&root.mul(&root));
            let Some((ma, mb, mc)) = r.leading_exponent() else {
                return Some(root);
            };
            if ma < ha || mb < hb || mc < (h - ha - hb) {
                return None;
            }
            let (ea, eb) = (ma - ha, mb - hb);
            // the new term must be lexicographically below the root's leading term
            if (ea, eb) >= (ha, hb) {
                return None;
            }
            let t = r.coeff(ma, mb, mc) / two_lead.clone();
            root.add_coeff(ea, eb, t);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn cube(a: i64, b: i64, c3: i64) -> TernaryForm<Rational> {
        // a x^3 + b y z^2 + c3 x y z
        let mut f = TernaryForm::zero(3);
        f.add_coeff(3, 0, q(a, 1));
        f.add_coeff(0, 1, q(b, 1));
        f.add_coeff(1, 1, q(c3, 1));
        f
    }

    #[test]
    fn eval_and_partials() {
        let f = cube(1, 1, 0); // x^3 + y z^2
        let p = [q(2, 1), q(3, 1), q(1, 2)];
        assert_eq!(f.eval(&p), q(8, 1) + q(3, 4));
        let fx = f.partial(0);
        assert_eq!(fx.eval(&p), q(12, 1));
        let fz = f.partial(2);
        assert_eq!(fz.eval(&p), q(3, 1)); // 2 y z = 3
    }

    #[test]
    fn euler_identity() {
        let f = cube(2, -3, 5);
        let p = [q(1, 3), q(-2, 1), q(7, 5)];
        let g = f.gradient_at(&p);
        let dot: Rational = (0..3).map(|i| p[i].clone() * g[i].clone()).sum();
        assert_eq!(dot, q(3, 1) * f.eval(&p));
    }

    #[test]
    fn hessian_matches_second_partials() {
        let f = cube(1, 2, -1);
        let p = [q(1, 1), q(1, 1), q(1, 1)];
        let h = f.hessian_at(&p);
        assert!(h.is_symmetric());
        assert_eq!(*h.at(0, 0), q(6, 1)); // d2/dx2 (x^3) = 6x
    }

    #[test]
    fn product_degree_and_values() {
        let f = cube(1, 1, 0);
        let g = f.mul(&f);
        assert_eq!(g.degree(), 6);
        let p = [q(1, 2), q(2, 1), q(-1, 1)];
        assert_eq!(g.eval(&p), f.eval(&p).clone() * f.eval(&p));
    }

    #[test]
    fn sqrt_recovers_cubic() {
        let c = cube(1, 1, 0); // x^3 + y z^2
        let f = c.mul(&c);
        let got = f.try_sqrt_form().expect("square");
        assert!(got == c || got == c.scaled(&q(-1, 1)));

        // x^6 + y^6 is not a square
        let mut g = TernaryForm::zero(6);
        g.add_coeff(6, 0, q(1, 1));
        g.add_coeff(0, 6, q(1, 1));
        assert!(g.try_sqrt_form().is_none());

        // negative leading coefficient is not a square
        let neg = f.scaled(&q(-1, 1));
        assert!(neg.try_sqrt_form().is_none());
    }

    #[test]
    fn sqrt_of_generic_squares() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let mut c = TernaryForm::zero(3);
            for a in 0..=3usize {
                for b in 0..=(3 - a) {
                    c.add_coeff(a, b, q(rng.gen_range(-9..=9), 1));
                }
            }
            let f = c.mul(&c);
            if c.is_zero() {
                continue;
            }
            let got = f.try_sqrt_form().expect("square of a random cubic");
            assert!(got == c || got == c.scaled(&q(-1, 1)));
        }
    }

    #[test]
    fn compose_linear_matches_pointwise() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(9);
        let f = cube(3, -2, 7);
        let a = Mat::from_fn(3, 3, |i, j| {
            q(if i == j { 1 } else { 0 }, 1) + q(rng.gen_range(-3..=3), 2)
        });
        let g = f.compose_linear(&a);
        for _ in 0..20 {
            let p: Vec<Rational> = (0..3).map(|_| q(rng.gen_range(-5..=5), 3)).collect();
            let ap = a.matvec(&p);
            assert_eq!(g.eval(&p), f.eval(&ap));
        }
    }
}
