//! Floating-point numerics: spectral decompositions, sphere sweeps for
//! global minimization of biquadratics, projective zero finding with exact
//! upgrades, and the eigenvalue-ratio domination constant.
//!
//! The global minimum of `F` over `|x| = |y| = 1` is computed through the
//! identity `min_y y^T T(x) y = lambda_min(T(x))`, which halves the search
//! dimension: a lattice sweep over the projective `x`-hemisphere followed by
//! alternating smallest-eigenvector refinement in `x` and `y`.

use crate::error::CoreError;
use crate::forms::{Biquadratic, QuadraticMatrixPencil};
use crate::linalg::{self, Mat};
use crate::scalar::{rationalize, Scalar};
use crate::{Grade, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Thresholds and search resolution used by all floating-point routines.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Tolerances {
    /// Relative threshold below which an eigenvalue counts as zero.
    pub eig_tol: f64,
    /// Function-value threshold for accepting a polished zero.
    pub zero_tol: f64,
    /// Projective distance below which two zeros are merged.
    pub dedupe_tol: f64,
    /// Points per sphere in the search lattice.
    pub grid_density: usize,
    /// Seed for the lattice orientation (deterministic per seed).
    pub seed: u64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig_tol: 1e-10,
            zero_tol: 1e-9,
            dedupe_tol: 1e-6,
            grid_density: 10_000,
            seed: 0,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.eig_tol <= 0.0 || self.zero_tol <= 0.0 || self.dedupe_tol <= 0.0 {
            return Err(CoreError::InvalidParameters(
                "tolerances must be strictly positive".into(),
            ));
        }
        if self.grid_density == 0 {
            return Err(CoreError::InvalidParameters(
                "grid density must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, column `i` pairing with `eigenvalues[i]`.
    pub eigenvectors: Mat<f64>,
    pub grade: Grade,
}

impl SpectralResult {
    pub fn max_abs_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0f64, |a, v| a.max(v.abs()))
    }
}

/// Symmetric eigendecomposition (nalgebra), eigenvalues sorted ascending.
pub fn spectral(m: &Mat<f64>) -> SpectralResult {
    assert_eq!(m.rows(), m.cols());
    let eig = nalgebra::SymmetricEigen::new(m.to_nalgebra());
    let n = m.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = Mat::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    SpectralResult {
        eigenvalues,
        eigenvectors,
        grade: Grade::Numeric,
    }
}

/// Smallest eigenvalue and a unit eigenvector of a symmetric matrix.
pub(crate) fn min_eig_sym(m: &Mat<f64>) -> (f64, Vec<f64>) {
    let s = spectral(m);
    let v = (0..m.rows()).map(|r| *s.eigenvectors.at(r, 0)).collect();
    (s.eigenvalues[0], v)
}

/// Orthonormal basis of the numerical kernel: eigenvectors with
/// `|lambda| <= eig_tol * ||M||`.
pub fn kernel_basis_f64(m: &Mat<f64>, tol: &Tolerances) -> Vec<Vec<f64>> {
    let s = spectral(m);
    let scale = s.max_abs_eigenvalue();
    let thresh = tol.eig_tol * scale;
    let mut basis = Vec::new();
    for (i, lam) in s.eigenvalues.iter().enumerate() {
        if lam.abs() <= thresh {
            basis.push((0..m.rows()).map(|r| *s.eigenvectors.at(r, i)).collect());
        }
    }
    basis
}

/// Exact rational kernel (tolerances ignored).
pub fn kernel_basis_exact(m: &Mat<Rational>) -> Vec<Vec<Rational>> {
    m.nullspace()
}

/// Result of [`domination_alpha`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DominationAlpha {
    /// `Q1 - alpha Q2` is positive semidefinite.
    Bounded(f64),
    /// `Q2` vanishes; any `alpha` works.
    Unbounded,
}

/// The domination constant `alpha = lambda_1 / lambda_2` where `lambda_1` is
/// the smallest nonzero eigenvalue of `Q1` and `lambda_2` the largest
/// eigenvalue of `Q2`; requires both PSD and `ker Q1` contained in `ker Q2`.
pub fn domination_alpha(
    q1: &Mat<f64>,
    q2: &Mat<f64>,
    tol: &Tolerances,
) -> Result<DominationAlpha, CoreError> {
    if q1.rows() != q1.cols() || q2.rows() != q2.cols() || q1.rows() != q2.rows() {
        return Err(CoreError::dims(
            format!("two {0}x{0} matrices", q1.rows()),
            format!(
                "{}x{} and {}x{}",
                q1.rows(),
                q1.cols(),
                q2.rows(),
                q2.cols()
            ),
        ));
    }
    let s1 = spectral(q1);
    let s2 = spectral(q2);
    let n1 = s1.max_abs_eigenvalue();
    let n2 = s2.max_abs_eigenvalue();
    if s1.eigenvalues[0] < -tol.eig_tol * n1 {
        return Err(CoreError::NotPositiveSemidefinite {
            min_eig: s1.eigenvalues[0],
        });
    }
    if s2.eigenvalues[0] < -tol.eig_tol * n2 {
        return Err(CoreError::NotPositiveSemidefinite {
            min_eig: s2.eigenvalues[0],
        });
    }
    if n2 <= tol.eig_tol * n1.max(1.0) {
        return Ok(DominationAlpha::Unbounded);
    }
    // kernel containment: Q2 must vanish on the kernel of Q1
    let contain_tol = tol.eig_tol.sqrt() * n2;
    for (i, lam) in s1.eigenvalues.iter().enumerate() {
        if lam.abs() <= tol.eig_tol * n1 {
            let v: Vec<f64> = (0..q1.rows()).map(|r| *s1.eigenvectors.at(r, i)).collect();
            if linalg::norm2(&q2.matvec(&v)) > contain_tol {
                return Err(CoreError::NotDominated);
            }
        }
    }
    let lambda1 = s1
        .eigenvalues
        .iter()
        .copied()
        .find(|l| *l > tol.eig_tol * n1);
    match lambda1 {
        None => Ok(DominationAlpha::Unbounded), // Q1 = 0 forces Q2 = 0
        Some(l1) => Ok(DominationAlpha::Bounded(l1 / n2)),
    }
}

fn box_muller(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Quasi-uniform lattice on the projective hemisphere of `S^{dim-1}`.
///
/// Dimension 3 uses a Fibonacci spiral with a seeded random orientation;
/// dimension 2 an angular grid; higher dimensions fall back to seeded
/// uniform samples.
pub fn unit_hemisphere_lattice(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    assert!(dim >= 1);
    let count = count.max(1);
    match dim {
        1 => vec![vec![1.0]],
        2 => (0..count)
            .map(|i| {
                let theta = std::f64::consts::PI * (i as f64 + 0.5) / count as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect(),
        3 => {
            let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rot = random_rotation3(&mut rng);
            (0..count)
                .map(|i| {
                    let z = (i as f64 + 0.5) / count as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = 2.0 * std::f64::consts::PI * (i as f64) / (golden * golden);
                    rot.matvec(&[r * phi.cos(), r * phi.sin(), z])
                })
                .collect()
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut v: Vec<f64> = (0..dim).map(|_| box_muller(&mut rng)).collect();
                    if let Some(first) = v.iter().find(|c| c.abs() > 1e-12) {
                        if *first < 0.0 {
                            v.iter_mut().for_each(|c| *c = -*c);
                        }
                    }
                    linalg::normalize(&v)
                })
                .collect()
        }
    }
}

fn random_rotation3(rng: &mut ChaCha8Rng) -> Mat<f64> {
    let g = nalgebra::DMatrix::from_fn(3, 3, |_, _| box_muller(rng));
    let qr = g.qr();
    Mat::from_nalgebra(&qr.q())
}

/// Approximate lattice spacing on the hemisphere.
pub fn lattice_spacing(dim: usize, count: usize) -> f64 {
    match dim {
        1 => 1.0,
        2 => std::f64::consts::PI / count as f64,
        3 => (2.0 * std::f64::consts::PI / count as f64).sqrt(),
        d => (1.0 / count as f64).powf(1.0 / (d as f64 - 1.0)) * 2.0,
    }
}

/// Cached lattice sweep of `lambda_min(T(x))`.
struct XScan {
    lattice: Vec<Vec<f64>>,
    values: Vec<f64>,
    spacing: f64,
}

fn scan_x_matrix(tx: &QuadraticMatrixPencil<f64>, tol: &Tolerances) -> XScan {
    let n = tx.nvars();
    let lattice = unit_hemisphere_lattice(n, tol.grid_density, tol.seed);
    let values = lattice
        .iter()
        .map(|x| spectral(&tx.eval_matrix(x)).eigenvalues[0])
        .collect();
    XScan {
        spacing: lattice_spacing(n, lattice.len()),
        lattice,
        values,
    }
}

/// Greedily picks up to `cap` indices with the lowest value, pairwise
/// separated by `sep` in projective distance.
fn separated_seeds(scan: &XScan, cap: usize, sep: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scan.lattice.len()).collect();
    order.sort_by(|&a, &b| scan.values[a].partial_cmp(&scan.values[b]).unwrap());
    let mut picked: Vec<usize> = Vec::new();
    for idx in order {
        if picked.len() >= cap {
            break;
        }
        if picked
            .iter()
            .all(|&p| linalg::projective_distance(&scan.lattice[idx], &scan.lattice[p]) > sep)
        {
            picked.push(idx);
        }
    }
    picked
}

/// Alternating smallest-eigenvector refinement from an `x` seed.
///
/// Each half-step solves its coordinate problem exactly (the minimizing unit
/// `y` for fixed `x` is the bottom eigenvector of `T(x)`, and symmetrically
/// in `x`), so the value decreases monotonically and eigenvalue crossings
/// need no continuous tracking.
fn alternating_refine(
    tx: &QuadraticMatrixPencil<f64>,
    sy: &QuadraticMatrixPencil<f64>,
    x0: &[f64],
    max_iter: usize,
) -> (Vec<f64>, Vec<f64>, f64) {
    let mut x = linalg::normalize(x0);
    let (mut value, mut y) = min_eig_sym(&tx.eval_matrix(&x));
    for _ in 0..max_iter {
        let (_, nx) = min_eig_sym(&sy.eval_matrix(&y));
        x = nx;
        let (lam, ny) = min_eig_sym(&tx.eval_matrix(&x));
        y = ny;
        if (value - lam).abs() <= 1e-15 * (1.0 + value.abs()) {
            value = lam;
            break;
        }
        value = lam;
    }
    (x, y, value)
}

/// Gauss-Newton with light Levenberg damping on a residual system.
pub(crate) fn gauss_newton(
    mut point: Vec<f64>,
    mut system: impl FnMut(&[f64]) -> (Vec<f64>, Mat<f64>),
    iters: usize,
) -> Vec<f64> {
    for _ in 0..iters {
        let (r, j) = system(&point);
        let rn = nalgebra::DVector::from_vec(r);
        let jn = j.to_nalgebra();
        let jtj = jn.transpose() * &jn;
        let jtr = jn.transpose() * &rn;
        let n = jtj.nrows();
        let damp = 1e-14 * (jtj.trace() / n as f64 + 1.0);
        let lhs = jtj + nalgebra::DMatrix::identity(n, n) * damp;
        let Some(chol) = lhs.cholesky() else { break };
        let delta = chol.solve(&jtr);
        let step: f64 = delta.norm();
        for (p, d) in point.iter_mut().zip(delta.iter()) {
            *p -= d;
        }
        if step < 1e-15 {
            break;
        }
    }
    point
}

/// Polishes a near-zero of `f` by Gauss-Newton on the gradient system with
/// unit-norm constraints.
fn polish_zero(f: &Biquadratic<f64>, x: &[f64], y: &[f64]) -> (Vec<f64>, Vec<f64>, f64) {
    let (n, m) = (f.n(), f.m());
    let mut p: Vec<f64> = x.to_vec();
    p.extend_from_slice(y);
    let p = gauss_newton(
        p,
        |p| {
            let (xs, ys) = (&p[..n], &p[n..]);
            let mut r = f.gradient(xs, ys);
            r.push(linalg::dot(xs, xs) - 1.0);
            r.push(linalg::dot(ys, ys) - 1.0);
            let h = f.hessian(xs, ys);
            let j = Mat::from_fn(n + m + 2, n + m, |i, c| {
                if i < n + m {
                    *h.at(i, c)
                } else if i == n + m {
                    if c < n {
                        2.0 * xs[c]
                    } else {
                        0.0
                    }
                } else if c >= n {
                    2.0 * ys[c - n]
                } else {
                    0.0
                }
            });
            (r, j)
        },
        40,
    );
    let x = linalg::normalize(&p[..n]);
    let y = linalg::normalize(&p[n..]);
    let v = f.evaluate(&x, &y);
    (x, y, v)
}

/// Result of [`min_on_spheres`].
#[derive(Debug, Clone)]
pub struct SphereMinimum {
    /// Refined minimum of `F` over `|x| = |y| = 1`.
    pub value: f64,
    /// Deduplicated refined minimizers attaining the minimum.
    pub minimizers: Vec<(Vec<f64>, Vec<f64>)>,
    pub grid_density: usize,
}

/// Global minimization of a biquadratic over the product of unit spheres.
///
/// A negative return value certifies that the form is not nonnegative.
pub fn min_on_spheres(f: &Biquadratic<f64>, tol: &Tolerances) -> SphereMinimum {
    let tx = f.x_matrix();
    let sy = f.y_matrix();
    let scan = scan_x_matrix(&tx, tol);
    let seeds = separated_seeds(&scan, 48, 4.0 * scan.spacing);
    let mut refined: Vec<(Vec<f64>, Vec<f64>, f64)> = seeds
        .iter()
        .map(|&i| alternating_refine(&tx, &sy, &scan.lattice[i], 120))
        .collect();
    refined.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap());
    let best = refined.first().map_or(f64::INFINITY, |r| r.2);
    let slack = tol.zero_tol.max(1e-12 * (1.0 + best.abs()));
    let mut minimizers: Vec<(Vec<f64>, Vec<f64>)> = Vec::new();
    for (x, y, v) in refined {
        if v > best + slack {
            break;
        }
        let dup = minimizers.iter().any(|(mx, my)| {
            linalg::projective_distance(mx, &x) <= tol.dedupe_tol
                && linalg::projective_distance(my, &y) <= tol.dedupe_tol
        });
        if !dup {
            minimizers.push((x, y));
        }
    }
    SphereMinimum {
        value: best,
        minimizers,
        grid_density: tol.grid_density,
    }
}

/// A projective zero of a nonnegative biquadratic, with second-order data.
#[derive(Debug, Clone)]
pub struct ZeroDatum {
    /// Unit representative of the `x`-component.
    pub x: Vec<f64>,
    /// Unit representative of the `y`-component.
    pub y: Vec<f64>,
    pub value: f64,
    pub gradient: Vec<f64>,
    /// Symmetric `(n + m)`-square Hessian at the zero.
    pub hessian: Mat<f64>,
    /// Kernel of the Hessian, split into `(v, w)` pairs.
    pub kernel: Vec<(Vec<f64>, Vec<f64>)>,
    /// Exact rational certificate, when reconstruction succeeded.
    pub exact: Option<ExactZero>,
}

/// Exact rational zero data (projective representatives, not normalized).
#[derive(Debug, Clone)]
pub struct ExactZero {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub hessian: Mat<Rational>,
    pub kernel: Vec<(Vec<Rational>, Vec<Rational>)>,
}

impl ZeroDatum {
    pub fn grade(&self) -> Grade {
        if self.exact.is_some() {
            Grade::Exact
        } else {
            Grade::Numeric
        }
    }

    /// Builds a fully exact datum from a rational projective zero; fails if
    /// the point is not an exact critical zero of `f`.
    pub fn from_exact_point(
        f: &Biquadratic<Rational>,
        x: Vec<Rational>,
        y: Vec<Rational>,
        tol: &Tolerances,
    ) -> Result<ZeroDatum, CoreError> {
        let value = f.evaluate(&x, &y);
        let grad = f.gradient(&x, &y);
        if !value.is_zero() || grad.iter().any(|g| !g.is_zero()) {
            let gn: f64 = grad
                .iter()
                .map(|g| g.to_f64_lossy().powi(2))
                .sum::<f64>()
                .sqrt();
            return Err(CoreError::NotCriticalZero {
                value: value.to_string(),
                grad_norm: format!("{gn:.3e}"),
            });
        }
        let hessian_q = f.hessian(&x, &y);
        let kernel_q = hessian_q.nullspace();
        let n = f.n();
        let kernel_pairs: Vec<(Vec<Rational>, Vec<Rational>)> = kernel_q
            .iter()
            .map(|v| (v[..n].to_vec(), v[n..].to_vec()))
            .collect();
        let xf = linalg::normalize(&x.iter().map(|c| c.to_f64_lossy()).collect::<Vec<_>>());
        let yf = linalg::normalize(&y.iter().map(|c| c.to_f64_lossy()).collect::<Vec<_>>());
        let ff = f.to_f64();
        let hess_f = ff.hessian(&xf, &yf);
        let kernel_f = kernel_basis_f64(&hess_f, tol)
            .into_iter()
            .map(|v| (v[..n].to_vec(), v[n..].to_vec()))
            .collect();
        Ok(ZeroDatum {
            x: xf.clone(),
            y: yf.clone(),
            value: ff.evaluate(&xf, &yf),
            gradient: ff.gradient(&xf, &yf),
            hessian: hess_f,
            kernel: kernel_f,
            exact: Some(ExactZero {
                x,
                y,
                hessian: hessian_q,
                kernel: kernel_pairs,
            }),
        })
    }
}

/// Numeric certificate that no further zeros exist: the sweep minimum away
/// from the reported zeros.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SearchEvidence {
    pub grid_density: usize,
    /// Lattice points within this projective distance of a found zero are
    /// excluded from the margin.
    pub exclusion_radius: f64,
    /// Smallest sweep value outside all exclusion balls.
    pub min_outside: Option<f64>,
    /// The zero list hit its cap; the zero set may be infinite.
    pub capped: bool,
}

/// Result of [`find_zeros`].
#[derive(Debug, Clone)]
pub struct ZeroSearch {
    pub zeros: Vec<ZeroDatum>,
    pub evidence: SearchEvidence,
    /// Refined sweep minimum (nonnegativity check).
    pub sweep_min: f64,
}

impl ZeroSearch {
    pub fn all_exact(&self) -> bool {
        self.zeros.iter().all(|z| z.exact.is_some())
    }
}

const MAX_ZEROS: usize = 40;

/// Locates the projective zeros of a nonnegative biquadratic.
///
/// Zeros are found by the hemisphere sweep, refined by alternating
/// eigenvector descent, polished by Gauss-Newton on the gradient system, and
/// upgraded to exact grade when continued-fraction reconstruction (with
/// denominators up to `10^6`) produces a point where `F` and its gradient
/// vanish exactly.  The search is heuristic; `evidence` records the numeric
/// exhaustiveness certificate.
pub fn find_zeros(f: &Biquadratic<Rational>, tol: &Tolerances) -> Result<ZeroSearch, CoreError> {
    tol.validate()?;
    let ff = f.to_f64();
    let scale = ff.max_abs_coeff().max(1.0);
    let tx = ff.x_matrix();
    let sy = ff.y_matrix();
    let scan = scan_x_matrix(&tx, tol);

    let accept = tol.zero_tol * scale;
    let candidate_cut = (5.0 * scan.spacing).powi(2) * scale * 25.0;
    let seeds = separated_seeds(&scan, 160, 3.0 * scan.spacing);

    let mut refined: Vec<(Vec<f64>, Vec<f64>, f64)> = Vec::new();
    let mut sweep_min = f64::INFINITY;
    for &i in &seeds {
        if scan.values[i] > candidate_cut && refined.len() > 8 {
            break;
        }
        let (x, y, v) = alternating_refine(&tx, &sy, &scan.lattice[i], 120);
        sweep_min = sweep_min.min(v);
        if v <= accept.max(1e-4 * scale) {
            let (px, py, pv) = polish_zero(&ff, &x, &y);
            sweep_min = sweep_min.min(pv);
            if pv.abs() <= accept {
                refined.push((px, py, pv));
            }
        }
    }
    if sweep_min < -accept {
        let (wx, wy, wv, grade) = exact_witness(f, &refined, sweep_min);
        return Err(CoreError::NegativeForm {
            value: wv,
            witness_x: wx,
            witness_y: wy,
            grade,
        });
    }

    refined.sort_by(|a, b| a.2.abs().partial_cmp(&b.2.abs()).unwrap());
    let mut capped = false;
    let mut zeros: Vec<ZeroDatum> = Vec::new();
    for (x, y, v) in refined {
        if zeros.len() >= MAX_ZEROS {
            capped = true;
            break;
        }
        let dup = zeros.iter().any(|z| {
            linalg::projective_distance(&z.x, &x) <= tol.dedupe_tol
                && linalg::projective_distance(&z.y, &y) <= tol.dedupe_tol
        });
        if dup {
            continue;
        }
        zeros.push(build_zero_datum(f, &ff, x, y, v, tol));
    }

    // exclusion balls must dominate the lattice pitch for the margin to be
    // bounded away from zero
    let exclusion_radius = tol.dedupe_tol.max(3.0 * scan.spacing);
    let mut min_outside: Option<f64> = None;
    for (i, xp) in scan.lattice.iter().enumerate() {
        let excluded = zeros
            .iter()
            .any(|z| linalg::projective_distance(&z.x, xp) <= exclusion_radius);
        if !excluded {
            min_outside =
                Some(min_outside.map_or(scan.values[i], |m: f64| m.min(scan.values[i])));
        }
    }

    Ok(ZeroSearch {
        zeros,
        evidence: SearchEvidence {
            grid_density: tol.grid_density,
            exclusion_radius,
            min_outside,
            capped,
        },
        sweep_min,
    })
}

fn exact_witness(
    f: &Biquadratic<Rational>,
    refined: &[(Vec<f64>, Vec<f64>, f64)],
    sweep_min: f64,
) -> (Vec<f64>, Vec<f64>, f64, Grade) {
    let worst = refined
        .iter()
        .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap())
        .cloned();
    let Some((x, y, v)) = worst else {
        return (Vec::new(), Vec::new(), sweep_min, Grade::Numeric);
    };
    if let (Some(xq), Some(yq)) = (
        rationalize_projective(&x, 1_000_000, 1e-7),
        rationalize_projective(&y, 1_000_000, 1e-7),
    ) {
        let exact_val = f.evaluate(&xq, &yq);
        if exact_val < Rational::zero() {
            return (x, y, exact_val.to_f64_lossy(), Grade::Exact);
        }
    }
    (x, y, v, Grade::Numeric)
}

fn build_zero_datum(
    f: &Biquadratic<Rational>,
    ff: &Biquadratic<f64>,
    x: Vec<f64>,
    y: Vec<f64>,
    value: f64,
    tol: &Tolerances,
) -> ZeroDatum {
    // exact upgrade by rational reconstruction
    if let (Some(xq), Some(yq)) = (
        rationalize_projective(&x, 1_000_000, 1e-7),
        rationalize_projective(&y, 1_000_000, 1e-7),
    ) {
        if let Ok(datum) = ZeroDatum::from_exact_point(f, xq, yq, tol) {
            return datum;
        }
    }
    let n = f.n();
    let gradient = ff.gradient(&x, &y);
    let hessian = ff.hessian(&x, &y);
    let kernel = kernel_basis_f64(&hessian, tol)
        .into_iter()
        .map(|v| (v[..n].to_vec(), v[n..].to_vec()))
        .collect();
    ZeroDatum {
        x,
        y,
        value,
        gradient,
        hessian,
        kernel,
        exact: None,
    }
}

/// Projective rational reconstruction: scales the vector so its largest
/// component is `1`, then rationalizes every coordinate.
pub fn rationalize_projective(v: &[f64], max_den: u64, accept_tol: f64) -> Option<Vec<Rational>> {
    let mut imax = 0;
    for (i, c) in v.iter().enumerate() {
        if c.abs() > v[imax].abs() {
            imax = i;
        }
    }
    if v[imax] == 0.0 {
        return None;
    }
    let scale = v[imax];
    v.iter()
        .map(|c| {
            let t = c / scale;
            if t.abs() < 1e-9 {
                Some(Rational::zero())
            } else {
                rationalize(t, max_den, accept_tol)
            }
        })
        .collect()
}

/// Nonnegativity report for a rational biquadratic.
#[derive(Debug, Clone)]
pub struct NonnegativityReport {
    pub nonnegative: bool,
    /// Refined sphere minimum.
    pub min: f64,
    /// Witness of negativity, when found.
    pub witness: Option<(Vec<f64>, Vec<f64>)>,
    pub grade: Grade,
}

/// Sweep-based nonnegativity oracle with an exact negativity upgrade.
pub fn certify_nonnegative(f: &Biquadratic<Rational>, tol: &Tolerances) -> NonnegativityReport {
    let ff = f.to_f64();
    let scale = ff.max_abs_coeff().max(1.0);
    let sm = min_on_spheres(&ff, tol);
    if sm.value >= -tol.zero_tol * scale {
        return NonnegativityReport {
            nonnegative: true,
            min: sm.value,
            witness: None,
            grade: Grade::Numeric,
        };
    }
    let witness = sm.minimizers.first().cloned();
    let mut grade = Grade::Numeric;
    if let Some((x, y)) = &witness {
        if let (Some(xq), Some(yq)) = (
            rationalize_projective(x, 1_000_000, 1e-7),
            rationalize_projective(y, 1_000_000, 1e-7),
        ) {
            if f.evaluate(&xq, &yq) < Rational::zero() {
                grade = Grade::Exact;
            }
        }
    }
    NonnegativityReport {
        nonnegative: false,
        min: sm.value,
        witness,
        grade,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn norm_sq_biquadratic(n: usize, m: usize) -> Biquadratic<Rational> {
        let mut f = Biquadratic::zero(n, m);
        for i in 0..n {
            for j in 0..m {
                f.add_monomial(i, i, j, j, q(1, 1));
            }
        }
        f
    }

    #[test]
    fn tolerances_validate() {
        assert!(Tolerances::default().validate().is_ok());
        let bad = Tolerances {
            zero_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn spectral_reconstruction_error_is_small() {
        let m = Mat::from_rows(vec![
            vec![2.0, -1.0, 0.5],
            vec![-1.0, 3.0, 0.0],
            vec![0.5, 0.0, -1.0],
        ]);
        let s = spectral(&m);
        let mut recon = Mat::zeros(3, 3);
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    *recon.at_mut(i, j) +=
                        s.eigenvalues[k] * s.eigenvectors.at(i, k) * s.eigenvectors.at(j, k);
                }
            }
        }
        let err = recon.sub(&m).max_abs();
        assert!(err <= 1e-10 * s.max_abs_eigenvalue());
        assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn kernel_basis_examples() {
        let tol = Tolerances::default();
        let zero = Mat::zeros(3, 3);
        assert_eq!(kernel_basis_f64(&zero, &tol).len(), 3);

        // eigenvalues of the reference pencil at (1,1,1) are {0, 362, 666}
        let mut d = Mat::zeros(3, 3);
        *d.at_mut(1, 1) = 362.0;
        *d.at_mut(2, 2) = 666.0;
        let k = kernel_basis_f64(&d, &tol);
        assert_eq!(k.len(), 1);
        assert!((k[0][0].abs() - 1.0).abs() < 1e-12);

        // exact rational kernel of a rank-2 4x4 matrix
        let m = Mat::from_rows(vec![
            vec![q(1, 1), q(2, 1), q(3, 1), q(4, 1)],
            vec![q(2, 1), q(4, 1), q(6, 1), q(8, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1)],
            vec![q(2, 1), q(5, 1), q(7, 1), q(9, 1)],
        ]);
        assert_eq!(kernel_basis_exact(&m).len(), 2);
    }

    #[test]
    fn domination_alpha_examples() {
        let tol = Tolerances::default();
        let id = Mat::<f64>::identity(3);
        match domination_alpha(&id, &id, &tol).unwrap() {
            DominationAlpha::Bounded(a) => assert!((a - 1.0).abs() < 1e-12),
            _ => panic!("expected bounded"),
        }

        let q1 = Mat::from_rows(vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ]);
        let q2 = Mat::from_rows(vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ]);
        // min nonzero eigenvalue of Q1 is 1, max of Q2 is 1
        match domination_alpha(&q1, &q2, &tol).unwrap() {
            DominationAlpha::Bounded(a) => assert!((a - 1.0).abs() < 1e-12),
            _ => panic!("expected bounded"),
        }

        let q1 = Mat::from_rows(vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        let q2 = Mat::from_rows(vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        assert!(matches!(
            domination_alpha(&q1, &q2, &tol),
            Err(CoreError::NotDominated)
        ));

        let z = Mat::zeros(2, 2);
        let q1 = Mat::from_rows(vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert!(matches!(
            domination_alpha(&q1, &z, &tol).unwrap(),
            DominationAlpha::Unbounded
        ));
    }

    pub(crate) fn random_dominating_pair(
        rng: &mut rand::rngs::StdRng,
        dim: usize,
    ) -> (Mat<f64>, Mat<f64>) {
        let g = nalgebra::DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
        let u = g.qr().q();
        let k1 = rng.gen_range(0..dim);
        let extra = rng.gen_range(0..=(dim - k1));
        let mut d1 = vec![0.0; dim];
        let mut d2 = vec![0.0; dim];
        for i in 0..dim {
            if i >= k1 {
                d1[i] = rng.gen_range(0.1..5.0);
            }
            if i >= k1 + extra {
                d2[i] = rng.gen_range(0.0..5.0);
            }
        }
        let mk = |d: &[f64]| {
            let dm = nalgebra::DMatrix::from_diagonal(&nalgebra::DVector::from_vec(d.to_vec()));
            Mat::from_nalgebra(&(&u * dm * u.transpose()))
        };
        (mk(&d1), mk(&d2))
    }

    #[test]
    fn domination_alpha_certificate_on_random_psd_pairs() {
        use rand::rngs::StdRng;
        let tol = Tolerances::default();
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..25 {
            let (q1, q2) = random_dominating_pair(&mut rng, 4);
            let alpha = match domination_alpha(&q1, &q2, &tol).unwrap() {
                DominationAlpha::Bounded(a) => a,
                DominationAlpha::Unbounded => continue,
            };
            let diff = q1.sub(&q2.scale(&alpha));
            let s = spectral(&diff);
            let n1 = spectral(&q1).max_abs_eigenvalue();
            assert!(s.eigenvalues[0] >= -1e-10 * n1.max(1.0));
        }
    }

    #[test]
    fn min_on_spheres_norm_product() {
        let f = norm_sq_biquadratic(3, 3).to_f64();
        let tol = Tolerances {
            grid_density: 2000,
            ..Default::default()
        };
        let sm = min_on_spheres(&f, &tol);
        assert!((sm.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn min_on_spheres_finds_negative_witness() {
        // |x|^2 |y|^2 - 2 (x_0 y_0)^2 has minimum -1 at (e_0, e_0)
        let mut f = norm_sq_biquadratic(3, 3);
        f.add_monomial(0, 0, 0, 0, q(-2, 1));
        let tol = Tolerances {
            grid_density: 4000,
            ..Default::default()
        };
        let sm = min_on_spheres(&f.to_f64(), &tol);
        assert!((sm.value + 1.0).abs() < 1e-8);
        let (x, y) = &sm.minimizers[0];
        assert!(x[0].abs() > 0.999 && y[0].abs() > 0.999);

        let report = certify_nonnegative(&f, &tol);
        assert!(!report.nonnegative);
        assert_eq!(report.grade, Grade::Exact);
    }

    #[test]
    fn find_zeros_none_for_positive_form() {
        let f = norm_sq_biquadratic(3, 3);
        let tol = Tolerances {
            grid_density: 2000,
            ..Default::default()
        };
        let zs = find_zeros(&f, &tol).unwrap();
        assert!(zs.zeros.is_empty());
        assert!(zs.evidence.min_outside.unwrap() > 0.9);
    }

    #[test]
    fn find_zeros_rejects_negative_form() {
        let mut f = norm_sq_biquadratic(3, 3);
        f.add_monomial(0, 0, 0, 0, q(-2, 1));
        let tol = Tolerances {
            grid_density: 2000,
            ..Default::default()
        };
        assert!(matches!(
            find_zeros(&f, &tol),
            Err(CoreError::NegativeForm { .. })
        ));
    }

    #[test]
    fn find_zeros_on_sos_form_with_zero_at_e0e0() {
        // (x_0 y_1 - x_1 y_0)^2 + (x_2 y_2)^2 vanishes at (e_0, e_0)
        let mut m1 = Mat::zeros(3, 3);
        *m1.at_mut(0, 1) = q(1, 1);
        *m1.at_mut(1, 0) = q(-1, 1);
        let mut m2 = Mat::zeros(3, 3);
        *m2.at_mut(2, 2) = q(1, 1);
        let f = Biquadratic::square_of_bilinear(&m1).add(&Biquadratic::square_of_bilinear(&m2));
        // direct substitution oracle
        let e0 = vec![q(1, 1), q(0, 1), q(0, 1)];
        assert!(f.evaluate(&e0, &e0).is_zero());
        assert!(f.gradient(&e0, &e0).iter().all(|g| g.is_zero()));

        let tol = Tolerances {
            grid_density: 3000,
            ..Default::default()
        };
        let zs = find_zeros(&f, &tol).unwrap();
        assert!(!zs.zeros.is_empty());
        for z in &zs.zeros {
            assert!(z.value.abs() <= tol.zero_tol * 2.0);
            if let Some(ex) = &z.exact {
                assert!(f.evaluate(&ex.x, &ex.y).is_zero());
            }
        }
    }

    #[test]
    fn exact_zero_datum_rejects_non_zero() {
        let f = norm_sq_biquadratic(3, 3);
        let e0 = vec![q(1, 1), q(0, 1), q(0, 1)];
        assert!(matches!(
            ZeroDatum::from_exact_point(&f, e0.clone(), e0, &Tolerances::default()),
            Err(CoreError::NotCriticalZero { .. })
        ));
    }

    #[test]
    fn lattice_sizes_and_projectivity() {
        let lat = unit_hemisphere_lattice(3, 500, 1);
        assert_eq!(lat.len(), 500);
        for p in &lat {
            assert!((linalg::norm2(p) - 1.0).abs() < 1e-12);
        }
        assert_eq!(unit_hemisphere_lattice(2, 100, 0).len(), 100);
        assert_eq!(unit_hemisphere_lattice(1, 10, 0).len(), 1);
        assert_eq!(unit_hemisphere_lattice(4, 64, 7).len(), 64);
    }

    #[test]
    fn rationalize_projective_recovers_scaled_points() {
        // (1, 1/2, 0) scaled to unit length
        let v = linalg::normalize(&[1.0, 0.5, 0.0]);
        let r = rationalize_projective(&v, 1_000_000, 1e-7).unwrap();
        assert_eq!(r, vec![q(1, 1), q(1, 2), q(0, 1)]);
    }
}
