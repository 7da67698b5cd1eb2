//! Certification toolkit for quasiconvex quadratic forms on matrices and
//! nonnegative biquadratic forms.
//!
//! The crate is organised around one pipeline: a biquadratic form `F(x, y)`
//! (equivalently, a quadratic form on matrices modulo null Lagrangians) is
//! checked for nonnegativity, its projective zeros are located and upgraded to
//! exact rational points where possible, the subspace `L_F` spanned by the
//! Hessian-kernel matrices at those zeros decides weak extremality, and for
//! `3x3` forms weak extremality settles strong extremality.  The determinant
//! of the `x`-matrix pencil is a ternary sextic whose singularities are
//! classified (`A1`/`A3`/`A5`) to decide extremality in the sextic cone.
//! A small side module computes translation-method bounds for two-phase
//! composites.
//!
//! All core algebra is generic over the scalar type: exact rationals
//! ([`Rational`]) for certification and `f64` for searches.

pub mod composites;
pub mod error;
pub mod extremality;
pub mod family;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod numerics;
pub mod scalar;
pub mod sextics;
pub mod ternary;

pub use error::CoreError;
pub use scalar::Scalar;

/// Exact arbitrary-precision rational scalar used for all certification work.
pub type Rational = num_rational::BigRational;

/// Biquadratic form over exact rationals.
pub type BiquadraticQ = forms::Biquadratic<Rational>;
/// Biquadratic form over `f64`, used by the sphere sweeps.
pub type BiquadraticF = forms::Biquadratic<f64>;
/// Exact rational matrix.
pub type MatQ = linalg::Mat<Rational>;
/// Floating-point matrix.
pub type MatF = linalg::Mat<f64>;
/// Ternary sextic over exact rationals.
pub type TernarySexticQ = sextics::TernarySextic<Rational>; // placeholder-alias

/// Evidence grade attached to every certified quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    /// Established by exact rational arithmetic.
    Exact,
    /// Established in floating point within the configured tolerances.
    Numeric,
}

impl Grade {
    /// The weaker of two grades.
    pub fn combine(self, other: Grade) -> Grade {
        match (self, other) {
            (Grade::Exact, Grade::Exact) => Grade::Exact,
            _ => Grade::Numeric,
        }
    }
}

impl std::fmt::Display for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Grade::Exact => write!(f, "exact"),
            Grade::Numeric => write!(f, "numeric"),
        }
    }
}
