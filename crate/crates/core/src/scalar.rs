//! Scalar abstraction: the algebra is written once, over any field that
//! implements [`Scalar`], and instantiated with exact rationals or floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Field scalar the core algebra is generic over.
///
/// `EXACT` distinguishes arithmetic without rounding (rationals) from
/// floating point; exact scalars get zero-tolerance equality tests
/// throughout, floats go through the configured tolerances.
pub trait Scalar:
    Num
    + Signed
    + Clone
    + PartialOrd
    + FromPrimitive
    + ToPrimitive
    + std::fmt::Debug
    + std::fmt::Display
    + 'static
{
    const EXACT: bool;

    /// Exact square root if one exists in the field, `None` otherwise.
    fn try_sqrt(&self) -> Option<Self>;

    /// The fraction `num/den` as a scalar.
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).unwrap() / Self::from_i64(den).unwrap()
    }

    /// Lossy `f64` view (exact for `f64`, approximate for rationals).
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).unwrap()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn try_sqrt(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn try_sqrt(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn try_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // Ratio keeps the sign in the numerator and the stored form reduced.
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(BigRational::new(ns, ds))
        } else {
            None
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Parses a rational from a `"p/q"` or `"p"` string (decimal literals such as
/// `"0.75"` are also accepted).
pub fn parse_rational(s: &str) -> Result<BigRational, crate::CoreError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| crate::CoreError::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| crate::CoreError::Parse(format!("bad denominator in {s:?}")))?;
        if d == BigInt::from(0) {
            return Err(crate::CoreError::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.trim();
        let scale = BigInt::from(10u8).pow(digits.len() as u32);
        let neg = int.trim_start().starts_with('-');
        let whole: BigInt = if int.trim() == "-" || int.trim().is_empty() {
            BigInt::from(0)
        } else {
            int.trim()
                .parse()
                .map_err(|_| crate::CoreError::Parse(format!("bad decimal {s:?}")))?
        };
        let frac_int: BigInt = if digits.is_empty() {
            BigInt::from(0)
        } else {
            digits
                .parse()
                .map_err(|_| crate::CoreError::Parse(format!("bad decimal {s:?}")))?
        };
        let abs = whole.magnitude().clone();
        let mag = BigInt::from(abs) * &scale + frac_int;
        let signed = if neg { -mag } else { mag };
        Ok(BigRational::new(signed, scale))
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| crate::CoreError::Parse(format!("bad rational {s:?}")))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// computed from the continued-fraction convergents.  Returns `None` when no
/// convergent reproduces `x` within `accept_tol`.
pub fn rationalize(x: f64, max_den: u64, accept_tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let target = x;
    let mut v = x;
    // convergents p/q of the continued fraction expansion
    let (mut p0, mut q0): (i128, i128) = (1, 0);
    let (mut p1, mut q1): (i128, i128) = (v.floor() as i128, 1);
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - target).abs() <= accept_tol * target.abs().max(1.0) {
            return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        let frac = v - v.floor();
        if frac.abs() < 1e-18 {
            break;
        }
        v = 1.0 / frac;
        let a = v.floor() as i128;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 as u128 > max_den as u128 || q2 <= 0 {
            break;
        }
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
    }
    let approx = p1 as f64 / q1 as f64;
    if q1 > 0 && (approx - target).abs() <= accept_tol * target.abs().max(1.0) {
        Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::from_ratio(3, 4));
        assert_eq!(parse_rational("-5").unwrap(), BigRational::from_ratio(-5, 1));
        assert_eq!(parse_rational("0.75").unwrap(), BigRational::from_ratio(3, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), BigRational::from_ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn rational_sqrt() {
        let x = BigRational::from_ratio(9, 16);
        assert_eq!(x.try_sqrt().unwrap(), BigRational::from_ratio(3, 4));
        assert!(BigRational::from_ratio(2, 1).try_sqrt().is_none());
        assert!(BigRational::from_ratio(-1, 4).try_sqrt().is_none());
        assert!(BigRational::from_ratio(0, 1).try_sqrt().unwrap().is_zero());
    }

    #[test]
    fn rationalize_recovers_simple_fractions() {
        let r = rationalize(0.5, 1_000_000, 1e-9).unwrap();
        assert_eq!(r, BigRational::from_ratio(1, 2));
        let r = rationalize(0.7499999999998, 1_000_000, 1e-9).unwrap();
        assert_eq!(r, BigRational::from_ratio(3, 4));
        let r = rationalize(0.9999999999995, 1_000_000, 1e-9).unwrap();
        assert!(r.is_one());
        let r = rationalize(-1.0 / 3.0, 1_000_000, 1e-9).unwrap();
        assert_eq!(r, BigRational::from_ratio(-1, 3));
        // an irrational number has no small-denominator representation
        assert!(rationalize(std::f64::consts::SQRT_2, 10, 1e-12).is_none());
    }
}
