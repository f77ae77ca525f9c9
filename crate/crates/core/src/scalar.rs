//! Exact scalar arithmetic over the Gaussian rationals.
//!
//! Every scalar in the engine is a complex number with arbitrary-precision
//! rational real and imaginary parts. Values are kept in canonical form
//! (reduced fraction, positive denominator) so that equality is plain
//! componentwise comparison and no epsilon ever appears.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Failure parsing the textual rational form `p/q` (or bare `p`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational string")]
    Empty,
    #[error("invalid integer part in `{0}`")]
    BadNumerator(String),
    #[error("denominator must be a positive integer in `{0}`")]
    BadDenominator(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p/q` or bare `p`, with an optional sign on `p` and `q > 0`.
///
/// The result is canonicalized, so `"2/4"` parses to the same value as
/// `"1/2"`. A signed or zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_signed_int(num_str)
        .ok_or_else(|| ParseRationalError::BadNumerator(s.to_string()))?;
    let denom = match den_str {
        None => BigInt::one(),
        Some(d) => {
            // The wire form requires a bare positive integer here.
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRationalError::BadDenominator(s.to_string()));
            }
            let d: BigInt = d.parse().expect("digits parse as BigInt");
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            d
        }
    };
    Ok(BigRational::new(numer, denom))
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Formats canonically: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A complex scalar with exact rational real and imaginary parts.
///
/// The conjugate-transpose involution on matrices bottoms out in
/// [`GaussianRational::conj`]; properness (`conj(z)·z = 0 ⟹ z = 0`) holds
/// because `re² + im²` vanishes over the rationals only at zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// Real rational `p/q`. Panics when `q = 0`; intended for literals.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::new(
            BigRational::new(p.into(), q.into()),
            BigRational::zero(),
        )
    }

    /// `(pr/qr) + (pi/qi)·i` from integer literals. Panics on zero denominators.
    pub fn from_ratios(pr: i64, qr: i64, pi: i64, qi: i64) -> Self {
        assert!(qr != 0 && qi != 0, "zero denominator");
        Self::new(
            BigRational::new(pr.into(), qr.into()),
            BigRational::new(pi.into(), qi.into()),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Complex conjugate: real part unchanged, imaginary part negated.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `conj(z)·z` as a rational: `re² + im²`. Nonnegative, zero only at zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact division; the divisor must be nonzero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Ok(Self::new(num.re / &n, num.im / n))
    }

    /// Multiplicative inverse of a nonzero scalar.
    pub fn checked_recip(&self) -> Result<Self, ScalarError> {
        Self::one().checked_div(self)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        if rhs.is_zero() {
            return self.clone();
        }
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // Real factors are the overwhelmingly common case; skip the complex
        // cross terms when an imaginary part is zero.
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussianRational::new(&self.re * &rhs.re, BigRational::zero()),
            (true, false) => {
                GaussianRational::new(&self.re * &rhs.re, &self.re * &rhs.im)
            }
            (false, true) => {
                GaussianRational::new(&self.re * &rhs.re, &self.im * &rhs.re)
            }
            (false, false) => GaussianRational::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add, add; Sub, sub; Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let im_mag = format_rational(&self.im.abs());
        let im_part = if im_mag == "1" {
            "i".to_string()
        } else {
            format!("{im_mag}i")
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_part}")
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(f, "{}{}{}", format_rational(&self.re), sign, im_part)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = ParseRationalError;

    /// Parses a bare rational as a real scalar. Complex values travel as
    /// `{re, im}` pairs in the file formats, not as single strings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(Self::from)
    }
}
