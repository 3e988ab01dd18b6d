//! Gaussian rationals: the field Q(i).
//!
//! A [`GaussianScalar`] is `re + im*i` with both parts arbitrary-precision
//! rationals. `BigRational` keeps every part in lowest terms with a positive
//! denominator, so values are canonical and `==` is structural equality.
//!
//! The text format is `a/b` or `a/b+c/d*i` (signs allowed, `/1` omitted);
//! [`Display`] and [`FromStr`] are mutually inverse on canonical forms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use super::ExactError;

/// An element of Q(i), stored exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianScalar {
    re: BigRational,
    im: BigRational,
}

impl GaussianScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianScalar { re, im }
    }

    /// A real rational value.
    pub fn real(re: BigRational) -> Self {
        GaussianScalar {
            re,
            im: BigRational::zero(),
        }
    }

    /// `num/den` as a real value. Panics if `den == 0`.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianScalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for a real value that is strictly negative; used by renderers.
    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    pub fn conj(&self) -> Self {
        GaussianScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussianScalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    /// Exact division, erroring on a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// An exact square root inside Q(i), if one exists.
    ///
    /// Returns the root with positive real part (or, for nonpositive real
    /// inputs, the one on the positive imaginary axis). `None` means the root
    /// is irrational or leaves Q(i).
    pub fn sqrt(&self) -> Option<Self> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                rational_sqrt(&-self.re.clone()).map(|v| GaussianScalar {
                    re: BigRational::zero(),
                    im: v,
                })
            } else {
                rational_sqrt(&self.re).map(Self::real)
            };
        }
        // For re + im*i with im != 0: |z| must be rational, then
        // u^2 = (re + |z|)/2, v = im / (2u).
        let norm = rational_sqrt(&self.norm_sqr())?;
        let u_sq = (&self.re + &norm) / BigRational::from_integer(BigInt::from(2));
        let u = rational_sqrt(&u_sq)?;
        if u.is_zero() {
            return None;
        }
        let v = &self.im / (&u * BigRational::from_integer(BigInt::from(2)));
        Some(GaussianScalar { re: u, im: v })
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", rat_str(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", rat_str(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", rat_str(&self.re), rat_str(&-self.im.clone()))
        } else {
            write!(f, "{}+{}*i", rat_str(&self.re), rat_str(&self.im))
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num_str.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den_str.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses the imaginary component `[c[/d][*]]i`, sign included in `s`.
fn parse_imag_coef(s: &str) -> Result<BigRational, ExactError> {
    let body = s.strip_suffix('*').unwrap_or(s);
    match body {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(body),
    }
}

impl FromStr for GaussianScalar {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ExactError::Parse(s.to_string()));
        }
        let Some(rest) = s.strip_suffix('i') else {
            return Ok(GaussianScalar::real(parse_rational(s)?));
        };
        // Split "re±imag" at the last interior sign; everything after the
        // leading character with no interior sign is a pure imaginary part.
        let bytes = rest.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| bytes[k] == b'+' || bytes[k] == b'-');
        match split {
            Some(idx) => {
                let re = parse_rational(&rest[..idx])?;
                let im = parse_imag_coef(&rest[idx..])?;
                Ok(GaussianScalar { re, im })
            }
            None => Ok(GaussianScalar {
                re: BigRational::zero(),
                im: parse_imag_coef(rest)?,
            }),
        }
    }
}

impl Add for GaussianScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianScalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianScalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianScalar {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // Fast path: both real. Structure constants are overwhelmingly real.
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianScalar {
                re: self.re * rhs.re,
                im: self.im,
            };
        }
        GaussianScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianScalar {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Zero for GaussianScalar {
    fn zero() -> Self {
        GaussianScalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianScalar {
    fn one() -> Self {
        GaussianScalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl FromPrimitive for GaussianScalar {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_int(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::real(BigRational::from_integer(BigInt::from(n))))
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
}
