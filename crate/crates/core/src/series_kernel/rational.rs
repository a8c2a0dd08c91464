//! Exact rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already keeps itself in
//! lowest terms with a positive denominator. This module only adds the small
//! helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `c^k` for a possibly negative exponent. Fails on `0^negative`.
pub fn rpow(c: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        Ok(num_traits::pow(c.clone(), k as usize))
    } else if c.is_zero() {
        Err(Error::NotInvertible("zero to a negative power".into()))
    } else {
        Ok(num_traits::pow(c.recip(), k.unsigned_abs() as usize))
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn to_text(c: &Rational) -> String {
    c.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

pub fn is_integer(c: &Rational) -> bool {
    c.denom().is_one()
}

pub fn abs(c: &Rational) -> Rational {
    c.abs()
}
