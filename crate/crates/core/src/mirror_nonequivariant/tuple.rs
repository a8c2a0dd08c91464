//! The twisting tuple `a` and its statistics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series_kernel::rational::{factorial, Rational};

/// A tuple of nonzero integers. Positive entries are convex directions,
/// negative entries concave ones.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct ExponentTuple(Vec<i64>);

/// Derived statistics of a tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TupleStats {
    /// `Σ |a_k|`
    pub abs_sum: u64,
    /// `Π_{a_k>0} a_k / Π_{a_k<0} a_k`
    pub bracket: Rational,
    /// `Π_{a_k>0} a_k!`
    pub factorial: BigInt,
    /// `Π a_k^{|a_k|}`
    pub a_pow_a: BigInt,
    pub l_plus: u32,
    pub l_minus: u32,
    /// `ℓ⁺ − ℓ⁻`
    pub ell: i64,
}

impl ExponentTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&e| e == 0) {
            return Err(Error::InvalidTuple(format!("entry {pos} is zero")));
        }
        Ok(ExponentTuple(entries))
    }

    pub fn empty() -> Self {
        ExponentTuple(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The tuple with a trailing `1` appended.
    pub fn with_one(&self) -> Self {
        let mut v = self.0.clone();
        v.push(1);
        ExponentTuple(v)
    }

    pub fn abs_sum(&self) -> u64 {
        self.0.iter().map(|a| a.unsigned_abs()).sum()
    }

    pub fn l_plus(&self) -> u32 {
        self.0.iter().filter(|&&a| a > 0).count() as u32
    }

    pub fn l_minus(&self) -> u32 {
        self.0.iter().filter(|&&a| a < 0).count() as u32
    }

    pub fn ell(&self) -> i64 {
        self.l_plus() as i64 - self.l_minus() as i64
    }

    pub fn bracket(&self) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &a in &self.0 {
            if a > 0 {
                num *= a;
            } else {
                den *= a;
            }
        }
        Rational::new(num, den)
    }

    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .filter(|&&a| a > 0)
            .fold(BigInt::one(), |acc, &a| acc * factorial(a as u64))
    }

    pub fn a_pow_a(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * num_traits::pow(BigInt::from(a), a.unsigned_abs() as usize))
    }

    pub fn stats(&self) -> TupleStats {
        TupleStats {
            abs_sum: self.abs_sum(),
            bracket: self.bracket(),
            factorial: self.factorial(),
            a_pow_a: self.a_pow_a(),
            l_plus: self.l_plus(),
            l_minus: self.l_minus(),
            ell: self.ell(),
        }
    }
}

/// Statistics of a raw entry list, rejecting zero entries.
pub fn tuple_stats(entries: &[i64]) -> Result<TupleStats> {
    Ok(ExponentTuple::new(entries.to_vec())?.stats())
}

impl FromStr for ExponentTuple {
    type Err = Error;

    /// Comma-separated signed integers; the empty string is the empty tuple.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let entries = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad tuple entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
